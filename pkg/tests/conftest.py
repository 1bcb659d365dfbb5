import pytest

from gr32485.representations import eval_representation, representation_ids


@pytest.fixture(scope="session")
def rep_results():
    """Every representation evaluated once at default configuration."""
    return {rid: eval_representation(rid) for rid in representation_ids()}


@pytest.fixture(scope="session")
def rep_values(rep_results):
    return {rid: res.value for rid, res in rep_results.items()}
