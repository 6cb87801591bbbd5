import pytest

import funcfields.signature as signature_module


@pytest.fixture(autouse=True)
def _self_check_signatures():
    """Assert the table-vs-Kummer equivalence on every dispatch in tests."""
    old = signature_module.SELF_CHECK
    signature_module.SELF_CHECK = True
    yield
    signature_module.SELF_CHECK = old
