"""
Unit tests for the error hierarchy.
"""

import pytest

from errors import (
    AlgebraError,
    BoundExceededError,
    DimensionMismatchError,
    LongRunRefusedError,
    ParseError,
    ResampleExhaustedError,
    VanishingDenominatorError,
)
from observability import run_context


class TestAlgebraError:
    """Serialization and exit codes."""

    def test_to_dict_carries_run_id(self):
        with run_context(seed=1, command='test') as ctx:
            payload = AlgebraError("boom", details={'x': 1}).to_dict()
        assert payload['success'] is False
        assert payload['error']['code'] == 'ALGEBRA_ERROR'
        assert payload['error']['details'] == {'x': 1}
        assert payload['error']['run_id'] == ctx.run_id

    def test_run_id_outside_context(self):
        assert AlgebraError("boom").to_dict()['error']['run_id']

    @pytest.mark.parametrize("error, code", [
        (ParseError("bad"), 2),
        (LongRunRefusedError("slow"), 2),
        (BoundExceededError('n', 9, 7), 1),
        (VanishingDenominatorError("pole"), 1),
        (ResampleExhaustedError("none"), 1),
    ])
    def test_exit_codes(self, error, code):
        assert error.exit_code == code

    def test_subclasses_share_base(self):
        assert issubclass(DimensionMismatchError, AlgebraError)
        assert issubclass(ParseError, AlgebraError)


class TestStructuredErrors:
    """Errors that build their own message."""

    def test_bound_exceeded_details(self):
        error = BoundExceededError('n', 9, 7)
        assert error.details == {'what': 'n', 'value': 9, 'bound': 7}
        assert '9' in error.message and '7' in error.message

    def test_dimension_mismatch_details(self):
        error = DimensionMismatchError(3, 4)
        assert error.details['left'] == 3
        assert error.details['right'] == 4
        assert error.code == 'DIMENSION_MISMATCH'
