"""Input type validation and canonicalization."""

from __future__ import annotations

import math

import numpy as np
import pytest

from ginikit.errors import DataError, ParameterDomainError
from ginikit.sample import ExponentPair, PositiveSample


class TestPositiveSample:
    def test_basic_construction(self):
        s = PositiveSample([1.0, 2.0, 3.0])
        assert s.n == 3
        assert len(s) == 3
        assert list(s.weights) == [1.0, 1.0, 1.0]
        assert s.min_value == 1.0
        assert s.max_value == 3.0
        assert not s.is_uniform

    def test_logs_precomputed(self):
        s = PositiveSample([2.0, 8.0], [1.0, 3.0])
        assert list(s.log_values) == [math.log(2.0), math.log(8.0)]
        assert list(s.log_weights) == [0.0, math.log(3.0)]

    def test_uniform_detection(self):
        assert PositiveSample([5.0, 5.0, 5.0]).is_uniform
        assert PositiveSample([5.0]).is_uniform
        # uneven weights do not break uniformity of equal values
        assert PositiveSample([5.0, 5.0], [1.0, 9.0]).is_uniform
        assert not PositiveSample([5.0, 5.0000001]).is_uniform

    def test_subnormal_and_huge_values_accepted(self):
        s = PositiveSample([5e-324, 1e300])
        assert s.min_value == 5e-324
        assert math.isfinite(s.log_values[0])

    @pytest.mark.parametrize(
        "values",
        [
            [],
            [0.0, 1.0],
            [-1.0, 2.0],
            [float("nan")],
            [float("inf")],
            [[1.0, 2.0]],
        ],
    )
    def test_bad_values_rejected(self, values):
        with pytest.raises(DataError):
            PositiveSample(values)

    @pytest.mark.parametrize("weights", [[1.0], [1.0, 0.0], [1.0, -2.0], [1.0, float("nan")]])
    def test_bad_weights_rejected(self, weights):
        with pytest.raises(DataError):
            PositiveSample([1.0, 2.0], weights)

    def test_non_numeric_rejected(self):
        with pytest.raises(DataError):
            PositiveSample(["a", "b"])

    def test_immutable(self):
        s = PositiveSample([1.0, 2.0])
        with pytest.raises(AttributeError):
            s.values = np.array([9.0])
        with pytest.raises(ValueError):
            s.values[0] = 9.0

    def test_input_array_not_aliased(self):
        source = np.array([1.0, 2.0])
        s = PositiveSample(source)
        source[0] = 99.0
        assert s.values[0] == 1.0 or s.values.base is not source


class TestExponentPair:
    def test_canonical_order(self):
        pair = ExponentPair(0.0, 2.0)
        assert (pair.p, pair.q) == (2.0, 0.0)
        assert pair == ExponentPair(2.0, 0.0)

    def test_gap(self):
        assert ExponentPair(3.0, -1.0).gap == 4.0
        assert ExponentPair(1.5, 1.5).gap == 0.0

    @pytest.mark.parametrize("p,q", [(float("inf"), 0.0), (0.0, float("-inf")), (float("nan"), 1.0)])
    def test_non_finite_rejected(self, p, q):
        with pytest.raises(ParameterDomainError):
            ExponentPair(p, q)

    def test_non_numeric_rejected(self):
        with pytest.raises(ParameterDomainError):
            ExponentPair("a", 1.0)

    def test_integer_coercion(self):
        pair = ExponentPair(2, 1)
        assert isinstance(pair.p, float)
        assert pair.p == 2.0
