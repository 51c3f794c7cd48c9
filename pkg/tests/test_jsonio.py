import json
import math

import pytest
from hypothesis import given
from hypothesis import strategies as st

from pedvis import jsonio


class TestRound9:
    def test_short_floats_pass_through(self):
        assert jsonio.round9(0.5) == 0.5
        assert jsonio.round9(80.0) == 80.0

    def test_long_floats_are_quantized(self):
        assert jsonio.round9(math.pi) == 3.14159265
        assert jsonio.round9(2 * math.pi) == 6.28318531

    def test_integral_floats_stay_exact(self):
        for v in (0.0, 1.0, 160.0, 1e9):
            assert jsonio.round9(v) == v

    @given(x=st.floats(allow_nan=False, allow_infinity=False, width=64))
    def test_idempotent(self, x):
        once = jsonio.round9(x)
        assert jsonio.round9(once) == once

    @given(x=st.floats(min_value=-1e12, max_value=1e12))
    def test_relative_error_bounded(self, x):
        y = jsonio.round9(x)
        if x != 0:
            assert abs(y - x) <= abs(x) * 1e-8


class TestDumps:
    def test_compact_separators(self):
        assert jsonio.dumps({"a": [1, 2], "b": "x"}) == '{"a":[1,2],"b":"x"}'

    def test_tuples_become_arrays(self):
        assert jsonio.dumps((1, (2, 3))) == "[1,[2,3]]"

    def test_floats_quantized_recursively(self):
        doc = {"theta": math.pi, "spans": [(0.0, math.pi)]}
        assert jsonio.dumps(doc) == '{"theta":3.14159265,"spans":[[0.0,3.14159265]]}'

    def test_insertion_order_preserved(self):
        assert jsonio.dumps({"b": 1, "a": 2}) == '{"b":1,"a":2}'

    def test_non_ascii_not_escaped(self):
        assert jsonio.dumps({"name": "Björk"}) == '{"name":"Björk"}'

    def test_nan_rejected(self):
        with pytest.raises(ValueError):
            jsonio.dumps({"x": float("nan")})

    def test_round_trip_stability(self):
        doc = {"r": [80.0, 123.456789123, 2 * math.pi]}
        text = jsonio.dumps(doc)
        assert jsonio.dumps(json.loads(text)) == text
