from __future__ import annotations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from statecomplexity import Transformation, compose


def pointwise_compose(s: Transformation, t: Transformation) -> Transformation:
    # Independent oracle: apply s then t, state by state.
    return Transformation(tuple(t.apply(s.apply(q)) for q in range(s.size)))


def test_transposition_is_involution():
    swap = Transformation.cycle(3, (0, 1))
    assert compose(swap, swap) == Transformation.identity(3)


def test_cycle_then_point_map():
    s = Transformation.cycle(3, (0, 1, 2))
    t = Transformation.point_map(3, 2, 0)
    assert s.images == (1, 2, 0)
    assert compose(s, t) == pointwise_compose(s, t)
    assert compose(s, t).images == (1, 0, 0)


def test_identity_laws():
    one = Transformation.identity(4)
    t = Transformation((2, 2, 0, 1))
    assert compose(one, t) == t
    assert compose(t, one) == t


def test_constant_and_cycle_notation():
    assert Transformation.constant(4, 1).images == (1, 1, 1, 1)
    assert Transformation.constant(5, 1, domain=range(4)).images == (1, 1, 1, 1, 4)
    assert Transformation.cycle(4, range(1, 3)).images == (0, 2, 1, 3)


def test_length_mismatch_is_an_error():
    with pytest.raises(ValueError):
        compose(Transformation.identity(2), Transformation.identity(3))


def test_out_of_range_image_rejected():
    with pytest.raises(ValueError):
        Transformation((0, 3, 1))


@st.composite
def transformation_tuples(draw, count: int):
    n = draw(st.integers(min_value=1, max_value=6))
    return [
        Transformation(tuple(draw(st.integers(0, n - 1)) for _ in range(n)))
        for _ in range(count)
    ]


@given(transformation_tuples(3))
def test_composition_is_associative(triple):
    s, t, u = triple
    assert compose(compose(s, t), u) == compose(s, compose(t, u))


@given(transformation_tuples(2))
def test_compose_matches_pointwise_oracle(pair):
    s, t = pair
    assert compose(s, t) == pointwise_compose(s, t)
