"""Hypothesis property suites for the structural operations and maps."""

import hypothesis.strategies as st
from hypothesis import given, settings

from parteq.bijection import (
    finite_glaisher_forward,
    finite_glaisher_inverse,
    glaisher_forward,
    glaisher_inverse,
)
from parteq.classes import ClassParams, enumerate_partitions, is_in_A, is_in_B
from parteq.partition import Partition


@st.composite
def partitions(draw, max_part=25, max_mult=8, max_distinct=8):
    pairs = draw(
        st.dictionaries(
            st.integers(min_value=1, max_value=max_part),
            st.integers(min_value=1, max_value=max_mult),
            max_size=max_distinct,
        )
    )
    return Partition.from_pairs(pairs.items())


@st.composite
def d_free_partitions(draw, d, max_part):
    allowed = [j for j in range(1, max_part + 1) if j % d != 0]
    pairs = draw(
        st.dictionaries(
            st.sampled_from(allowed),
            st.integers(min_value=1, max_value=30),
            max_size=6,
        )
    )
    return Partition.from_pairs(pairs.items())


@given(partitions())
def test_conjugate_involution(p):
    assert p.conjugate().conjugate() == p


@given(partitions())
def test_conjugate_preserves_weight(p):
    assert p.conjugate().weight() == p.weight()


@given(partitions())
def test_conjugate_exchanges_extremes(p):
    assert p.conjugate().largest_part() == p.num_parts()
    assert p.conjugate().num_parts() == p.largest_part()


@given(partitions(), partitions())
def test_add_commutative_and_weight_additive(p, r):
    assert p + r == r + p
    assert (p + r).weight() == p.weight() + r.weight()


@given(partitions(), partitions(), partitions())
def test_add_associative(p, r, s):
    assert (p + r) + s == p + (r + s)


@given(partitions(), partitions())
def test_subtract_inverts_add(p, r):
    assert (p + r) - r == p


@given(partitions())
def test_parse_render_round_trip(p):
    assert Partition.parse(p.render()) == p


@given(st.integers(min_value=0, max_value=25), st.sampled_from([2, 3, 4]))
@settings(max_examples=30, deadline=None)
def test_divisible_parts_conjugate_to_divisible_multiplicities(n, d):
    for p in enumerate_partitions(n):
        parts_divisible = all(part % d == 0 for part, _ in p.entries)
        conj_mults_divisible = all(mult % d == 0 for _, mult in p.conjugate().entries)
        assert parts_divisible == conj_mults_divisible


@given(st.sampled_from([2, 3, 4, 5]), st.data())
def test_glaisher_round_trip(d, data):
    o = data.draw(d_free_partitions(d, max_part=20))
    image = glaisher_forward(o, d)
    assert image.weight() == o.weight()
    assert all(mult < d for _, mult in image.entries)
    assert glaisher_inverse(image, d) == o


@given(st.sampled_from([2, 3, 4]), st.integers(min_value=1, max_value=8), st.data())
def test_finite_glaisher_round_trip_and_bounds(d, m, data):
    o = data.draw(d_free_partitions(d, max_part=m * d - 1))
    image = finite_glaisher_forward(o, d, m)
    assert image.weight() == o.weight()
    assert image.largest_part() <= m * d
    assert all(mult < d for part, mult in image.entries if part <= m)
    assert finite_glaisher_inverse(image, d, m) == o


@given(
    st.integers(min_value=0, max_value=16),
    st.integers(min_value=1, max_value=4),
    st.sampled_from([1, 2, 3]),
    st.integers(min_value=1, max_value=6),
)
@settings(max_examples=60, deadline=None)
def test_equinumerosity_property(n, k, d, m):
    params = ClassParams(n, k, d, m)
    members = list(enumerate_partitions(n))
    count_a = sum(1 for p in members if is_in_A(p, params))
    count_b = sum(1 for p in members if is_in_B(p, params))
    assert count_a == count_b
