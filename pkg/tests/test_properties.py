"""Randomised invariants over the shifted indecomposables."""

import math

from hypothesis import given, settings
from hypothesis import strategies as st

from kronecker_coslice.core_category import (
    DObject,
    Preinjective,
    Preprojective,
    Regular,
    ShiftedIndec,
    euler_form,
    hom_dim,
    hom_dim_obj,
    k0_class,
    n_coords,
    n_object,
    pair_triangle,
)
from kronecker_coslice.coslicing import INF, CostabSlicing, ExceptionalCoslicing, hn_filtration, metric_distance, verify_tower
from kronecker_coslice.costability import Quintuple, from_quintuple, to_quintuple
from kronecker_coslice.cotstructure import from_triple, member_aisle, member_coaisle

shifts = st.integers(-4, 4)
modules = st.one_of(
    st.builds(Preprojective, st.integers(0, 8)),
    st.builds(Preinjective, st.integers(0, 8)),
    st.builds(Regular, st.sampled_from(["0", "1", "inf"]), st.integers(1, 4)),
)
indecs = st.builds(ShiftedIndec, modules, shifts)
objects = st.lists(indecs, min_size=1, max_size=4).map(DObject)
pair_index = st.integers(-3, 3)
order_param = st.one_of(st.integers(1, 5), st.just(INF))


@given(indecs, indecs)
def test_euler_form_is_alternating_hom(x, y):
    chi = sum((1 if d % 2 == 0 else -1) * hom_dim(x, y.suspend(d)) for d in range(-10, 11))
    assert chi == euler_form(k0_class(x), k0_class(y))


@given(indecs, indecs, shifts)
def test_hom_shift_invariant(x, y, k):
    assert hom_dim(x, y) == hom_dim(x.suspend(k), y.suspend(k))


@given(objects, objects, objects)
def test_hom_obj_bilinear(x, y, z):
    assert hom_dim_obj(x + y, z) == hom_dim_obj(x, z) + hom_dim_obj(y, z)


@given(indecs, pair_index)
def test_pair_triangle_k0(x, n):
    left, right = pair_triangle(x, n)
    kl, kr, kx = k0_class(left), k0_class(right), k0_class(x)
    assert (kl[0] + kr[0], kl[1] + kr[1]) == kx


@given(st.integers(-8, 8), shifts)
def test_n_object_roundtrip(j, k):
    assert n_coords(n_object(j, k)) == (k, j)


@settings(max_examples=200)
@given(objects, pair_index, order_param)
def test_hn_towers_verify(x, n, p):
    c = ExceptionalCoslicing(n, p)
    tower = hn_filtration(x, c)
    assert verify_tower(tower, c, x)


@given(objects, shifts, pair_index, st.integers(0, 4))
def test_aisle_closed_under_desuspension(x, m, n, gap):
    s = from_triple(m, n, gap)
    if member_aisle(x, s):
        assert member_aisle(x.suspend(-1), s)
    if member_coaisle(x, s):
        assert member_coaisle(x.suspend(1), s)


phis = st.floats(-3, 3, allow_nan=False)


@given(st.integers(-2, 2), phis, phis, phis, phis, phis, phis)
def test_metric_triangle_inequality(n, a0, a1, b0, b1, c0, c1):
    qs = [CostabSlicing(n, min(u, v), max(u, v) + 0.01) for u, v in ((a1, a0), (b1, b0), (c1, c0))]
    d = metric_distance
    assert d(qs[0], qs[2]) <= d(qs[0], qs[1]) + d(qs[1], qs[2]) + 1e-9
    assert d(qs[0], qs[1]) == d(qs[1], qs[0])


@given(
    st.integers(-3, 3),
    phis,
    st.floats(0.01, 3),
    st.floats(0.1, 10),
    st.floats(0.1, 10),
)
def test_quintuple_roundtrip(n, phi1, gap, m1, m0):
    q = Quintuple(n, phi1, phi1 + gap, m1, m0)
    back = to_quintuple(from_quintuple(q))
    assert back.n == n and back.phi1 == q.phi1 and back.phi0 == q.phi0
    assert math.isclose(back.m1, m1, rel_tol=1e-9) and math.isclose(back.m0, m0, rel_tol=1e-9)
