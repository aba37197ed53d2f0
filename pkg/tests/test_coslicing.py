import math

import pytest

from conftest import I, P, R, obj
from kronecker_coslice.acceptance import example_tower
from kronecker_coslice.core_category import ZERO, DObject, n_object
from kronecker_coslice.coslicing import (
    INF,
    CostabSlicing,
    ExceptionalCoslicing,
    HNTower,
    InsertedCoslicing,
    Lex,
    PhaseKindError,
    Real,
    SplitStabilityData,
    StableTwoPhaseCoslicing,
    Tag,
    TrivialCoslicing,
    TwoObjectCoslicing,
    ZInfCoslicing,
    build_exceptional,
    check_slice_dichotomy,
    coarser_witness_check,
    combine_with_split_data,
    compose,
    coslicing_from_json,
    hn_filtration,
    metric_distance,
    phase_from_json,
    positive_ext_free,
    split_hn_decompose,
    validate_coslicing,
    verify_tower,
)
from kronecker_coslice.cotstructure import from_triple, stable


@pytest.fixture(scope="module")
def corpus(window):
    return window.corpus()


class TestOrder:
    def test_finite_p_interleaving(self):
        e = ExceptionalCoslicing(0, 3)
        # (k+p-1, 1) < (k, 0) < (k+p, 1)
        assert e.lt(Lex(2, 1), Lex(0, 0))
        assert e.lt(Lex(0, 0), Lex(3, 1))

    def test_infinite_p(self):
        e = ExceptionalCoslicing(0, INF)
        assert e.lt(Lex(100, 1), Lex(-100, 0))

    def test_lambda_shifts(self):
        e = ExceptionalCoslicing(2, 2)
        for ph in e.phases(3):
            assert e.lt(ph, e.lam(ph))

    @pytest.mark.parametrize("p", [0, -1, 1.5])
    def test_bad_p(self, p):
        with pytest.raises(ValueError):
            build_exceptional(1, p)

    def test_wrong_phase_kind(self):
        with pytest.raises(PhaseKindError):
            ExceptionalCoslicing(0, 2).key(Tag(0))
        with pytest.raises(PhaseKindError):
            StableTwoPhaseCoslicing(0).key(Tag(3))


class TestValidate:
    def test_exceptional_is_essential(self, corpus):
        rep = validate_coslicing(build_exceptional(1, 3), corpus[:200])
        assert rep["valid"] and not rep["trivial"]

    def test_regular_insertion_fails(self, corpus):
        c = InsertedCoslicing(build_exceptional(1, 3), Lex(0, 0), R(1, tube="x"))
        rep = validate_coslicing(c, corpus)
        assert not rep["valid"]
        assert any(v["check"] == "orthogonality" for v in rep["violations"])

    def test_trivial(self, corpus):
        rep = validate_coslicing(TrivialCoslicing(1), corpus)
        assert rep["valid"] and rep["trivial"]

    @pytest.mark.parametrize(
        "c",
        [TwoObjectCoslicing(0, 2), StableTwoPhaseCoslicing(1), ZInfCoslicing(-1), ExceptionalCoslicing(2, INF)],
        ids=str,
    )
    def test_library(self, c, corpus):
        rep = validate_coslicing(c, corpus)
        assert rep["valid"], rep["violations"][:3]
        assert not rep["trivial"]

    def test_empty_corpus(self):
        with pytest.raises(ValueError):
            validate_coslicing(build_exceptional(0, 1), [])


class TestHN:
    def test_preinjective_tower(self):
        e = ExceptionalCoslicing(1, 2)
        tower = hn_filtration(obj(I(0)), e)
        assert tower.quotients == (
            (obj(P(1)), Lex(0, 1)),
            (DObject({P(0, 1): 2}), Lex(1, 0)),
        )
        assert verify_tower(tower, e, obj(I(0)))

    def test_regular_tower(self):
        e = ExceptionalCoslicing(1, 3)
        x = obj(R(1, tube="x"))
        assert verify_tower(hn_filtration(x, e), e, x)

    def test_non_canonical_tower(self):
        tower = example_tower()
        assert [len(layer) for layer in tower.layers] == [0, 1, 2, 1]
        assert verify_tower(tower, ExceptionalCoslicing(1, 3), obj(R(1)))

    def test_split_equal_phase_rejected(self):
        e = ExceptionalCoslicing(1, 2)
        tower = HNTower(
            (ZERO, obj(P(0)), obj(P(0), P(0))),
            ((obj(P(0)), Lex(0, 0)), (obj(P(0)), Lex(0, 0))),
        )
        assert not verify_tower(tower, e)

    def test_zero(self):
        with pytest.raises(ValueError):
            hn_filtration(ZERO, ExceptionalCoslicing(0, 1))

    def test_all_window_objects(self, corpus):
        for c in (ExceptionalCoslicing(-1, 1), ExceptionalCoslicing(3, 4), ExceptionalCoslicing(0, INF)):
            for x in corpus:
                tower = hn_filtration(x, c)
                assert verify_tower(tower, c, x)


class TestDichotomy:
    def test_exceptional_slices_rigid(self):
        assert set(check_slice_dichotomy(ExceptionalCoslicing(0, 3)).values()) == {"partial-silting"}

    def test_stable_slice(self):
        tags = check_slice_dichotomy(StableTwoPhaseCoslicing(0))
        assert set(tags.values()) == {"suspension-stable"}

    def test_regular_has_self_extension(self):
        assert not positive_ext_free([R(1, tube="x")])
        c = InsertedCoslicing(TwoObjectCoslicing(0, 2), Tag(0), R(1, tube="x"))
        assert "neither" in check_slice_dichotomy(c).values()


class TestCoarser:
    @pytest.mark.parametrize("p", [1, 2, 3])
    def test_two_object(self, p, window):
        coarse = TwoObjectCoslicing(1, p)
        fine, r = coarse.refinement()
        assert fine == ExceptionalCoslicing(1, p)
        assert coarser_witness_check(fine, coarse, r, window.indecomposables(), n_range=window.n_range())

    def test_two_phase(self, window):
        coarse = StableTwoPhaseCoslicing(0)
        fine, r = coarse.refinement()
        assert r(Lex(5, 1)) == Tag(1) and r(Lex(-2, 0)) == Tag(0)
        assert coarser_witness_check(fine, coarse, r, window.indecomposables(), n_range=window.n_range())

    def test_identity(self, window):
        e = ExceptionalCoslicing(1, 3)
        assert coarser_witness_check(e, e, lambda ph: ph, window.indecomposables(), n_range=window.n_range())

    def test_wrong_map(self, window):
        coarse = TwoObjectCoslicing(1, 2)
        fine = ExceptionalCoslicing(1, 2)
        r = lambda e: Tag(e.k)  # noqa: E731
        assert not coarser_witness_check(fine, coarse, r, window.indecomposables(), n_range=window.n_range())

    def test_compose(self):
        r = lambda e: Tag(e.i)  # noqa: E731
        s = lambda t: Tag(0)  # noqa: E731
        assert compose(r, s)(Lex(3, 1)) == Tag(0)


class TestSplitData:
    def test_decompose(self):
        d = SplitStabilityData(("a", "b"), (frozenset({P(1)}), frozenset({P(0)})))
        assert split_hn_decompose(obj(P(0), P(1)), d) == [(obj(P(1)), "a"), (obj(P(0)), "b")]
        assert split_hn_decompose(obj(P(0)), d) == [(obj(P(0)), "b")]
        assert split_hn_decompose(DObject({P(0): 3}), d) == [(DObject({P(0): 3}), "b")]

    def test_unknown_summand(self):
        d = SplitStabilityData(("a",), (frozenset({P(1)}),))
        with pytest.raises(ValueError):
            split_hn_decompose(obj(P(2)), d)

    def test_combine_two_phases(self, corpus):
        spec = from_triple(0, 1, 0)  # co-heart {P_0, P_1}
        d = SplitStabilityData((0, 1), (frozenset({P(1)}), frozenset({P(0)})))
        c = combine_with_split_data(spec, d)
        assert c.gens(Lex(2, 0), 0) == [P(1, 2)]
        assert validate_coslicing(c, corpus)["valid"]

    def test_combine_single_phase(self, corpus):
        spec = from_triple(0, 1, 0)
        d = SplitStabilityData((0,), (frozenset({P(0), P(1)}),))
        c = combine_with_split_data(spec, d)
        assert sorted(c.gens(Lex(1, 0), 0)) == sorted([P(0, 1), P(1, 1)])
        assert validate_coslicing(c, corpus)["valid"]

    def test_combine_rejects_stable(self):
        with pytest.raises(ValueError):
            combine_with_split_data(stable(0), SplitStabilityData((), ()))

    def test_combine_rejects_bad_order(self):
        d = SplitStabilityData((0, 1), (frozenset({P(0)}), frozenset({P(1)})))
        with pytest.raises(ValueError):
            combine_with_split_data(from_triple(0, 1, 0), d)


class TestMetric:
    def test_values(self):
        q = CostabSlicing(0, 0.25, 0.75)
        assert metric_distance(q, q) == 0
        assert metric_distance(q, CostabSlicing(0, 0.25, 0.85)) == pytest.approx(0.1)
        assert metric_distance(q, CostabSlicing(1, 0.25, 0.75)) == math.inf

    def test_phases(self):
        q = CostabSlicing(2, 0.1, 0.6)
        assert q.phase_of(n_object(2, 3)) == Real(3.6)
        assert q.phase_of(n_object(3, -1)) == Real(0.1 - 1)
        assert q.phase_of(R(1)) is None


class TestJson:
    @pytest.mark.parametrize(
        "c",
        [
            ExceptionalCoslicing(1, 3),
            ExceptionalCoslicing(0, INF),
            TwoObjectCoslicing(2, 1),
            StableTwoPhaseCoslicing(0),
            ZInfCoslicing(1),
            TrivialCoslicing(0),
            CostabSlicing(0, 0.2, 0.9),
        ],
        ids=str,
    )
    def test_roundtrip(self, c):
        assert coslicing_from_json(c.presentation()).presentation() == c.presentation()

    def test_phase(self):
        assert phase_from_json(ExceptionalCoslicing(0, 1), [2, 1]) == Lex(2, 1)
        assert phase_from_json(ZInfCoslicing(0), "inf") == Tag(INF)

    def test_unknown(self):
        with pytest.raises(ValueError):
            coslicing_from_json({"type": "nope"})
