"""The twelve acceptance criteria as callable checks.

Each ``criterion_*`` function returns a :class:`CriterionResult`.  They are
shared by ``tests/test_acceptance.py`` and the ``selftest`` CLI command.
"""

from __future__ import annotations

import math
import random
import time
from dataclasses import dataclass, field
from typing import Callable

from .core_category import (
    DObject,
    Preinjective,
    Preprojective,
    Regular,
    ShiftedIndec,
    hom_dim,
    k0_class,
    n_object,
    standard_triangle,
)
from .coslicing import (
    INF,
    ExceptionalCoslicing,
    HNTower,
    InsertedCoslicing,
    Lex,
    StableTwoPhaseCoslicing,
    Tag,
    TwoObjectCoslicing,
    ZInfCoslicing,
    hn_filtration,
    metric_distance,
    validate_coslicing,
    verify_tower,
)
from .costability import (
    CostabCondition,
    Quintuple,
    component_walk,
    costab_distance,
    from_quintuple,
    same_component,
    to_quintuple,
    validate_condition,
    walk_gap,
)
from .cotstructure import (
    boundedness_class,
    boundedness_from_witnesses,
    boundedness_witnesses,
    classify_all,
    co_heart,
    co_heart_from_membership,
    coarse_member_aisle,
    induce_cotstructure,
    is_silting,
    member_aisle,
    pair_to_triple,
    predicted_pairs,
    silting_search,
    verify_cotstructure_axioms,
)
from .matrix_oracle import hom_dim_oracle, hom_dim_oracle_shifted
from .window import WindowConfig

P_VALUES = (1, 2, 3, 4, INF)
TOL = 1e-12


@dataclass
class CriterionResult:
    number: int
    name: str
    passed: bool
    detail: str = ""
    seconds: float = 0.0
    failures: list = field(default_factory=list)

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return f"[{status}] criterion {self.number:2d}: {self.name} ({self.seconds:.2f}s) {self.detail}".rstrip()


def _timed(number: int, name: str, body: Callable[[], tuple[bool, str, list]]) -> CriterionResult:
    start = time.perf_counter()
    ok, detail, failures = body()
    return CriterionResult(number, name, ok, detail, time.perf_counter() - start, failures[:10])


def criterion_1(w: WindowConfig) -> CriterionResult:
    def body():
        objs = w.indecomposables()
        start = time.perf_counter()
        bad = [
            (str(x), str(y))
            for x in objs
            for y in objs
            if hom_dim(x, y) != hom_dim_oracle_shifted(x, y)
        ]
        elapsed = time.perf_counter() - start
        ok = not bad and elapsed < 60
        return ok, f"{len(objs) ** 2} pairs, {len(bad)} mismatches, {elapsed:.1f}s", bad

    return _timed(1, "hom table equals matrix oracle", body)


def criterion_2(w: WindowConfig) -> CriterionResult:
    def body():
        bad = []
        regs = [ShiftedIndec(r, k) for k in w.shifts for r in w.regular_modules()]
        pps = [ShiftedIndec(Preprojective(t)) for t in range(w.max_pp_index + 1)]
        pis = [ShiftedIndec(Preinjective(s)) for s in range(w.max_pi_index + 1)]
        for R in regs:
            if hom_dim(R, R.suspend()) < 1:
                bad.append(("1", str(R)))
            for R2 in regs:
                if R2.indec.tube != R.indec.tube and (hom_dim(R, R2) or hom_dim(R, R2.suspend())):  # type: ignore[union-attr]
                    bad.append(("2", str(R), str(R2)))
            for P in pps:
                P = P.suspend(R.shift)
                if not (hom_dim(R.suspend(-1), P) > 0 and hom_dim(P, R) > 0):
                    bad.append(("4", str(R), str(P)))
            for I in pis:
                I = I.suspend(R.shift)
                if not (hom_dim(R, I) > 0 and hom_dim(I, R.suspend()) > 0):
                    bad.append(("5", str(R), str(I)))
        for i in w.n_range():
            for k in w.shifts:
                if hom_dim(n_object(i, k), n_object(i - 1, k + 1)):
                    bad.append(("3", i, k))
        # the oracle settles the true dimension of Hom(R, Sigma R)
        for r in w.regular_modules():
            if hom_dim_oracle(r, r, 1) != r.length:
                bad.append(("1-oracle", str(r)))
        return not bad, f"{len(regs)} regular instances", bad

    return _timed(2, "standard facts (1)-(5)", body)


def criterion_3(w: WindowConfig) -> CriterionResult:
    def body():
        bad = []
        mods = [Preprojective(t) for t in range(w.max_pp_index + 1)]
        mods += [Preinjective(s) for s in range(w.max_pi_index + 1)]
        mods += w.regular_modules()
        for x in mods:
            left, mid, right = standard_triangle(x)
            kl, km, kr = k0_class(left), k0_class(mid), k0_class(right)
            if km != (kl[0] + kr[0], kl[1] + kr[1]):
                bad.append(str(x))
        return not bad, f"{len(mods)} triangles", bad

    return _timed(3, "standard triangles are K0 additive", body)


def example_tower() -> HNTower:
    """A non-canonical tower of R_{x,1}: P_1, then P_0, then (Sigma P_0)^2."""
    P0, P1 = ShiftedIndec(Preprojective(0)), ShiftedIndec(Preprojective(1))
    R = DObject.of(Regular("0", 1))
    return HNTower(
        layers=(DObject(), DObject([P1]), DObject([P0, P1]), R),
        quotients=(
            (DObject([P1]), Lex(0, 1)),
            (DObject([P0]), Lex(0, 0)),
            (DObject({P0.suspend(): 2}), Lex(1, 0)),
        ),
    )


def criterion_4(w: WindowConfig) -> CriterionResult:
    def body():
        bad = []
        corpus = w.corpus()
        bound = w.max_shift + 1
        for n in w.pair_indices:
            for p in P_VALUES:
                rep = validate_coslicing(ExceptionalCoslicing(n, p), corpus, bound, w.n_range())
                if not rep["valid"] or rep["trivial"]:
                    bad.append((n, p, rep["violations"][:2]))
        R = DObject.of(Regular(w.tube_labels[0], 1))
        for p in P_VALUES:
            E = ExceptionalCoslicing(1, p)
            if not verify_tower(example_tower(), E, R):
                bad.append(("example tower", p))
            quots = [q for q, _ in hn_filtration(R, E).quotients]
            if quots != [DObject([n_object(2)]), DObject([n_object(1, 1)])]:
                bad.append(("canonical tower", p, quots))
        npairs = len(w.pair_indices) * len(P_VALUES)
        return not bad, f"{npairs} co-slicings on {len(corpus)} objects", bad

    return _timed(4, "exceptional co-slicings are valid", body)


def criterion_5(w: WindowConfig) -> CriterionResult:
    def body():
        bad = []
        count = 0
        bound = w.max_shift + 1
        for n in w.pair_indices:
            for p in P_VALUES:
                E = ExceptionalCoslicing(n, p)
                for r in w.regular_modules():
                    R = ShiftedIndec(r)
                    for ph in E.phases(w.max_shift):
                        count += 1
                        rep = validate_coslicing(InsertedCoslicing(E, ph, R), [DObject([R])], bound)
                        if rep["valid"] or not any(v["check"] == "orthogonality" for v in rep["violations"]):
                            bad.append((n, p, str(r), str(ph)))
        return not bad, f"{count} insertions rejected" if not bad else f"{len(bad)} accepted", bad

    return _timed(5, "no regular semistables", body)


def criterion_6(w: WindowConfig) -> CriterionResult:
    def body():
        start = time.perf_counter()
        found = silting_search(w, 3)
        pairs = set(found.get(2, []))
        predicted = predicted_pairs(w)
        bad = []
        if found.get(3):
            bad.append(("triple", sorted(map(str, found[3][0]))))
        if pairs != predicted:
            bad.append(("pairs differ", len(pairs - predicted), len(predicted - pairs)))
        for pair in pairs:
            tr = pair_to_triple(pair)
            if tr is None or tr[2] < 0 or not is_silting(pair, w):
                bad.append(("pair", sorted(map(str, pair))))
        elapsed = time.perf_counter() - start
        if elapsed >= 300:
            bad.append(("runtime", elapsed))
        detail = f"{len(found[1])} singles, {len(pairs)} pairs, {len(found.get(3, []))} triples"
        return not bad, detail, bad

    return _timed(6, "silting classification", body)


def criterion_7(w: WindowConfig) -> CriterionResult:
    def body():
        specs = classify_all(w)
        corpus = w.corpus()
        universe = w.indecomposables()
        bad = []
        families = {s.family for s in specs}
        if len(families) < 4:
            bad.append(("families", sorted(families)))
        for s in specs:
            rep = verify_cotstructure_axioms(s, corpus, samples=500, seed=w.seed)
            if not rep["pass"]:
                bad.append(("axioms", s.to_json(), rep["checks"]))
            closed = co_heart(s)
            if closed & set(universe) != co_heart_from_membership(s, universe):
                bad.append(("co-heart", s.to_json()))
            if s.family == "stable" and closed:
                bad.append(("stable co-heart", s.to_json()))
        return not bad, f"{len(specs)} specs", bad

    return _timed(7, "co-t-structure axioms and co-hearts", body)


def criterion_8(w: WindowConfig) -> CriterionResult:
    def body():
        corpus = w.corpus()
        bad = []
        specs = classify_all(w, crosscheck=False)
        for s in specs:
            by_phase = boundedness_class(s)
            by_witness = boundedness_from_witnesses(boundedness_witnesses(s, corpus, 2 * (w.max_shift + w.max_p) + 4))
            if not by_phase == by_witness == s.family:
                bad.append((s.to_json(), by_phase, by_witness))
        return not bad, f"{len(specs)} specs", bad

    return _timed(8, "boundedness classes", body)


def coarse_library(w: WindowConfig) -> list[tuple]:
    """``(coarse co-slicing, cut)`` pairs from the classification of co-slicings."""
    out = []
    for t in w.pair_indices:
        for p in w.p_values:
            for c in w.shifts:
                out.append((TwoObjectCoslicing(t, p), Tag(c)))
        out.append((StableTwoPhaseCoslicing(t), Tag(1)))
        for c in w.shifts:
            out.append((ZInfCoslicing(t), Tag(c)))
    return out


def criterion_9(w: WindowConfig) -> CriterionResult:
    def body():
        corpus = [x for x in w.corpus() if x]
        bad = []
        lib = coarse_library(w)
        for coarse, cut in lib:
            fine, r = coarse.refinement()
            spec = induce_cotstructure(coarse, cut)
            for x in corpus:
                a = coarse_member_aisle(x, coarse, cut)
                b = member_aisle(x, spec)
                c = all(coarse.le(r(ph), cut) for _, ph in hn_filtration(x, fine).quotients)
                if not a == b == c:
                    bad.append((coarse.name, str(cut), repr(x), a, b, c))
                    break
        return not bad, f"{len(lib)} coarse cuts on {len(corpus)} objects", bad

    return _timed(9, "coarser co-slicings induce the same co-t-structures", body)


def random_quintuple(rng: random.Random, ns: range) -> Quintuple:
    phi1 = rng.uniform(-3, 3)
    return Quintuple(
        rng.choice(list(ns)), phi1, phi1 + rng.uniform(1e-3, 3), rng.uniform(0.05, 5), rng.uniform(0.05, 5)
    )


def criterion_10(w: WindowConfig) -> CriterionResult:
    def body():
        rng = random.Random(w.seed)
        bad = []
        for _ in range(1000):
            q = random_quintuple(rng, w.pair_indices)
            c = from_quintuple(q)
            q2 = to_quintuple(c)
            diffs = [abs(q.phi1 - q2.phi1), abs(q.phi0 - q2.phi0)]
            diffs += [abs(q.m1 - q2.m1) / max(1.0, q.m1), abs(q.m0 - q2.m0) / max(1.0, q.m0)]
            if q.n != q2.n or max(diffs) > TOL:
                bad.append(("round trip", q.to_json(), max(diffs)))
            if from_quintuple(q2) != c and costab_distance(from_quintuple(q2), c) > TOL:
                bad.append(("inverse round trip", q.to_json()))
            if not validate_condition(c)["pass"]:
                bad.append(("validate", q.to_json()))
            flipped = Quintuple(q.n, q.phi0, q.phi1, q.m1, q.m0)
            try:
                from_quintuple(flipped)
                bad.append(("accepted phi1 > phi0", flipped.to_json()))
            except ValueError:
                pass
            forced = CostabCondition(c.charge, type(c.slicing)(q.n, q.phi0, q.phi1))
            if validate_condition(forced)["pass"]:
                bad.append(("validate accepted phi1 > phi0", q.to_json()))
        return not bad, "1000 quintuples", bad

    return _timed(10, "co-stability quintuple round trip", body)


def criterion_11(w: WindowConfig) -> CriterionResult:
    def body():
        rng = random.Random(w.seed + 11)
        ns = range(w.pair_index_range[0], w.pair_index_range[0] + 2)
        bad = []
        walks = 0
        for _ in range(200):
            c1 = from_quintuple(random_quintuple(rng, ns))
            c2 = from_quintuple(random_quintuple(rng, ns))
            same = same_component(c1, c2)
            if same != (c1.n == c2.n):
                bad.append(("same_component", c1.n, c2.n))
            if math.isfinite(costab_distance(c1, c2)) != same:
                bad.append(("finite distance", c1.n, c2.n))
            if same:
                gap = walk_gap(c1, c2)
                for steps in (10, 100):
                    path = component_walk(c1, c2, steps)
                    walks += 1
                    worst = max(costab_distance(a, b) for a, b in zip(path, path[1:]))
                    if worst > 2 * gap / steps + TOL or not all(validate_condition(c)["pass"] for c in path):
                        bad.append(("walk", steps, worst, gap))
            else:
                try:
                    component_walk(c1, c2, 10)
                    bad.append(("cross-component walk", c1.n, c2.n))
                except ValueError:
                    pass
        return not bad, f"200 pairs, {walks} walks", bad

    return _timed(11, "component structure", body)


def criterion_12(w: WindowConfig) -> CriterionResult:
    def body():
        rng = random.Random(w.seed + 12)
        ns = range(w.pair_index_range[0], w.pair_index_range[0] + 2)
        bad = []
        for _ in range(100):
            cs = [from_quintuple(random_quintuple(rng, ns)) for _ in range(3)]
            for name, d in (
                ("metric", lambda a, b: metric_distance(a.slicing, b.slicing)),
                ("costab", costab_distance),
            ):
                a, b, c = cs
                if d(a, a) != 0:
                    bad.append((name, "identity"))
                dab, dba = d(a, b), d(b, a)
                if not (dab == dba or abs(dab - dba) <= TOL):
                    bad.append((name, "symmetry", dab, dba))
                if d(a, c) > d(a, b) + d(b, c) + TOL:
                    bad.append((name, "triangle", d(a, c), d(a, b), d(b, c)))
        return not bad, "100 triples", bad

    return _timed(12, "metric axioms", body)


CRITERIA = [
    criterion_1,
    criterion_2,
    criterion_3,
    criterion_4,
    criterion_5,
    criterion_6,
    criterion_7,
    criterion_8,
    criterion_9,
    criterion_10,
    criterion_11,
    criterion_12,
]


def run_all(w: WindowConfig | None = None) -> list[CriterionResult]:
    w = w or WindowConfig()
    return [crit(w) for crit in CRITERIA]
