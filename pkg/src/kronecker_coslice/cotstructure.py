"""The four families of co-t-structures on D^b(KQ) and silting checks."""

from __future__ import annotations

import random
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from typing import Any, Iterable, Sequence

from .core_category import (
    ZERO,
    DObject,
    Regular,
    ShiftedIndec,
    hom_dim,
    hom_dim_obj,
    k0_class,
    n_coords,
    n_object,
    pair_triangle,
)
from .coslicing import (
    INF,
    ExceptionalCoslicing,
    GeneralCoslicing,
    Lex,
    Phase,
    StableTwoPhaseCoslicing,
    Tag,
    TwoObjectCoslicing,
    ZInfCoslicing,
    hn_filtration,
    positive_ext_free,
)
from .window import WindowConfig

FAMILIES = ("bounded", "bounded_below", "bounded_above", "stable")
_FAMILY_RANK = {f: i for i, f in enumerate(FAMILIES)}


@dataclass(frozen=True)
class CoTStructureSpec:
    family: str
    n: int
    p: int | float | None = None
    cut: Lex | None = None

    def __post_init__(self) -> None:
        if self.family not in FAMILIES:
            raise ValueError(f"unknown family {self.family!r}")
        if self.family == "bounded":
            if self.cut is None or self.p is None or self.p == INF or self.p < 0:
                raise ValueError("bounded specs need a finite p and a cut")
        elif self.family == "bounded_below":
            if self.cut is None or self.cut.i != 0:
                raise ValueError("bounded-below specs need a cut of the form (k,0)")
        elif self.family == "bounded_above":
            if self.cut is None or self.cut.i != 1:
                raise ValueError("bounded-above specs need a cut of the form (k,1)")

    @property
    def order_param(self) -> int | float:
        return self.p if self.family == "bounded" else INF  # type: ignore[return-value]

    def coslicing(self) -> ExceptionalCoslicing:
        return _exceptional(self.n, self.order_param)

    def phase_in_aisle(self, ph: Lex) -> bool:
        if self.family == "stable":
            return ph.i == 1
        return self.coslicing().le(ph, self.cut)  # type: ignore[arg-type]

    def triple(self) -> tuple[int, int, int]:
        """``(m, n, p)`` with co-heart ``{Sigma^m N_n, Sigma^{m+p} N_{n+1}}``."""
        if self.family != "bounded":
            raise ValueError("only bounded specs have a triple")
        k, i = self.cut.k, self.cut.i  # type: ignore[union-attr]
        p = int(self.p)  # type: ignore[arg-type]
        return (k - p, self.n, p) if i == 1 else (k, self.n, p - 1)

    def sort_key(self) -> tuple:
        cut = (self.cut.k, self.cut.i) if self.cut else (0, 0)
        m = self.triple()[0] if self.family == "bounded" else 0
        p = -1 if self.p is None else self.p
        return (_FAMILY_RANK[self.family], self.n, m, p, cut)

    def to_json(self) -> dict:
        d: dict[str, Any] = {"family": self.family, "n": self.n}
        if self.cut is not None:
            d["cut"] = [self.cut.k, self.cut.i]
        if self.family == "bounded":
            d["p"] = self.p
            m, _, gap = self.triple()
            d["triple"] = [m, self.n, gap]
        return d

    @classmethod
    def from_json(cls, data: dict) -> "CoTStructureSpec":
        family = data["family"]
        n = int(data["n"])
        if family == "bounded" and "triple" in data and "cut" not in data:
            m, n2, gap = data["triple"]
            return from_triple(int(m), int(n2), int(gap))
        cut = Lex(*map(int, data["cut"])) if "cut" in data else None
        p = data.get("p")
        return cls(family, n, None if p is None else int(p), cut)


def bounded(n: int, p: int, cut: Lex) -> CoTStructureSpec:
    if p < 1:
        raise ValueError("order parameter must be >= 1")
    return CoTStructureSpec("bounded", n, p, cut)


def bounded_below(n: int, k: int) -> CoTStructureSpec:
    return CoTStructureSpec("bounded_below", n, None, Lex(k, 0))


def bounded_above(n: int, k: int) -> CoTStructureSpec:
    return CoTStructureSpec("bounded_above", n, None, Lex(k, 1))


def stable(n: int) -> CoTStructureSpec:
    return CoTStructureSpec("stable", n)


def from_triple(m: int, n: int, gap: int) -> CoTStructureSpec:
    """Canonical bounded spec with co-heart ``{Sigma^m N_n, Sigma^{m+gap} N_{n+1}}``."""
    if gap < 0:
        raise ValueError("gap must be >= 0")
    return bounded(n, gap + 1, Lex(m, 0))


def corrupted_spec(n: int, cut: Lex) -> CoTStructureSpec:
    """A bounded spec on the inadmissible order p = 0, for negative tests."""
    return CoTStructureSpec("bounded", n, 0, cut)


@lru_cache(maxsize=None)
def _exceptional(n: int, p: int | float) -> ExceptionalCoslicing:
    return ExceptionalCoslicing(n, p, _allow_p0=True)


@lru_cache(maxsize=200_000)
def _phases_of(x: DObject, n: int, p: int | float) -> tuple[Lex, ...]:
    if not x:
        return ()
    return tuple(ph for _, ph in hn_filtration(x, _exceptional(n, p)).quotients)  # type: ignore[misc]


def _phases(x: DObject, s: CoTStructureSpec) -> tuple[Lex, ...]:
    return _phases_of(x, s.n, s.order_param)


def member_aisle(x: DObject, s: CoTStructureSpec) -> bool:
    return all(s.phase_in_aisle(ph) for ph in _phases(x, s))


def member_coaisle(x: DObject, s: CoTStructureSpec) -> bool:
    return not any(s.phase_in_aisle(ph) for ph in _phases(x, s))


def co_heart(s: CoTStructureSpec) -> frozenset[ShiftedIndec]:
    if s.family == "stable":
        return frozenset()
    if s.family == "bounded":
        m, n, gap = s.triple()
        return frozenset({n_object(n, m), n_object(n + 1, m + gap)})
    k = s.cut.k  # type: ignore[union-attr]
    j = s.n if s.family == "bounded_below" else s.n + 1
    return frozenset({n_object(j, k)})


def co_heart_from_membership(s: CoTStructureSpec, universe: Iterable[ShiftedIndec]) -> frozenset:
    return frozenset(
        x for x in universe if member_aisle(DObject([x]), s) and member_coaisle(DObject([x.suspend()]), s)
    )


def approximation_triangle(x: DObject, s: CoTStructureSpec) -> tuple[DObject, DObject]:
    a = b = ZERO
    c = s.coslicing()
    for summand, mult in x.items:
        tower = hn_filtration(DObject({summand: mult}), c)
        low = [(q, ph) for q, ph in tower.quotients if s.phase_in_aisle(ph)]
        if len(low) == len(tower.quotients):
            a = a + DObject({summand: mult})
        elif not low:
            b = b + DObject({summand: mult})
        else:
            pieces = [q for q, _ in tower.quotients]
            a = a + pieces[0]
            b = b + pieces[1]
    return a, b


def _reaches_everything(s: CoTStructureSpec, side: str) -> bool:
    # phase criterion: every lambda-orbit meets the side
    big = 10**6
    if side == "aisle":
        return all(s.phase_in_aisle(Lex(-big, i)) for i in (0, 1))
    return all(not s.phase_in_aisle(Lex(big, i)) for i in (0, 1))


def boundedness_class(s: CoTStructureSpec) -> str:
    below = _reaches_everything(s, "aisle")
    above = _reaches_everything(s, "coaisle")
    if below and above:
        return "bounded"
    if below:
        return "bounded_below"
    if above:
        return "bounded_above"
    return "stable"


def boundedness_witnesses(s: CoTStructureSpec, corpus: Sequence[DObject], reach: int = 18) -> dict:
    """Does every corpus object lie in some ``Sigma^i A`` (resp. ``Sigma^i B``), ``|i| <= reach``?"""

    def covered(x: DObject, pred) -> bool:
        return any(pred(x.suspend(-i), s) for i in range(-reach, reach + 1))

    objs = [x for x in corpus if x]
    return {
        "aisle_exhaustive": all(covered(x, member_aisle) for x in objs),
        "coaisle_exhaustive": all(covered(x, member_coaisle) for x in objs),
    }


def boundedness_from_witnesses(w: dict) -> str:
    below, above = w["aisle_exhaustive"], w["coaisle_exhaustive"]
    return {(True, True): "bounded", (True, False): "bounded_below", (False, True): "bounded_above"}.get(
        (below, above), "stable"
    )


def induce_cotstructure(c: GeneralCoslicing, partition: Any) -> CoTStructureSpec:
    """Classify the co-t-structure cut out of a library co-slicing.

    ``partition`` is either the largest phase of the lower part, or a pair of
    phase collections ``(lower, upper)``.
    """
    if isinstance(partition, tuple) and len(partition) == 2 and not isinstance(partition, (Lex, Tag)):
        lower, upper = map(list, partition)
        if not lower or not upper:
            raise ValueError("both parts of the partition must be nonempty")
        for a in lower:
            for b in upper:
                if not c.lt(a, b):
                    raise ValueError(f"partition is not order compatible: {a} vs {b}")
        cut = max(lower, key=c.key)
    else:
        cut = partition
    c.key(cut)
    if isinstance(c, ExceptionalCoslicing):
        if c.p != INF:
            return bounded(c.n, c.p, cut)
        return bounded_below(c.n, cut.k) if cut.i == 0 else bounded_above(c.n, cut.k)
    if isinstance(c, TwoObjectCoslicing):
        return bounded(c.t, c.p, Lex(cut.v, 0))
    if isinstance(c, ZInfCoslicing):
        if cut.v == INF:
            raise ValueError("cut at infinity leaves an empty upper part")
        return bounded_above(c.t, int(cut.v))
    if isinstance(c, StableTwoPhaseCoslicing):
        if cut.v != 1:
            raise ValueError("cut must separate the two slices")
        return stable(c.t)
    raise ValueError(f"{c.name} is outside the classified library")


# Silting.

SiltingSet = frozenset


def is_partial_silting(S: Iterable[ShiftedIndec]) -> bool:
    return positive_ext_free(list(S))


def _shift_class(x: ShiftedIndec) -> Any:
    nc = n_coords(x)
    return ("N", nc[1]) if nc is not None else ("R", x.indec)


def is_silting(S: Iterable[ShiftedIndec], window: WindowConfig) -> bool:
    """Thick-closure saturation from S reaches every window indecomposable."""
    S = list(S)
    if not S or not is_partial_silting(S):
        return False
    js = range(window.n_range().start - 2, window.n_range().stop + 2)
    targets = {_shift_class(x) for x in window.indecomposables()}
    regulars = {x.indec for x in window.indecomposables() if isinstance(x.indec, Regular)}
    universe = [n_object(j) for j in js] + [ShiftedIndec(r) for r in regulars]
    have = {_shift_class(x) for x in S}
    changed = True
    while changed and not targets <= have:
        changed = False
        for j in js:
            for x in universe:
                left, right = pair_triangle(x, j)
                if not left or not right:
                    continue
                terms = [_shift_class(left.distinct()[0]), _shift_class(x), _shift_class(right.distinct()[0])]
                missing = [t for t in terms if t not in have]
                if len(missing) == 1:
                    have.add(missing[0])
                    changed = True
    return targets <= have


def complete_almost_silting(S: Iterable[ShiftedIndec], window: WindowConfig) -> list[frozenset]:
    S = list(S)
    if len(S) != 1 or n_coords(S[0]) is None:
        raise ValueError("expected a single non-regular indecomposable")
    x = S[0]
    m, t = n_coords(x)  # type: ignore[misc]
    out = []
    for i in range(0, 2 * window.max_shift + 1):
        y = n_object(t + 1, m + i)
        if window.contains(y):
            out.append(frozenset({x, y}))
    for j in range(0, -2 * window.max_shift - 1, -1):
        y = n_object(t - 1, m + j)
        if window.contains(y):
            out.append(frozenset({y, x}))
    return out


def silting_search(window: WindowConfig, max_size: int = 3) -> dict[int, list[frozenset]]:
    """All partial-silting subsets of window indecomposables of size <= max_size.

    Subsets of partial-silting sets are partial silting, so each level is built
    from the previous one without skipping any candidate.
    """
    objs = sorted(window.indecomposables())
    found: dict[int, list[frozenset]] = {1: [frozenset({x}) for x in objs if is_partial_silting([x])]}
    singles = sorted(next(iter(s)) for s in found[1])
    ok_pair = {}
    for a, b in combinations(singles, 2):
        ok_pair[(a, b)] = is_partial_silting([a, b])
    if max_size >= 2:
        found[2] = [frozenset(k) for k, v in ok_pair.items() if v]
    if max_size >= 3:
        found[3] = [
            frozenset(t)
            for t in combinations(singles, 3)
            if ok_pair[(t[0], t[1])] and ok_pair[(t[0], t[2])] and ok_pair[(t[1], t[2])]
        ]
    return found


def predicted_pairs(window: WindowConfig) -> set[frozenset]:
    """Pairs ``{Sigma^m N_n, Sigma^{m+p} N_{n+1}}``, ``p >= 0``, inside the window."""
    out = set()
    span = 2 * window.max_shift + 2
    for n in range(window.n_range().start - 1, window.n_range().stop + 1):
        for m in range(-span, span + 1):
            for p in range(0, 2 * span + 1):
                a, b = n_object(n, m), n_object(n + 1, m + p)
                if window.contains(a) and window.contains(b):
                    out.add(frozenset({a, b}))
    return out


def pair_to_triple(pair: frozenset) -> tuple[int, int, int] | None:
    coords = [n_coords(x) for x in pair]
    if len(coords) != 2 or None in coords:
        return None
    (k1, j1), (k2, j2) = sorted(coords, key=lambda c: c[1])  # type: ignore[arg-type,index]
    if j2 != j1 + 1 or k2 < k1:
        return None
    return (k1, j1, k2 - k1)


# Classification over a window.


def enumerate_specs(window: WindowConfig) -> list[CoTStructureSpec]:
    specs = []
    for n in window.pair_indices:
        for m in window.shifts:
            for gap in range(window.max_p):
                specs.append(from_triple(m, n, gap))
            specs.append(bounded_below(n, m))
            specs.append(bounded_above(n, m))
        specs.append(stable(n))
    return sorted(specs, key=CoTStructureSpec.sort_key)


def fingerprint(s: CoTStructureSpec, universe: Sequence[ShiftedIndec]) -> tuple:
    return (
        co_heart(s),
        tuple(member_aisle(DObject([x]), s) for x in universe),
        tuple(member_coaisle(DObject([x]), s) for x in universe),
    )


def classify_all(window: WindowConfig, crosscheck: bool = True) -> list[CoTStructureSpec]:
    """Every spec of the four families in the window, checked for distinctness.

    With ``crosscheck`` the exhaustive silting search must find no triple and
    each partial-silting pair must be the co-heart of a bounded spec.
    """
    specs = enumerate_specs(window)
    universe = window.indecomposables()
    seen: dict[tuple, CoTStructureSpec] = {}
    for s in specs:
        fp = fingerprint(s, universe)
        if fp in seen:
            raise RuntimeError(f"specs {seen[fp]} and {s} coincide on the window")
        seen[fp] = s
    if crosscheck:
        found = silting_search(window, 3)
        if found.get(3):
            raise RuntimeError(f"partial-silting triple found: {sorted(map(str, found[3][0]))}")
        for pair in found.get(2, []):
            tr = pair_to_triple(pair)
            if tr is None or co_heart(from_triple(*tr)) != pair:
                raise RuntimeError(f"pair {sorted(map(str, pair))} is not a bounded co-heart")
    return specs


def verify_cotstructure_axioms(
    s: CoTStructureSpec, corpus: Sequence[DObject], samples: int = 500, seed: int = 0
) -> dict:
    checks: list[dict] = []
    objs = [x for x in corpus if x]
    if not objs:
        return {"spec": s.to_json(), "pass": True, "warning": "empty corpus", "checks": []}

    def record(name: str, witness: Any = None) -> None:
        entry: dict[str, Any] = {"name": name, "pass": witness is None}
        if witness is not None:
            entry["witness"] = witness
        checks.append(entry)

    A = [x for x in objs if member_aisle(x, s)]
    B = [x for x in objs if member_coaisle(x, s)]
    record("desuspension_closed_aisle", next((repr(x) for x in A if not member_aisle(x.suspend(-1), s)), None))
    record("suspension_closed_coaisle", next((repr(x) for x in B if not member_coaisle(x.suspend(1), s)), None))

    witness = None
    indA = [x.distinct()[0] for x in A if len(x) == 1]
    indB = [x.distinct()[0] for x in B if len(x) == 1]
    for a in indA:
        for b in indB:
            h = hom_dim(a, b)
            if h:
                witness = {"a": str(a), "b": str(b), "hom": h}
                break
        if witness:
            break
    if witness is None and A and B:
        rng = random.Random(seed)
        for _ in range(samples):
            a, b = rng.choice(A), rng.choice(B)
            h = hom_dim_obj(a, b)
            if h:
                witness = {"a": repr(a), "b": repr(b), "hom": h}
                break
    record("orthogonality", witness)

    witness = None
    for x in objs:
        a, b = approximation_triangle(x, s)
        ka, kb, kx = k0_class(a), k0_class(b), k0_class(x)
        if not member_aisle(a, s) or not member_coaisle(b, s) or (ka[0] + kb[0], ka[1] + kb[1]) != kx:
            witness = {"object": repr(x), "a": repr(a), "b": repr(b)}
            break
    record("approximation", witness)
    return {"spec": s.to_json(), "pass": all(c["pass"] for c in checks), "checks": checks}


def coarse_member_aisle(x: DObject, c: GeneralCoslicing, cut: Phase) -> bool:
    """Aisle membership computed from the coarse co-slicing's own HN phases."""
    if not x:
        return True
    return all(c.le(ph, cut) for _, ph in hn_filtration(x, c).quotients)


__all__ = [
    "FAMILIES",
    "CoTStructureSpec",
    "SiltingSet",
    "bounded",
    "bounded_below",
    "bounded_above",
    "stable",
    "from_triple",
    "corrupted_spec",
    "member_aisle",
    "member_coaisle",
    "co_heart",
    "co_heart_from_membership",
    "approximation_triangle",
    "boundedness_class",
    "boundedness_witnesses",
    "boundedness_from_witnesses",
    "induce_cotstructure",
    "is_partial_silting",
    "is_silting",
    "complete_almost_silting",
    "silting_search",
    "predicted_pairs",
    "pair_to_triple",
    "enumerate_specs",
    "fingerprint",
    "classify_all",
    "verify_cotstructure_axioms",
    "coarse_member_aisle",
]
