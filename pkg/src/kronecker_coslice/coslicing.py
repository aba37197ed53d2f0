"""Generalised co-slicings of D^b(KQ).

A co-slicing is presented by its phase set (via an order key and the shift
automorphism ``lam``), a map sending each semistable indecomposable to its
phase, and the exceptional pair ``{N_n, N_{n+1}}`` whose triangles give HN
towers for everything else.  All slices are additive closures of their
indecomposables except where a subclass says otherwise.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Any, Callable, Iterable, Sequence, Union

from .core_category import (
    ZERO,
    DObject,
    ShiftedIndec,
    hom_dim,
    k0_class,
    n_coords,
    n_object,
    pair_triangle,
)

INF = math.inf


@dataclass(frozen=True)
class Lex:
    k: int
    i: int

    def __str__(self) -> str:
        return f"({self.k},{self.i})"


@dataclass(frozen=True)
class Tag:
    v: Union[int, float]

    def __str__(self) -> str:
        return "inf" if self.v == INF else str(self.v)


@dataclass(frozen=True)
class Real:
    phi: float

    def __str__(self) -> str:
        return repr(self.phi)


Phase = Union[Lex, Tag, Real]


class PhaseKindError(TypeError):
    """Raised when phases of different kinds are compared."""


class HNError(ValueError):
    """Raised when an object has no HN tower for the given co-slicing."""


def phase_to_json(ph: Phase) -> Any:
    if isinstance(ph, Lex):
        return [ph.k, ph.i]
    if isinstance(ph, Tag):
        return "inf" if ph.v == INF else ph.v
    return ph.phi


class GeneralCoslicing:
    """Base class; subclasses fix the phase semantics."""

    kind: type = Lex
    pair_index: int = 0
    name: str = "coslicing"

    def _key(self, ph: Phase) -> Any:
        raise NotImplementedError

    def key(self, ph: Phase) -> Any:
        if not isinstance(ph, self.kind):
            raise PhaseKindError(f"{self.name} expects {self.kind.__name__} phases, got {ph!r}")
        return self._key(ph)

    def lt(self, a: Phase, b: Phase) -> bool:
        return self.key(a) < self.key(b)

    def le(self, a: Phase, b: Phase) -> bool:
        return self.key(a) <= self.key(b)

    def lam(self, ph: Phase) -> Phase:
        raise NotImplementedError

    def phase_of(self, x: ShiftedIndec) -> Phase | None:
        """Phase of the slice containing ``x``, or None if x is not semistable."""
        raise NotImplementedError

    def phases(self, bound: int) -> list[Phase]:
        """Phases whose generators have shifts within ``bound``, sorted."""
        raise NotImplementedError

    def gens(self, ph: Phase, bound: int) -> list[ShiftedIndec]:
        raise NotImplementedError

    def presentation(self) -> dict:
        raise NotImplementedError

    def in_slice(self, ph: Phase, x: DObject) -> bool:
        return all(self.phase_of(s) == ph for s in x.distinct())

    def sorted_phases(self, phs: Iterable[Phase]) -> list[Phase]:
        return sorted(set(phs), key=self.key)


# Exceptional co-slicings E_p on the pair {N_n, N_{n+1}}.


def exceptional_key(p: int | float, ph: Lex) -> Any:
    if p == INF:
        return (ph.i == 0, ph.k)
    # (k+p-1,1) < (k,0) < (k+p,1): interleave on the integers
    return 2 * ph.k + 1 if ph.i == 0 else 2 * (ph.k - p) + 2


class ExceptionalCoslicing(GeneralCoslicing):
    kind = Lex

    def __init__(self, n: int, p: int | float, _allow_p0: bool = False):
        if p != INF and (int(p) != p or p < (0 if _allow_p0 else 1)):
            raise ValueError(f"order parameter must be a positive integer or inf, got {p}")
        self.n = self.pair_index = int(n)
        self.p = INF if p == INF else int(p)
        self.name = f"E_{'inf' if self.p == INF else self.p}(n={self.n})"

    def __eq__(self, other: object) -> bool:
        return isinstance(other, ExceptionalCoslicing) and (self.n, self.p) == (other.n, other.p)

    def __hash__(self) -> int:
        return hash(("E", self.n, self.p))

    def __repr__(self) -> str:
        return f"ExceptionalCoslicing(n={self.n}, p={self.p})"

    def _key(self, ph: Lex) -> Any:
        return exceptional_key(self.p, ph)

    def lam(self, ph: Lex) -> Lex:
        return Lex(ph.k + 1, ph.i)

    def phase_of(self, x: ShiftedIndec) -> Lex | None:
        nc = n_coords(x)
        if nc is None:
            return None
        k, j = nc
        if j == self.n:
            return Lex(k, 0)
        if j == self.n + 1:
            return Lex(k, 1)
        return None

    def phases(self, bound: int) -> list[Phase]:
        return self.sorted_phases(Lex(k, i) for k in range(-bound, bound + 1) for i in (0, 1))

    def gens(self, ph: Lex, bound: int = 0) -> list[ShiftedIndec]:
        return [n_object(self.n + ph.i, ph.k)]

    def presentation(self) -> dict:
        return {"type": "exceptional", "n": self.n, "p": "inf" if self.p == INF else self.p}


def build_exceptional(n: int, p: int | float) -> ExceptionalCoslicing:
    return ExceptionalCoslicing(n, p)


# Coarse co-slicings on a pair {N_t, N_{t+1}}.


class TwoObjectCoslicing(GeneralCoslicing):
    """Slices ``R(k) = add{Sigma^k N_t, Sigma^{k+p-1} N_{t+1}}`` over Z."""

    kind = Tag

    def __init__(self, t: int, p: int):
        if p < 1:
            raise ValueError("p must be >= 1")
        self.t = self.pair_index = t
        self.p = p
        self.name = f"R_{p}(t={t})"

    def _key(self, ph: Tag) -> Any:
        return ph.v

    def lam(self, ph: Tag) -> Tag:
        return Tag(ph.v + 1)

    def phase_of(self, x: ShiftedIndec) -> Tag | None:
        nc = n_coords(x)
        if nc is None:
            return None
        k, j = nc
        if j == self.t:
            return Tag(k)
        if j == self.t + 1:
            return Tag(k - self.p + 1)
        return None

    def phases(self, bound: int) -> list[Phase]:
        return [Tag(k) for k in range(-bound, bound + 1)]

    def gens(self, ph: Tag, bound: int = 0) -> list[ShiftedIndec]:
        return [n_object(self.t, ph.v), n_object(self.t + 1, ph.v + self.p - 1)]

    def presentation(self) -> dict:
        return {"type": "two_object", "t": self.t, "p": self.p}

    def refinement(self) -> tuple[ExceptionalCoslicing, Callable[[Lex], Tag]]:
        p = self.p
        return ExceptionalCoslicing(self.t, p), lambda e: Tag(e.k if e.i == 0 else e.k - p + 1)


class StableTwoPhaseCoslicing(GeneralCoslicing):
    """Two suspension-stable slices; ``Tag(1)`` holds N_{t+1} and sits below ``Tag(0)``."""

    kind = Tag

    def __init__(self, t: int):
        self.t = self.pair_index = t
        self.name = f"Stable2(t={t})"

    def _key(self, ph: Tag) -> Any:
        if ph.v not in (0, 1):
            raise PhaseKindError(f"phase {ph} not in {{0,1}}")
        return 1 - ph.v

    def lam(self, ph: Tag) -> Tag:
        return ph

    def phase_of(self, x: ShiftedIndec) -> Tag | None:
        nc = n_coords(x)
        if nc is None or nc[1] not in (self.t, self.t + 1):
            return None
        return Tag(0 if nc[1] == self.t else 1)

    def phases(self, bound: int) -> list[Phase]:
        return [Tag(1), Tag(0)]

    def gens(self, ph: Tag, bound: int) -> list[ShiftedIndec]:
        j = self.t if ph.v == 0 else self.t + 1
        return [n_object(j, k) for k in range(-bound, bound + 1)]

    def presentation(self) -> dict:
        return {"type": "stable_two_phase", "t": self.t}

    def refinement(self) -> tuple[ExceptionalCoslicing, Callable[[Lex], Tag]]:
        return ExceptionalCoslicing(self.t, INF), lambda e: Tag(e.i)


class ZInfCoslicing(GeneralCoslicing):
    """Phases ``Z u {inf}``: ``R(k) = add Sigma^k N_{t+1}``, ``R(inf) = add{Sigma^j N_t}``."""

    kind = Tag

    def __init__(self, t: int):
        self.t = self.pair_index = t
        self.name = f"ZInf(t={t})"

    def _key(self, ph: Tag) -> Any:
        return ph.v

    def lam(self, ph: Tag) -> Tag:
        return ph if ph.v == INF else Tag(ph.v + 1)

    def phase_of(self, x: ShiftedIndec) -> Tag | None:
        nc = n_coords(x)
        if nc is None:
            return None
        if nc[1] == self.t:
            return Tag(INF)
        if nc[1] == self.t + 1:
            return Tag(nc[0])
        return None

    def phases(self, bound: int) -> list[Phase]:
        return [Tag(k) for k in range(-bound, bound + 1)] + [Tag(INF)]

    def gens(self, ph: Tag, bound: int) -> list[ShiftedIndec]:
        if ph.v == INF:
            return [n_object(self.t, k) for k in range(-bound, bound + 1)]
        return [n_object(self.t + 1, ph.v)]

    def presentation(self) -> dict:
        return {"type": "z_inf", "t": self.t}

    def refinement(self) -> tuple[ExceptionalCoslicing, Callable[[Lex], Tag]]:
        return ExceptionalCoslicing(self.t, INF), lambda e: Tag(INF) if e.i == 0 else Tag(e.k)


class TrivialCoslicing(GeneralCoslicing):
    """A single slice equal to the whole category."""

    kind = Tag

    def __init__(self, t: int = 1):
        self.t = self.pair_index = t
        self.name = "Trivial"

    def _key(self, ph: Tag) -> Any:
        if ph.v != 0:
            raise PhaseKindError(f"trivial co-slicing has only phase 0, got {ph}")
        return 0

    def lam(self, ph: Tag) -> Tag:
        return ph

    def phase_of(self, x: ShiftedIndec) -> Tag:
        return Tag(0)

    def phases(self, bound: int) -> list[Phase]:
        return [Tag(0)]

    def gens(self, ph: Tag, bound: int) -> list[ShiftedIndec]:
        return [n_object(self.t + i, k) for k in range(-bound, bound + 1) for i in (0, 1)]

    def presentation(self) -> dict:
        return {"type": "trivial", "t": self.t}

    def refinement(self) -> tuple[ExceptionalCoslicing, Callable[[Lex], Tag]]:
        return ExceptionalCoslicing(self.t, INF), lambda e: Tag(0)


class InsertedCoslicing(GeneralCoslicing):
    """``base`` with ``Sigma^m obj`` added to the slice ``lam^m(phase)`` for all m."""

    def __init__(self, base: GeneralCoslicing, phase: Phase, obj: ShiftedIndec):
        base.key(phase)
        self.base, self.phase, self.obj = base, phase, obj
        self.kind = base.kind
        self.pair_index = base.pair_index
        self.name = f"{base.name}+{obj}@{phase}"

    def _key(self, ph: Phase) -> Any:
        return self.base.key(ph)

    def lam(self, ph: Phase) -> Phase:
        return self.base.lam(ph)

    def _orbit_phase(self, m: int) -> Phase:
        ph = self.phase
        for _ in range(abs(m)):
            ph = self.base.lam(ph) if m > 0 else self._lam_inv(ph)
        return ph

    def _lam_inv(self, ph: Phase) -> Phase:
        if isinstance(ph, Lex):
            return Lex(ph.k - 1, ph.i)
        if isinstance(ph, Tag):
            return ph if self.base.lam(ph) == ph else Tag(ph.v - 1)
        raise PhaseKindError("unsupported phase kind")

    def phase_of(self, x: ShiftedIndec) -> Phase | None:
        if x.indec == self.obj.indec:
            return self._orbit_phase(x.shift - self.obj.shift)
        return self.base.phase_of(x)

    def phases(self, bound: int) -> list[Phase]:
        return self.base.phases(bound)

    def gens(self, ph: Phase, bound: int) -> list[ShiftedIndec]:
        out = list(self.base.gens(ph, bound))
        for m in range(-bound - abs(self.obj.shift), bound + abs(self.obj.shift) + 1):
            if self._orbit_phase(m) == ph:
                out.append(self.obj.suspend(m))
        return out

    def presentation(self) -> dict:
        return {
            "type": "inserted",
            "base": self.base.presentation(),
            "phase": phase_to_json(self.phase),
            "object": {"indec": str(self.obj.indec), "shift": self.obj.shift},
        }


# HN towers.


@dataclass(frozen=True)
class HNTower:
    layers: tuple[DObject, ...]
    quotients: tuple[tuple[DObject, Phase], ...]

    @property
    def phases(self) -> list[Phase]:
        return [ph for _, ph in self.quotients]


def _summand_pieces(s: ShiftedIndec, c: GeneralCoslicing) -> list[tuple[Phase, DObject]]:
    ph = c.phase_of(s)
    if ph is not None:
        return [(ph, DObject([s]))]
    out = []
    for part in pair_triangle(s, c.pair_index):
        if part:
            gen = part.distinct()[0]
            gph = c.phase_of(gen)
            if gph is None:
                raise HNError(f"{gen} is not semistable in {c.name}")
            out.append((gph, part))
    if len(out) == 2:
        if out[0][0] == out[1][0]:
            return [(out[0][0], DObject([s]))]
        if not c.lt(out[0][0], out[1][0]):
            raise HNError(f"triangle pieces of {s} have non-increasing phases in {c.name}")
    return out


def hn_filtration(t: DObject, c: GeneralCoslicing) -> HNTower:
    if not t:
        raise ValueError("the zero object has no HN tower")
    per_summand = [(_summand_pieces(s, c), m) for s, m in t.items]
    order = c.sorted_phases(ph for pieces, _ in per_summand for ph, _ in pieces)
    quotients = []
    for ph in order:
        q = ZERO
        for pieces, m in per_summand:
            for pph, obj in pieces:
                if pph == ph:
                    q = q + DObject({g: mult * m for g, mult in obj.items})
        quotients.append((q, ph))
    layers = [ZERO]
    for ph in order:
        layer = ZERO
        for (s, m), (pieces, _) in zip(t.items, per_summand):
            done = [obj for pph, obj in pieces if c.le(pph, ph)]
            if len(done) == len(pieces):
                layer = layer + DObject({s: m})
            elif done:
                layer = layer + DObject({g: mult * m for g, mult in done[0].items})
        layers.append(layer)
    return HNTower(tuple(layers), tuple(quotients))


def tower_violations(tower: HNTower, c: GeneralCoslicing, target: DObject | None = None) -> list[str]:
    out = []
    layers, quots = tower.layers, tower.quotients
    if len(layers) != len(quots) + 1:
        return ["layer count must exceed quotient count by one"]
    if layers[0]:
        out.append("first layer is not zero")
    if target is not None and layers[-1] != target:
        out.append("last layer differs from the target")
    for idx, (q, ph) in enumerate(quots):
        if not q:
            out.append(f"quotient {idx} is zero")
        elif not c.in_slice(ph, q):
            out.append(f"quotient {idx} is not in slice {ph}")
        a, b, d = k0_class(layers[idx + 1]), k0_class(layers[idx]), k0_class(q)
        if (a[0] - b[0], a[1] - b[1]) != d:
            out.append(f"K0 mismatch at step {idx}")
        if idx and not c.lt(quots[idx - 1][1], ph):
            out.append(f"phases not strictly increasing at step {idx}")
    return out


def verify_tower(tower: HNTower, c: GeneralCoslicing, target: DObject | None = None) -> bool:
    return not tower_violations(tower, c, target)


def _is_trivial(c: GeneralCoslicing, bound: int, n_range: Iterable[int]) -> bool:
    for ph in c.phases(bound):
        if c.lam(ph) != ph:
            continue
        for j in n_range:
            if c.phase_of(n_object(j)) == ph and c.phase_of(n_object(j + 1)) == ph:
                return True
    return False


def validate_coslicing(
    c: GeneralCoslicing,
    corpus: Sequence[DObject],
    bound: int = 4,
    n_range: Iterable[int] = range(-8, 9),
    max_violations: int = 50,
) -> dict:
    """Check shift compatibility, slice orthogonality and HN existence.

    ``bound`` limits the phases inspected to those whose generators have shift
    at most ``bound``.
    """
    if not corpus:
        raise ValueError("corpus must be nonempty")
    violations: list[dict] = []
    phs = c.phases(bound)
    gens = {ph: c.gens(ph, bound) for ph in phs}
    for ph in phs:
        lph = c.lam(ph)
        if c.lt(lph, ph):
            violations.append({"check": "lambda_monotone", "phase": phase_to_json(ph)})
        if not gens[ph]:
            violations.append({"check": "essential", "phase": phase_to_json(ph)})
        for g in gens[ph]:
            if c.phase_of(g.suspend()) != lph:
                violations.append(
                    {"check": "lambda_compatible", "phase": phase_to_json(ph), "object": str(g)}
                )
    for a_idx, a in enumerate(phs):
        for b in phs[a_idx + 1 :]:
            if not c.lt(a, b):
                continue
            for x in gens[a]:
                for y in gens[b]:
                    h = hom_dim(x, y)
                    if h:
                        violations.append(
                            {
                                "check": "orthogonality",
                                "lower": [phase_to_json(a), str(x)],
                                "higher": [phase_to_json(b), str(y)],
                                "hom": h,
                            }
                        )
    for obj in corpus:
        if not obj:
            continue
        try:
            bad = tower_violations(hn_filtration(obj, c), c, obj)
        except HNError as exc:
            bad = [str(exc)]
        if bad:
            violations.append({"check": "hn_tower", "object": repr(obj), "reasons": bad})
        if len(violations) >= max_violations:
            break
    return {
        "valid": not violations,
        "trivial": _is_trivial(c, bound, n_range),
        "violations": violations[:max_violations],
    }


def check_slice_dichotomy(c: GeneralCoslicing, bound: int = 3) -> dict[Phase, str]:
    """Tag each slice as suspension-stable, partial-silting, or neither."""
    tags = {}
    for ph in c.phases(bound):
        gs = c.gens(ph, bound)
        if c.lam(ph) == ph and all(c.phase_of(g.suspend(e)) == ph for g in gs for e in (-1, 1)):
            tags[ph] = "suspension-stable"
        elif positive_ext_free(gs):
            tags[ph] = "partial-silting"
        else:
            tags[ph] = "neither"
    return tags


def positive_ext_free(objs: Sequence[ShiftedIndec]) -> bool:
    """``hom(s, Sigma^i s') = 0`` for every ``i > 0`` and all s, s' in objs."""
    for s in objs:
        for s2 in objs:
            gap = s.shift - s2.shift
            for i in (gap, gap + 1):
                if i > 0 and hom_dim(s, s2.suspend(i)):
                    return False
    return True


# Coarser / finer.


def extension_closure(
    seed: Iterable[ShiftedIndec], universe: Iterable[ShiftedIndec], n_range: Iterable[int]
) -> set[ShiftedIndec]:
    """Saturate ``seed`` inside ``universe`` using the pair triangles."""
    closed = set(seed)
    pending = [x for x in universe if x not in closed]
    js = list(n_range)
    changed = True
    while changed:
        changed = False
        rest = []
        for x in pending:
            hit = False
            for j in js:
                left, right = pair_triangle(x, j)
                if left and right and all(g in closed for g in left.distinct() + right.distinct()):
                    hit = True
                    break
            if hit:
                closed.add(x)
                changed = True
            else:
                rest.append(x)
        pending = rest
    return closed


def coarser_witness_check(
    fine: GeneralCoslicing,
    coarse: GeneralCoslicing,
    r: Callable[[Phase], Phase],
    universe: Sequence[ShiftedIndec],
    bound: int = 3,
    margin: int = 6,
    n_range: Iterable[int] = range(-8, 9),
) -> bool:
    """Window check that ``coarse`` is coarser than ``fine`` via ``r``.

    Raises ValueError if r misses a coarse phase inside the window.
    """
    fine_phs = fine.phases(bound + margin)
    images = {ph: r(ph) for ph in fine_phs}
    coarse_phs = coarse.phases(bound)
    missing = [ph for ph in coarse_phs if ph not in set(images.values())]
    if missing:
        raise ValueError(f"r is not surjective onto {[str(m) for m in missing]}")
    for ph in fine.phases(bound):
        if r(fine.lam(ph)) != coarse.lam(r(ph)):
            return False
    for a, b in zip(fine_phs, fine_phs[1:]):
        if coarse.lt(images[b], images[a]):
            return False
    inner = [x for x in universe if abs(x.shift) <= bound]
    js = list(n_range)
    for psi in coarse_phs:
        fiber = [g for ph in fine_phs if images[ph] == psi for g in fine.gens(ph, bound + margin)]
        closure = extension_closure(fiber, inner, js)
        want = {x for x in inner if coarse.phase_of(x) == psi}
        got = {x for x in inner if x in closure}
        if want != got:
            return False
    return True


def compose(r: Callable[[Phase], Phase], s: Callable[[Phase], Phase]) -> Callable[[Phase], Phase]:
    return lambda ph: s(r(ph))


# Split-stability data and the lexicographic product construction.


@dataclass(frozen=True)
class SplitStabilityData:
    phases: tuple[Any, ...]
    generators: tuple[frozenset[ShiftedIndec], ...]

    def __post_init__(self) -> None:
        if len(self.phases) != len(self.generators):
            raise ValueError("one generator set per phase is required")

    def phase_of(self, x: ShiftedIndec) -> Any | None:
        for ph, gs in zip(self.phases, self.generators):
            if x in gs:
                return ph
        return None

    def violations(self) -> list[tuple[str, str]]:
        bad = []
        for i, lower in enumerate(self.generators):
            for higher in self.generators[i + 1 :]:
                for x in lower:
                    for y in higher:
                        if hom_dim(x, y):
                            bad.append((str(x), str(y)))
        return bad


def split_hn_decompose(x: DObject, d: SplitStabilityData) -> list[tuple[DObject, Any]]:
    groups: dict[Any, dict[ShiftedIndec, int]] = {}
    for s, m in x.items:
        ph = d.phase_of(s)
        if ph is None:
            raise ValueError(f"{s} lies in no phase of the split data")
        groups.setdefault(ph, {})[s] = m
    return [(DObject(groups[ph]), ph) for ph in d.phases if ph in groups]


class LexProductCoslicing(GeneralCoslicing):
    """Phases ``Z x Phi`` ordered lexicographically, ``Q((k, j)) = Sigma^k R(phi_j)``."""

    kind = Lex

    def __init__(self, data: SplitStabilityData, pair_index: int):
        self.data = data
        self.pair_index = pair_index
        self.name = f"LexProduct(n={pair_index},phases={len(data.phases)})"

    def _key(self, ph: Lex) -> Any:
        if not 0 <= ph.i < len(self.data.phases):
            raise PhaseKindError(f"no split phase with index {ph.i}")
        return (ph.k, ph.i)

    def lam(self, ph: Lex) -> Lex:
        return Lex(ph.k + 1, ph.i)

    def phase_of(self, x: ShiftedIndec) -> Lex | None:
        for j, gs in enumerate(self.data.generators):
            for g in gs:
                if g.indec == x.indec:
                    return Lex(x.shift - g.shift, j)
        return None

    def phases(self, bound: int) -> list[Phase]:
        return [Lex(k, j) for k in range(-bound, bound + 1) for j in range(len(self.data.phases))]

    def gens(self, ph: Lex, bound: int = 0) -> list[ShiftedIndec]:
        return sorted(g.suspend(ph.k) for g in self.data.generators[ph.i])

    def presentation(self) -> dict:
        return {
            "type": "lex_product",
            "n": self.pair_index,
            "phases": [str(p) for p in self.data.phases],
            "generators": [sorted(str(g) for g in gs) for gs in self.data.generators],
        }


def combine_with_split_data(bounded_spec: Any, d: SplitStabilityData) -> LexProductCoslicing:
    from .cotstructure import co_heart  # local import: cotstructure depends on this module

    if getattr(bounded_spec, "family", None) != "bounded":
        raise ValueError("split data can only be combined with a bounded co-t-structure")
    heart = co_heart(bounded_spec)
    covered = set().union(*d.generators) if d.generators else set()
    if covered != set(heart):
        raise ValueError("split data must partition the co-heart indecomposables")
    if d.violations():
        raise ValueError(f"split data is not Hom-ordered: {d.violations()}")
    return LexProductCoslicing(d, bounded_spec.n)


# Real-phase co-slicings satisfying condition (S) and their metric.


@dataclass(frozen=True)
class CostabSlicing(GeneralCoslicing):
    """``Q(phi0 + k) = add Sigma^k N_n`` and ``Q(phi1 + k) = add Sigma^k N_{n+1}``."""

    n: int
    phi1: float
    phi0: float

    kind = Real

    @property
    def pair_index(self) -> int:  # type: ignore[override]
        return self.n

    @property
    def name(self) -> str:  # type: ignore[override]
        return f"CostabSlicing(n={self.n})"

    def _key(self, ph: Real) -> Any:
        return ph.phi

    def lam(self, ph: Real) -> Real:
        return Real(ph.phi + 1)

    def phase_of(self, x: ShiftedIndec) -> Real | None:
        nc = n_coords(x)
        if nc is None:
            return None
        if nc[1] == self.n:
            return Real(self.phi0 + nc[0])
        if nc[1] == self.n + 1:
            return Real(self.phi1 + nc[0])
        return None

    def phases(self, bound: int) -> list[Phase]:
        out = [Real(self.phi0 + k) for k in range(-bound, bound + 1)]
        out += [Real(self.phi1 + k) for k in range(-bound, bound + 1)]
        return self.sorted_phases(out)

    def gens(self, ph: Real, bound: int) -> list[ShiftedIndec]:
        out = []
        for k in range(-bound - 1, bound + 2):
            for j, base in ((self.n, self.phi0), (self.n + 1, self.phi1)):
                if base + k == ph.phi:
                    out.append(n_object(j, k))
        return out

    def presentation(self) -> dict:
        return {"type": "costab", "n": self.n, "phi1": self.phi1, "phi0": self.phi0}


def metric_distance(q: CostabSlicing, r: CostabSlicing) -> float:
    if q.n != r.n:
        return INF
    return max(abs(q.phi0 - r.phi0), abs(q.phi1 - r.phi1))


# JSON presentations.


def coslicing_from_json(data: dict) -> GeneralCoslicing:
    kind = data.get("type", "exceptional")
    if kind == "exceptional":
        p = data["p"]
        return ExceptionalCoslicing(int(data["n"]), INF if p in ("inf", None) else int(p))
    if kind == "two_object":
        return TwoObjectCoslicing(int(data["t"]), int(data["p"]))
    if kind == "stable_two_phase":
        return StableTwoPhaseCoslicing(int(data["t"]))
    if kind == "z_inf":
        return ZInfCoslicing(int(data["t"]))
    if kind == "trivial":
        return TrivialCoslicing(int(data.get("t", 1)))
    if kind == "costab":
        return CostabSlicing(int(data["n"]), float(data["phi1"]), float(data["phi0"]))
    raise ValueError(f"unknown co-slicing type {kind!r}")


def phase_from_json(c: GeneralCoslicing, value: Any) -> Phase:
    if c.kind is Lex:
        k, i = value
        return Lex(int(k), int(i))
    if c.kind is Tag:
        return Tag(INF if value == "inf" else int(value))
    return Real(float(value))


__all__ = [
    "INF",
    "Lex",
    "Tag",
    "Real",
    "Phase",
    "PhaseKindError",
    "HNError",
    "GeneralCoslicing",
    "ExceptionalCoslicing",
    "TwoObjectCoslicing",
    "StableTwoPhaseCoslicing",
    "ZInfCoslicing",
    "TrivialCoslicing",
    "InsertedCoslicing",
    "LexProductCoslicing",
    "CostabSlicing",
    "HNTower",
    "SplitStabilityData",
    "build_exceptional",
    "hn_filtration",
    "verify_tower",
    "tower_violations",
    "validate_coslicing",
    "check_slice_dichotomy",
    "positive_ext_free",
    "extension_closure",
    "coarser_witness_check",
    "compose",
    "split_hn_decompose",
    "combine_with_split_data",
    "metric_distance",
    "coslicing_from_json",
    "phase_from_json",
    "phase_to_json",
]
