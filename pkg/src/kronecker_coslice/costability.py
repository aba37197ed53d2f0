"""Co-stability conditions on D^b(KQ) in quintuple coordinates.

A condition is determined by the pair index n, the two phases phi1 < phi0 of
N_{n+1} and N_n and their masses.  Central charges are stored by their values
on the basis ([N_n], [N_{n+1}]) of K0, which is unimodular for every n.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

from .core_category import DObject, K0Class, ShiftedIndec, hom_dim, k0_class, n_coords, n_object
from .coslicing import INF, CostabSlicing, metric_distance, positive_ext_free

_TOL = 1e-12


@dataclass(frozen=True)
class Quintuple:
    n: int
    phi1: float
    phi0: float
    m1: float
    m0: float

    def check(self) -> None:
        if not self.phi1 < self.phi0:
            raise ValueError(f"need phi1 < phi0, got {self.phi1} >= {self.phi0}")
        if not (self.m1 > 0 and self.m0 > 0):
            raise ValueError("masses must be positive")

    def to_json(self) -> dict:
        return {"n": self.n, "phi1": self.phi1, "phi0": self.phi0, "m1": self.m1, "m0": self.m0}

    @classmethod
    def from_json(cls, data: dict) -> "Quintuple":
        missing = [k for k in ("n", "phi1", "phi0", "m1", "m0") if k not in data]
        if missing:
            raise KeyError(missing[0])
        return cls(int(data["n"]), float(data["phi1"]), float(data["phi0"]), float(data["m1"]), float(data["m0"]))


@dataclass(frozen=True)
class CentralCharge:
    n: int
    z0: complex  # Z(N_n)
    z1: complex  # Z(N_{n+1})

    def coordinates(self, v: K0Class) -> tuple[int, int]:
        """Write v as a[N_n] + b[N_{n+1}]."""
        n = self.n
        return n * v[0] - (n + 1) * v[1], -(n - 1) * v[0] + n * v[1]

    def __call__(self, v: K0Class) -> complex:
        a, b = self.coordinates(v)
        return a * self.z0 + b * self.z1

    def of_object(self, x: DObject) -> complex:
        return self(k0_class(x))


@dataclass(frozen=True)
class CostabCondition:
    charge: CentralCharge
    slicing: CostabSlicing

    @property
    def n(self) -> int:
        return self.slicing.n


@dataclass(frozen=True)
class SemistableSet:
    """All shifts of N_n and N_{n+1}."""

    pair_index: int

    def contains(self, x: ShiftedIndec) -> bool:
        nc = n_coords(x)
        return nc is not None and nc[1] in (self.pair_index, self.pair_index + 1)


def from_quintuple(q: Quintuple) -> CostabCondition:
    q.check()
    return raw_condition(q)


def raw_condition(q: Quintuple) -> CostabCondition:
    """Like ``from_quintuple`` without the inequality checks, for reporting."""
    charge = CentralCharge(
        q.n, q.m0 * cmath.exp(1j * math.pi * q.phi0), q.m1 * cmath.exp(1j * math.pi * q.phi1)
    )
    return CostabCondition(charge, CostabSlicing(q.n, q.phi1, q.phi0))


def to_quintuple(c: CostabCondition) -> Quintuple:
    s = c.slicing
    return Quintuple(s.n, s.phi1, s.phi0, abs(c.charge.z1), abs(c.charge.z0))


def _semistables(c: CostabCondition, reach: int) -> list:
    s = c.slicing
    out = []
    for k in range(-reach, reach + 1):
        out.append((n_object(s.n, k), s.phi0 + k))
        out.append((n_object(s.n + 1, k), s.phi1 + k))
    return out


def induced_triple(c: CostabCondition) -> tuple[int, int, int]:
    """Triple ``(0, n, p)`` of the co-heart cut at phase phi0."""
    s = c.slicing
    return (0, s.n, math.floor(s.phi0 - s.phi1))


def validate_condition(c: CostabCondition, reach: int = 2, tol: float = _TOL) -> dict:
    checks: list[dict] = []
    s = c.slicing

    def record(name: str, witness=None) -> None:
        entry = {"name": name, "pass": witness is None}
        if witness is not None:
            entry["witness"] = witness
        checks.append(entry)

    record("charge_basis", None if c.charge.n == s.n else {"charge_n": c.charge.n, "slicing_n": s.n})
    masses = [abs(c.charge.z0), abs(c.charge.z1)]
    record("positive_mass", None if min(masses) > 0 else {"masses": masses})
    record("phase_order", None if s.phi1 < s.phi0 else {"phi1": s.phi1, "phi0": s.phi0})

    witness = None
    for q, phi in _semistables(c, reach):
        z = c.charge.of_object(DObject([q]))
        expect = abs(z) * cmath.exp(1j * math.pi * phi)
        if abs(z) == 0 or abs(z - expect) > tol * max(1.0, abs(z)):
            witness = {"object": str(q), "phase": phi, "Z": [z.real, z.imag]}
            break
    record("charge_compatible", witness)

    witness = None
    ss = _semistables(c, reach)
    for x, px in ss:
        for y, py in ss:
            if px < py and hom_dim(x, y):
                witness = {"lower": [str(x), px], "higher": [str(y), py], "hom": hom_dim(x, y)}
                break
        if witness:
            break
    record("slice_orthogonality", witness)

    # split HN on the co-heart of phases in (phi0 - 1, phi0]: its objects must
    # be Hom-ordered by phase and have no positive self-extensions
    witness = None
    heart = [(x, p) for x, p in _semistables(c, reach + 2) if s.phi0 - 1 < p <= s.phi0]
    for x, px in heart:
        for y, py in heart:
            if px < py and hom_dim(x, y):
                witness = {"lower": str(x), "higher": str(y), "hom": hom_dim(x, y)}
            elif not positive_ext_free([x, y]):
                witness = {"not_rigid": sorted({str(x), str(y)})}
    record("split_hn", witness)
    report = {"pass": all(ch["pass"] for ch in checks), "checks": checks}
    if s.phi1 < s.phi0:
        report["co_heart_triple"] = list(induced_triple(c))
    return report


def semistable_set(c: CostabCondition) -> SemistableSet:
    return SemistableSet(c.n)


def same_component(c1: CostabCondition, c2: CostabCondition) -> bool:
    return semistable_set(c1) == semistable_set(c2)


def costab_distance(c1: CostabCondition, c2: CostabCondition) -> float:
    d = metric_distance(c1.slicing, c2.slicing)
    if d == INF:
        return INF
    return max(d, abs(c1.charge.z0 - c2.charge.z0), abs(c1.charge.z1 - c2.charge.z1))


def walk_gap(c1: CostabCondition, c2: CostabCondition) -> float:
    """Lipschitz bound for the straight path between the two quintuples."""
    q1, q2 = to_quintuple(c1), to_quintuple(c2)
    dphi1, dphi0 = abs(q2.phi1 - q1.phi1), abs(q2.phi0 - q1.phi0)
    z1 = abs(q2.m1 - q1.m1) + math.pi * max(q1.m1, q2.m1) * dphi1
    z0 = abs(q2.m0 - q1.m0) + math.pi * max(q1.m0, q2.m0) * dphi0
    return max(dphi1, dphi0, z1, z0)


def component_walk(c1: CostabCondition, c2: CostabCondition, steps: int) -> list[CostabCondition]:
    if not same_component(c1, c2):
        raise ValueError("conditions lie in different components; no path exists")
    if steps < 1:
        raise ValueError("steps must be >= 1")
    q1, q2 = to_quintuple(c1), to_quintuple(c2)
    path = []
    for k in range(steps + 1):
        t = k / steps
        path.append(
            from_quintuple(
                Quintuple(
                    q1.n,
                    q1.phi1 + t * (q2.phi1 - q1.phi1),
                    q1.phi0 + t * (q2.phi0 - q1.phi0),
                    q1.m1 + t * (q2.m1 - q1.m1),
                    q1.m0 + t * (q2.m0 - q1.m0),
                )
            )
        )
    return path


__all__ = [
    "Quintuple",
    "CentralCharge",
    "CostabCondition",
    "CostabSlicing",
    "SemistableSet",
    "from_quintuple",
    "raw_condition",
    "to_quintuple",
    "induced_triple",
    "validate_condition",
    "semistable_set",
    "same_component",
    "costab_distance",
    "walk_gap",
    "component_walk",
]
