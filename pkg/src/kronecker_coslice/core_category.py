"""Combinatorial model of the bounded derived category of the Kronecker algebra.

The quiver has two vertices 0 and 1 and two arrows 1 -> 0.  K0 coordinates are
taken in the basis of simple modules at vertices (0, 1).  Every object is a
finite direct sum of shifted indecomposable modules, so objects are stored as
multisets of :class:`ShiftedIndec` and all Hom dimensions come from a closed
form table.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Iterable, Iterator, Union

INF_LABEL = "inf"


@dataclass(frozen=True, order=True)
class Preprojective:
    t: int

    def __post_init__(self) -> None:
        if self.t < 0:
            raise ValueError(f"preprojective index must be >= 0, got {self.t}")

    def __str__(self) -> str:
        return f"P{self.t}"


@dataclass(frozen=True, order=True)
class Preinjective:
    s: int

    def __post_init__(self) -> None:
        if self.s < 0:
            raise ValueError(f"preinjective index must be >= 0, got {self.s}")

    def __str__(self) -> str:
        return f"I{self.s}"


@dataclass(frozen=True, order=True)
class Regular:
    tube: str
    length: int

    def __post_init__(self) -> None:
        if self.length < 1:
            raise ValueError(f"regular length must be >= 1, got {self.length}")
        if not isinstance(self.tube, str):
            object.__setattr__(self, "tube", str(self.tube))

    def __str__(self) -> str:
        return f"R[{self.tube},{self.length}]"


Indec = Union[Preprojective, Preinjective, Regular]

_FAMILY_RANK = {Preprojective: 0, Preinjective: 1, Regular: 2}


def _indec_key(x: Indec) -> tuple:
    if isinstance(x, Regular):
        return (2, x.tube, x.length)
    return (_FAMILY_RANK[type(x)], "", x.t if isinstance(x, Preprojective) else x.s)


@dataclass(frozen=True)
class ShiftedIndec:
    """The stalk complex ``Sigma^shift indec``."""

    indec: Indec
    shift: int = 0

    def sort_key(self) -> tuple:
        return (self.shift, _indec_key(self.indec))

    def __lt__(self, other: "ShiftedIndec") -> bool:
        return self.sort_key() < other.sort_key()

    def suspend(self, k: int = 1) -> "ShiftedIndec":
        return ShiftedIndec(self.indec, self.shift + k)

    @property
    def is_regular(self) -> bool:
        return isinstance(self.indec, Regular)

    def __str__(self) -> str:
        return str(self.indec) if self.shift == 0 else f"S^{self.shift}{self.indec}"


class DObject:
    """Finite direct sum of shifted indecomposables, compared as a multiset."""

    __slots__ = ("_items", "_hash")

    def __init__(self, summands: Iterable[ShiftedIndec] | dict[ShiftedIndec, int] = ()):
        counts: Counter = Counter()
        if isinstance(summands, dict):
            for s, m in summands.items():
                if m < 0:
                    raise ValueError("negative multiplicity")
                if m:
                    counts[s] += m
        else:
            for s in summands:
                counts[s] += 1
        self._items: tuple[tuple[ShiftedIndec, int], ...] = tuple(
            sorted(counts.items(), key=lambda kv: kv[0].sort_key())
        )
        self._hash = hash(self._items)

    @classmethod
    def of(cls, x: ShiftedIndec | Indec, mult: int = 1, shift: int = 0) -> "DObject":
        if not isinstance(x, ShiftedIndec):
            x = ShiftedIndec(x, 0)
        return cls({x.suspend(shift): mult})

    @property
    def items(self) -> tuple[tuple[ShiftedIndec, int], ...]:
        return self._items

    def summands(self) -> Iterator[ShiftedIndec]:
        for s, m in self._items:
            for _ in range(m):
                yield s

    def distinct(self) -> list[ShiftedIndec]:
        return [s for s, _ in self._items]

    def is_zero(self) -> bool:
        return not self._items

    def __bool__(self) -> bool:
        return bool(self._items)

    def __len__(self) -> int:
        return sum(m for _, m in self._items)

    def __add__(self, other: "DObject") -> "DObject":
        c = Counter(dict(self._items))
        c.update(dict(other._items))
        return DObject(dict(c))

    def suspend(self, k: int = 1) -> "DObject":
        return DObject({s.suspend(k): m for s, m in self._items})

    def __eq__(self, other: object) -> bool:
        return isinstance(other, DObject) and self._items == other._items

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        if not self._items:
            return "DObject(0)"
        parts = [str(s) if m == 1 else f"{s}^{m}" for s, m in self._items]
        return "DObject(" + " + ".join(parts) + ")"


ZERO = DObject()


def direct_sum(objs: Iterable[DObject]) -> DObject:
    total = ZERO
    for o in objs:
        total = total + o
    return total


K0Class = tuple[int, int]


def dim_vector(x: Indec) -> tuple[int, int]:
    if isinstance(x, Preprojective):
        return (x.t + 1, x.t)
    if isinstance(x, Preinjective):
        return (x.s, x.s + 1)
    return (x.length, x.length)


def k0_class(x: DObject | ShiftedIndec) -> K0Class:
    if isinstance(x, ShiftedIndec):
        x = DObject([x])
    a0 = a1 = 0
    for s, m in x.items:
        d0, d1 = dim_vector(s.indec)
        sign = -1 if s.shift % 2 else 1
        a0 += sign * m * d0
        a1 += sign * m * d1
    return (a0, a1)


def euler_form(a: K0Class, b: K0Class) -> int:
    return a[0] * b[0] + a[1] * b[1] - 2 * a[1] * b[0]


def _hom0(x: Indec, y: Indec) -> int:
    if isinstance(x, Preprojective):
        if isinstance(y, Preprojective):
            return max(0, y.t - x.t + 1)
        if isinstance(y, Preinjective):
            return x.t + y.s
        return y.length
    if isinstance(x, Preinjective):
        if isinstance(y, Preinjective):
            return max(0, x.s - y.s + 1)
        return 0
    if isinstance(y, Regular):
        return min(x.length, y.length) if x.tube == y.tube else 0
    if isinstance(y, Preinjective):
        return x.length
    return 0


def module_hom(x: Indec, y: Indec, degree: int) -> int:
    """dim Ext^degree(x, y) for modules x, y."""
    if degree == 0:
        return _hom0(x, y)
    if degree == 1:
        return _hom0(x, y) - euler_form(dim_vector(x), dim_vector(y))
    return 0


def hom_dim(x: ShiftedIndec, y: ShiftedIndec) -> int:
    return module_hom(x.indec, y.indec, y.shift - x.shift)


def hom_dim_obj(x: DObject, y: DObject) -> int:
    return sum(mx * my * hom_dim(sx, sy) for sx, mx in x.items for sy, my in y.items)


# The line-bundle style labels N_i.  N_i = Sigma^-1 I_{-i} for i <= 0 and
# P_{i-1} for i > 0; conversely every non-regular indecomposable is Sigma^k N_j.


def n_object(i: int, shift: int = 0) -> ShiftedIndec:
    if i > 0:
        return ShiftedIndec(Preprojective(i - 1), shift)
    return ShiftedIndec(Preinjective(-i), shift - 1)


def n_coords(x: ShiftedIndec) -> tuple[int, int] | None:
    """Return ``(k, j)`` with ``x = Sigma^k N_j``, or None for regulars."""
    ind = x.indec
    if isinstance(ind, Preprojective):
        return (x.shift, ind.t + 1)
    if isinstance(ind, Preinjective):
        return (x.shift + 1, -ind.s)
    return None


def k0_of_n(j: int) -> K0Class:
    return (j, j - 1)


def ar_translate(x: ShiftedIndec) -> ShiftedIndec:
    ind = x.indec
    if isinstance(ind, Regular):
        return x
    if isinstance(ind, Preinjective):
        return ShiftedIndec(Preinjective(ind.s + 2), x.shift)
    if ind.t >= 2:
        return ShiftedIndec(Preprojective(ind.t - 2), x.shift)
    return ShiftedIndec(Preinjective(1 - ind.t), x.shift - 1)


def pair_triangle(x: ShiftedIndec, n: int) -> tuple[DObject, DObject]:
    """Outer terms of ``Sigma^c N_{n+1}^a -> x -> Sigma^{c+1} N_n^b``.

    If x is itself a shift of N_n or N_{n+1} the degenerate triangle is used,
    so one of the returned terms is zero.
    """
    nc = n_coords(x)
    if nc is None:
        d = x.indec.length  # type: ignore[union-attr]
        return (
            DObject({n_object(n + 1, x.shift): d}),
            DObject({n_object(n, x.shift + 1): d}),
        )
    k, j = nc
    if j == n + 1:
        return DObject([x]), ZERO
    if j == n:
        return ZERO, DObject([x])
    if j > n + 1:
        return (
            DObject({n_object(n + 1, k): j - n}),
            DObject({n_object(n, k + 1): j - n - 1}),
        )
    return (
        DObject({n_object(n + 1, k - 1): n - j}),
        DObject({n_object(n, k): n + 1 - j}),
    )


def standard_triangle(x: Indec) -> tuple[DObject, DObject, DObject]:
    """``P_1^a -> x -> (Sigma P_0)^b`` with the degenerate form for P_0, P_1."""
    mid = DObject.of(x)
    if isinstance(x, Preprojective) and x.t <= 1:
        return mid, mid, ZERO
    left, right = pair_triangle(ShiftedIndec(x, 0), 1)
    return left, mid, right
