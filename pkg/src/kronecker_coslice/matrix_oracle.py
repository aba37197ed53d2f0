"""Brute-force Hom dimensions from explicit Kronecker representations.

Each indecomposable gets a normal-form pair of matrices ``A, B: V1 -> V0``.
A morphism is a pair ``(f0, f1)`` with ``f0 A_x = A_y f1`` and
``f0 B_x = B_y f1``; its space is the kernel of a linear system whose rank is
computed exactly with sympy's DomainMatrix.  This module never looks at the
closed-form table in ``core_category``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from sympy import GF, QQ
from sympy.polys.matrices import DomainMatrix

from .core_category import INF_LABEL, Indec, Preinjective, Preprojective, ShiftedIndec

Matrix = tuple[tuple[int, ...], ...]


@dataclass(frozen=True)
class QuiverRep:
    dim0: int
    dim1: int
    A: Matrix
    B: Matrix

    def __post_init__(self) -> None:
        for m in (self.A, self.B):
            if len(m) != self.dim0 or any(len(row) != self.dim1 for row in m):
                raise ValueError("matrix shape does not match (dim0, dim1)")


def _zeros(r: int, c: int) -> list[list[int]]:
    return [[0] * c for _ in range(r)]


def _freeze(m: list[list[int]]) -> Matrix:
    return tuple(tuple(row) for row in m)


def _label_value(tube: str) -> int:
    # Finite labels are eigenvalues; any injective map to the field works.
    return int(tube) if tube.lstrip("-").isdigit() else sum(map(ord, tube)) + 1000


def representation_of(x: Indec) -> QuiverRep:
    if isinstance(x, Preprojective):
        t = x.t
        A, B = _zeros(t + 1, t), _zeros(t + 1, t)
        for i in range(t):
            A[i][i] = 1
            B[i + 1][i] = 1
        return QuiverRep(t + 1, t, _freeze(A), _freeze(B))
    if isinstance(x, Preinjective):
        s = x.s
        A, B = _zeros(s, s + 1), _zeros(s, s + 1)
        for i in range(s):
            A[i][i] = 1
            B[i][i + 1] = 1
        return QuiverRep(s, s + 1, _freeze(A), _freeze(B))
    d = x.length
    ident, jordan = _zeros(d, d), _zeros(d, d)
    lam = 0 if x.tube == INF_LABEL else _label_value(x.tube)
    for i in range(d):
        ident[i][i] = 1
        jordan[i][i] = lam
        if i + 1 < d:
            jordan[i][i + 1] = 1
    if x.tube == INF_LABEL:
        return QuiverRep(d, d, _freeze(jordan), _freeze(ident))
    return QuiverRep(d, d, _freeze(ident), _freeze(jordan))


def intertwiner_system(x: QuiverRep, y: QuiverRep) -> tuple[list[list[int]], int]:
    """Coefficient rows of the Hom(x, y) system and the number of unknowns.

    Unknowns: f0 (y.dim0 x x.dim0) row-major, then f1 (y.dim1 x x.dim1).
    """
    n0 = y.dim0 * x.dim0
    n_unknowns = n0 + y.dim1 * x.dim1

    def f0(r: int, c: int) -> int:
        return r * x.dim0 + c

    def f1(r: int, c: int) -> int:
        return n0 + r * x.dim1 + c

    rows: list[list[int]] = []
    for Mx, My in ((x.A, y.A), (x.B, y.B)):
        # (f0 Mx - My f1)[r][c] = 0 for r < y.dim0, c < x.dim1
        for r in range(y.dim0):
            for c in range(x.dim1):
                row = [0] * n_unknowns
                for k in range(x.dim0):
                    if Mx[k][c]:
                        row[f0(r, k)] += Mx[k][c]
                for k in range(y.dim1):
                    if My[r][k]:
                        row[f1(k, c)] -= My[r][k]
                if any(row):
                    rows.append(row)
    return rows, n_unknowns


def _rank(rows: list[list[int]], n_cols: int, modulus: int | None) -> int:
    if not rows:
        return 0
    dom = QQ if modulus is None else GF(modulus)
    mat = DomainMatrix([[dom(v) for v in row] for row in rows], (len(rows), n_cols), dom)
    return mat.rank()


@lru_cache(maxsize=None)
def _hom0(x: Indec, y: Indec, modulus: int | None) -> int:
    rows, n = intertwiner_system(representation_of(x), representation_of(y))
    return n - _rank(rows, n, modulus)


def _euler(x: QuiverRep, y: QuiverRep) -> int:
    return x.dim0 * y.dim0 + x.dim1 * y.dim1 - 2 * x.dim1 * y.dim0


def hom_dim_oracle(x: Indec, y: Indec, degree: int, modulus: int | None = None) -> int:
    """dim Hom (degree 0) or Ext^1 (degree 1) between modules; 0 otherwise.

    ``modulus`` selects a prime field instead of the rationals.
    """
    if degree not in (0, 1):
        return 0
    h = _hom0(x, y, modulus)
    if degree == 0:
        return h
    return h - _euler(representation_of(x), representation_of(y))


def hom_dim_oracle_shifted(x: ShiftedIndec, y: ShiftedIndec, modulus: int | None = None) -> int:
    return hom_dim_oracle(x.indec, y.indec, y.shift - x.shift, modulus)
