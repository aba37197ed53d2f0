"""Finite test windows and seeded object corpora."""

from __future__ import annotations

import json
import os
import random
from dataclasses import asdict, dataclass, fields
from pathlib import Path

from .core_category import (
    INF_LABEL,
    DObject,
    Preinjective,
    Preprojective,
    Regular,
    ShiftedIndec,
    n_coords,
    n_object,
)

WINDOW_ENV = "KCOSLICE_WINDOW"


@dataclass(frozen=True)
class WindowConfig:
    max_shift: int = 3
    max_pp_index: int = 6
    max_pi_index: int = 6
    max_reg_length: int = 4
    tube_labels: tuple[str, ...] = ("0", "1", "2", INF_LABEL)
    pair_index_range: tuple[int, int] = (-2, 3)
    max_p: int = 4
    seed: int = 0
    n_random_sums: int = 100

    def __post_init__(self) -> None:
        for name in ("max_shift", "max_pp_index", "max_pi_index", "max_reg_length", "max_p"):
            if getattr(self, name) < 1:
                raise ValueError(f"{name} must be >= 1")
        if not self.tube_labels:
            raise ValueError("tube_labels must be nonempty")
        lo, hi = self.pair_index_range
        if lo > hi:
            raise ValueError("pair_index_range is empty")
        object.__setattr__(self, "tube_labels", tuple(str(t) for t in self.tube_labels))
        object.__setattr__(self, "pair_index_range", (int(lo), int(hi)))

    @property
    def shifts(self) -> range:
        return range(-self.max_shift, self.max_shift + 1)

    @property
    def pair_indices(self) -> range:
        lo, hi = self.pair_index_range
        return range(lo, hi + 1)

    @property
    def p_values(self) -> range:
        return range(1, self.max_p + 1)

    def modules(self) -> list:
        out: list = [Preprojective(t) for t in range(self.max_pp_index + 1)]
        out += [Preinjective(s) for s in range(self.max_pi_index + 1)]
        out += [Regular(x, d) for x in self.tube_labels for d in range(1, self.max_reg_length + 1)]
        return out

    def regular_modules(self) -> list[Regular]:
        return [m for m in self.modules() if isinstance(m, Regular)]

    def indecomposables(self) -> list[ShiftedIndec]:
        return [ShiftedIndec(m, k) for k in self.shifts for m in self.modules()]

    def contains(self, x: ShiftedIndec) -> bool:
        if abs(x.shift) > self.max_shift:
            return False
        ind = x.indec
        if isinstance(ind, Preprojective):
            return ind.t <= self.max_pp_index
        if isinstance(ind, Preinjective):
            return ind.s <= self.max_pi_index
        return ind.tube in self.tube_labels and ind.length <= self.max_reg_length

    def n_range(self) -> range:
        """Indices j such that some shift of N_j lies in the window."""
        return range(-self.max_pi_index, self.max_pp_index + 2)

    def non_regular(self) -> list[ShiftedIndec]:
        return [x for x in self.indecomposables() if n_coords(x) is not None]

    def random_sums(self, count: int | None = None, seed: int | None = None) -> list[DObject]:
        rng = random.Random(self.seed if seed is None else seed)
        pool = self.indecomposables()
        out = []
        for _ in range(self.n_random_sums if count is None else count):
            size = rng.randint(2, 4)
            out.append(DObject(rng.choice(pool) for _ in range(size)))
        return out

    def corpus(self) -> list[DObject]:
        return [DObject([x]) for x in self.indecomposables()] + self.random_sums()

    def to_json(self) -> dict:
        d = asdict(self)
        d["tube_labels"] = list(self.tube_labels)
        d["pair_index_range"] = list(self.pair_index_range)
        return d

    @classmethod
    def from_json(cls, data: dict) -> "WindowConfig":
        known = {f.name for f in fields(cls)}
        unknown = set(data) - known
        if unknown:
            raise ValueError(f"unknown window field(s): {sorted(unknown)}")
        kwargs = dict(data)
        for key in ("tube_labels", "pair_index_range"):
            if key in kwargs:
                kwargs[key] = tuple(kwargs[key])
        return cls(**kwargs)

    @classmethod
    def load(cls, path: str | os.PathLike | None = None) -> "WindowConfig":
        """Read a window from ``path``, else from ``$KCOSLICE_WINDOW``, else defaults."""
        path = path or os.environ.get(WINDOW_ENV)
        if not path:
            return cls()
        return cls.from_json(json.loads(Path(path).read_text()))


def ar_quiver_dot(w: WindowConfig) -> str:
    """The non-regular part of the AR quiver inside ``w``, as DOT.

    Each arrow N_j -> N_{j+1} stands for the double arrow (Hom dimension 2).
    """
    nodes = sorted(w.non_regular())
    present = set(nodes)
    lines = ["digraph ar_quiver {", "  rankdir=LR;"]
    lines += [f'  "{x}";' for x in nodes]
    for x in nodes:
        k, j = n_coords(x)  # type: ignore[misc]
        y = n_object(j + 1, k)
        if y in present:
            lines.append(f'  "{x}" -> "{y}" [label="2"];')
    lines.append("}")
    return "\n".join(lines) + "\n"


DEFAULT_WINDOW = WindowConfig()

__all__ = ["WindowConfig", "DEFAULT_WINDOW", "WINDOW_ENV", "ar_quiver_dot"]
