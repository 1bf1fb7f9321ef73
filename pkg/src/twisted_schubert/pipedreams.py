"""
Pipe dreams on the staircase ``{(i, j) : i + j <= n}``.

Pipes enter on the left of each row and leave through the top.  A cross
lets both pipes go straight; an elbow tile joins left-to-top and
bottom-to-right.  Cells with ``i + j = n + 1`` are always elbows.  Pipes are
labelled by the column where they exit, so the pipe entering row ``i`` has
label ``w(i)``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache

from .permutations import Permutation
from .polyring import MultiPoly

__all__ = [
    "PipeDream", "trace", "staircase_cells", "reduced_pipe_dreams",
    "pipe_dream_weight", "pipe_dream_double_weight",
]


def staircase_cells(n: int) -> list[tuple[int, int]]:
    return [(i, j) for i in range(1, n) for j in range(1, n + 1 - i)]


@dataclass(frozen=True)
class PipeDream:
    n: int
    crosses: frozenset

    def __post_init__(self):
        crosses = frozenset(tuple(c) for c in self.crosses)
        for i, j in crosses:
            if i < 1 or j < 1 or i + j > self.n:
                raise ValueError(f"cross {(i, j)} outside the staircase of size {self.n}")
        object.__setattr__(self, "crosses", crosses)

    def permutation(self) -> Permutation:
        return Permutation(trace(self).exits)

    def is_reduced(self) -> bool:
        return trace(self).reduced

    def to_json(self) -> dict:
        return {"n": self.n, "crosses": [list(c) for c in sorted(self.crosses)]}

    @classmethod
    def from_json(cls, data: dict) -> PipeDream:
        return cls(int(data["n"]), frozenset(tuple(c) for c in data["crosses"]))

    def to_text(self) -> str:
        rows = []
        for i in range(1, self.n):
            cells = ["+" if (i, j) in self.crosses else "." for j in range(1, self.n + 1 - i)]
            rows.append(" ".join(cells))
        return "\n".join(rows)


@dataclass(frozen=True)
class Trace:
    exits: tuple[int, ...]           # exits[i-1]: column where the row-i pipe leaves
    reduced: bool
    left_edges: dict                 # column c -> labels crossing its left edge, top to bottom


@lru_cache(maxsize=None)
def trace(pd: PipeDream) -> Trace:
    n = pd.n
    # first pass: exit columns
    exits = []
    paths = []
    for start in range(1, n + 1):
        r, c, moving_right = start, 1, True
        path = []
        while r >= 1:
            if moving_right:
                path.append((r, c))
            if (r, c) in pd.crosses:
                if moving_right:
                    c += 1
                else:
                    r -= 1
            else:
                if moving_right:
                    r -= 1
                    moving_right = False
                else:
                    c += 1
                    moving_right = True
        exits.append(c)
        paths.append(path)
    left_edges: dict[int, list] = {c: [None] * (n + 1 - c) for c in range(1, n + 1)}
    for start, path in enumerate(paths, 1):
        label = exits[start - 1]
        for r, c in path:
            left_edges[c][r - 1] = label
    # each cross is met by two pipes; reduced means no pair meets twice
    seen = set()
    reduced = True
    for pair in _crossing_pairs(pd, exits):
        if pair in seen:
            reduced = False
        seen.add(pair)
    return Trace(tuple(exits), reduced, {c: tuple(v) for c, v in left_edges.items()})


def _crossing_pairs(pd: PipeDream, exits) -> list[frozenset]:
    n = pd.n
    horiz = {}  # (r, c) -> label of pipe passing through horizontally
    vert = {}
    for start in range(1, n + 1):
        label = exits[start - 1]
        r, c, moving_right = start, 1, True
        while r >= 1:
            cross = (r, c) in pd.crosses
            if cross:
                (horiz if moving_right else vert)[(r, c)] = label
                if moving_right:
                    c += 1
                else:
                    r -= 1
            elif moving_right:
                r -= 1
                moving_right = False
            else:
                c += 1
                moving_right = True
    return [frozenset((horiz[cell], vert[cell])) for cell in sorted(pd.crosses)]


def pipe_dream_weight(pd: PipeDream) -> MultiPoly:
    """``prod x_i`` over crosses ``(i, j)``."""
    e = [0] * pd.n
    for i, _ in pd.crosses:
        e[i - 1] += 1
    return MultiPoly.monomial(e, n=pd.n)


def pipe_dream_double_weight(pd: PipeDream) -> MultiPoly:
    """``prod (x_i - y_j)`` over crosses ``(i, j)``."""
    n = pd.n
    result = MultiPoly.one(n)
    for i, j in sorted(pd.crosses):
        result = result * (MultiPoly.x(i, n) - MultiPoly.y(j, n))
    return result


@lru_cache(maxsize=None)
def _reduced_pipe_dreams_by_perm(n: int, size: int) -> dict:
    table: dict[Permutation, list[PipeDream]] = {}
    for cells in itertools.combinations(staircase_cells(n), size):
        pd = PipeDream(n, frozenset(cells))
        t = trace(pd)
        if t.reduced:
            table.setdefault(Permutation(t.exits), []).append(pd)
    return table


def reduced_pipe_dreams(w: Permutation) -> list[PipeDream]:
    """All reduced pipe dreams of ``w``: cross sets of size ``l(w)`` in the staircase."""
    pds = _reduced_pipe_dreams_by_perm(w.n, w.length()).get(w, [])
    return sorted(pds, key=lambda pd: sorted(pd.crosses))
