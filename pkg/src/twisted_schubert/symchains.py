"""
Transposition chains ``w = v s_{a_1 b_1} ... s_{a_t b_t}`` with ``a_i <= k < b_i``
and strictly increasing length, the closed-form action of twisted skew
operators on ``e_m^{(k)}`` / ``h_m^{(k)}``, and the Pieri rule.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .permutations import Permutation, compose, cycles
from .polyring import MultiPoly, elementary, homogeneous

__all__ = [
    "ChainWitness", "a_set", "b_set", "tdel_on_elementary", "tdel_on_homogeneous",
    "brute_force_chains", "pieri_e", "pieri_h", "pieri_chains",
]


@dataclass(frozen=True)
class ChainWitness:
    kind: str  # "E" (distinct a_i) or "H" (distinct b_i)
    k: int
    transpositions: tuple[tuple[int, int], ...]

    @property
    def support(self) -> frozenset[int]:
        idx = 0 if self.kind == "E" else 1
        return frozenset(t[idx] for t in self.transpositions)

    def to_json(self) -> dict:
        return {
            "kind": self.kind,
            "k": self.k,
            "support": sorted(self.support),
            "transpositions": [list(t) for t in self.transpositions],
        }


def _lengths_increase(v: Permutation, w: Permutation, transpositions) -> bool:
    u, ell = v, v.length()
    for a, b in transpositions:
        u = compose(u, Permutation.transposition(a, b, v.n))
        new = u.length()
        if new <= ell:
            return False
        ell = new
    return u == w


def a_set(v: Permutation, w: Permutation, k: int) -> ChainWitness | None:
    """Witness with distinct ``a_i``, or ``None`` when ``A_k(v, w)`` does not exist.

    Each nontrivial cycle ``(b a_r ... a_1)`` of ``v^{-1} w`` needs exactly one
    letter ``b > k`` and ``v(b) > v(a_1) > ... > v(a_r)``; the resulting
    chain is then re-checked by multiplying it out.
    """
    if v.n != w.n:
        raise ValueError("size mismatch")
    if not 1 <= k < v.n:
        raise ValueError(f"k={k} out of range for S_{v.n}")
    c = compose(v.inverse(), w)
    trans = []
    for cyc in cycles(c):
        big = [x for x in cyc if x > k]
        if len(big) != 1:
            return None
        b = big[0]
        # iterates of c from b are a_r, a_{r-1}, ..., a_1
        seq = []
        x = c(b)
        while x != b:
            seq.append(x)
            x = c(x)
        a_seq = seq[::-1]  # a_1, ..., a_r
        vals = [v(b)] + [v(a) for a in a_seq]
        if any(vals[i] <= vals[i + 1] for i in range(len(vals) - 1)):
            return None
        trans.extend((a, b) for a in a_seq)
    trans.sort(key=lambda t: t[1])  # stable: keeps a_1..a_r within a cycle
    if not _lengths_increase(v, w, trans):
        return None
    return ChainWitness("E", k, tuple(trans))


def b_set(v: Permutation, w: Permutation, k: int) -> ChainWitness | None:
    """Witness with distinct ``b_i``, or ``None`` when ``B_k(v, w)`` does not exist.

    Each nontrivial cycle of ``v^{-1} w`` must hold exactly one letter
    ``a <= k``; the cycle ``(a b_r ... b_1)`` gives the chain
    ``s_{a b_1} ... s_{a b_r}``, accepted only if lengths strictly increase.
    """
    if v.n != w.n:
        raise ValueError("size mismatch")
    if not 1 <= k < v.n:
        raise ValueError(f"k={k} out of range for S_{v.n}")
    c = compose(v.inverse(), w)
    trans = []
    for cyc in cycles(c):
        small = [x for x in cyc if x <= k]
        if len(small) != 1:
            return None
        a = small[0]
        seq = []
        x = c(a)
        while x != a:
            seq.append(x)
            x = c(x)
        trans.extend((a, b) for b in seq[::-1])
    trans.sort(key=lambda t: t[0])
    if not _lengths_increase(v, w, trans):
        return None
    return ChainWitness("H", k, tuple(trans))


def tdel_on_elementary(v: Permutation, w: Permutation, m: int, k: int) -> MultiPoly:
    """Closed form of ``tdel_{w/v} e_m^{(k)}``: ``e_{m-|A|}([k] - A)`` or 0."""
    wit = a_set(v, w, k)
    if wit is None:
        return MultiPoly.zero(v.n)
    A = wit.support
    return elementary(m - len(A), set(range(1, k + 1)) - A, v.n)


def tdel_on_homogeneous(v: Permutation, w: Permutation, m: int, k: int) -> MultiPoly:
    """Closed form of ``tdel_{w/v} h_m^{(k)}``: ``h_{m-|B|}([k] + B)`` or 0."""
    wit = b_set(v, w, k)
    if wit is None:
        return MultiPoly.zero(v.n)
    B = wit.support
    return homogeneous(m - len(B), set(range(1, k + 1)) | B, v.n)


def brute_force_chains(v: Permutation, w: Permutation, k: int, kind: str = "E") -> list[tuple]:
    """Every length-increasing chain from ``v`` to ``w`` with ``a_i <= k < b_i``
    and distinct ``a_i`` (``kind="E"``) or distinct ``b_i`` (``kind="H"``).

    Independent of the cycle criterion; used to check it.
    """
    n = v.n
    target_len = w.length()
    out = []

    def dfs(u, used, chain):
        if u == w:
            out.append(tuple(chain))
            return
        ell = u.length()
        if ell >= target_len:
            return
        for a in range(1, k + 1):
            for b in range(k + 1, n + 1):
                key = a if kind == "E" else b
                if key in used:
                    continue
                nxt = compose(u, Permutation.transposition(a, b, n))
                if nxt.length() > ell:
                    chain.append((a, b))
                    dfs(nxt, used | {key}, chain)
                    chain.pop()

    dfs(v, frozenset(), [])
    return out


def _pieri(v: Permutation, m: int, k: int, N: int, kind: str) -> set[Permutation]:
    if m < 0:
        return set()
    if m == 0:
        return {v.embed(N)}
    if not 1 <= k < N:
        raise ValueError(f"k={k} out of range for S_{N}")
    v = v.embed(N)
    # search room: every transposition may need a fresh letter above N
    M = N + m
    vM = v.embed(M)
    target = v.length() + m
    found = set()
    if kind == "E":
        for A in itertools.combinations(range(1, k + 1), m):
            for bs in itertools.product(range(k + 1, M + 1), repeat=m):
                blocks: dict[int, list[int]] = {}
                for a, b in zip(A, bs):
                    blocks.setdefault(b, []).append(a)
                trans = []
                for b in sorted(blocks):
                    # order forced by v(a_1) > v(a_2) > ...
                    trans += [(a, b) for a in sorted(blocks[b], key=lambda a: -vM(a))]
                w = vM
                for a, b in trans:
                    w = compose(w, Permutation.transposition(a, b, M))
                if w.length() != target:
                    continue
                wit = a_set(vM, w, k)
                if wit is not None and len(wit.support) == m:
                    found.add(w)
    else:
        for B in itertools.combinations(range(k + 1, M + 1), m):
            for As in itertools.product(range(1, k + 1), repeat=m):
                blocks = {}
                for a, b in zip(As, B):
                    blocks.setdefault(a, []).append(b)
                for orders in itertools.product(*(itertools.permutations(blocks[a]) for a in sorted(blocks))):
                    w = vM
                    for a, bseq in zip(sorted(blocks), orders):
                        for b in bseq:
                            w = compose(w, Permutation.transposition(a, b, M))
                    if w.length() != target:
                        continue
                    wit = b_set(vM, w, k)
                    if wit is not None and len(wit.support) == m:
                        found.add(w)
    out = set()
    for w in found:
        if any(w(i) != i for i in range(N + 1, M + 1)):
            raise ValueError(
                f"S_{N} is too small for the Pieri expansion of {v.trim()} with m={m}, k={k}; "
                f"term {w.trim()} moves letters above {N}; pass a larger N"
            )
        out.add(Permutation(w.images[:N]))
    return out


def pieri_e(v: Permutation, m: int, k: int, N: int) -> set[Permutation]:
    """All ``w`` with ``S_w`` appearing in ``S_v * e_m^{(k)}`` (coefficient 1 each)."""
    return _pieri(v, m, k, N, "E")


def pieri_h(v: Permutation, m: int, k: int, N: int) -> set[Permutation]:
    """All ``w`` with ``S_w`` appearing in ``S_v * h_m^{(k)}``."""
    return _pieri(v, m, k, N, "H")


def pieri_chains(v: Permutation, m: int, k: int, N: int, kind: str = "E") -> set[Permutation]:
    """Endpoints of Bruhat-cover chains ``v < v s_{a_1 b_1} < ...`` of length ``m``
    with ``a_i <= k < b_i`` and distinct ``a_i`` (or ``b_i``), searched in
    ``S_{N+m}`` and restricted to ``S_N``.
    """
    M = N + m
    v = v.embed(M)
    ends = set()

    def dfs(u, used, depth):
        if depth == m:
            ends.add(u)
            return
        ell = u.length()
        for a in range(1, k + 1):
            for b in range(k + 1, M + 1):
                key = a if kind == "E" else b
                if key in used:
                    continue
                nxt = compose(u, Permutation.transposition(a, b, M))
                if nxt.length() == ell + 1:
                    dfs(nxt, used | {key}, depth + 1)

    dfs(v, frozenset(), 0)
    out = set()
    for w in ends:
        if any(w(i) != i for i in range(N + 1, M + 1)):
            raise ValueError(f"S_{N} too small for chain endpoint {w.trim()}")
        out.add(Permutation(w.images[:N]))
    return out
