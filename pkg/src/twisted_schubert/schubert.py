"""
Schubert, double Schubert, twisted and double twisted Schubert polynomials,
each by an operator recursion and by a combinatorial sum; localizations;
Billey's formula; expansion in the Schubert basis.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .permutations import (
    Permutation, all_permutations, alpha_beta_pairs, canonical_reduced_word,
    compose, subwords_with_product,
)
from .pipedreams import (
    PipeDream, pipe_dream_double_weight, pipe_dream_weight, reduced_pipe_dreams,
    trace,
)
from .polyring import (
    MultiPoly, divided_difference, staircase, staircase_double, substitute_x_by_y,
    twisted_op,
)
from .symchains import ChainWitness, a_set

__all__ = [
    "schubert", "schubert_via_pipedreams", "double_schubert",
    "double_schubert_via_pipedreams", "twisted_schubert", "twisted_schubert_via_chains",
    "double_twisted_schubert", "double_twisted_schubert_via_chains",
    "ChainSequence", "enumerate_chains", "chain_weight", "min_degree_chains",
    "chain_from_pipe_dream", "pipe_dream_from_chain",
    "LocalizationFactors", "localize", "localize_formula", "billey",
    "expand_schubert", "tv_schubert",
]


# -- recursions -------------------------------------------------------------

@lru_cache(maxsize=None)
def _down_recursion(w: Permutation, double: bool, twisted: bool) -> MultiPoly:
    n = w.n
    if w == Permutation.longest(n):
        return staircase_double(n) if double else staircase(n)
    # w has an ascent i; w = (w s_i) s_i with l(w s_i) = l(w) + 1
    i = next(i for i in range(1, n) if w(i) < w(i + 1))
    parent = _down_recursion(w.right_mul_simple(i), double, twisted)
    if twisted:
        return twisted_op(i, parent)
    return divided_difference(i, i + 1, parent)


def schubert(w: Permutation) -> MultiPoly:
    """``S_w = d_{w^{-1} w0}(x_1^{n-1} ... x_{n-1})``."""
    return _down_recursion(w, False, False)


def double_schubert(w: Permutation) -> MultiPoly:
    """``S_w(x, y) = d_{w^{-1} w0} prod_{i+j<=n} (x_i - y_j)``, acting on x only."""
    return _down_recursion(w, True, False)


def twisted_schubert(w: Permutation) -> MultiPoly:
    """``T_{w^{-1} w0}(x_1^{n-1} ... x_{n-1})``, i.e. ``S~_{w s_i} = T_i S~_w``."""
    return _down_recursion(w, False, True)


def double_twisted_schubert(w: Permutation) -> MultiPoly:
    return _down_recursion(w, True, True)


def schubert_via_pipedreams(w: Permutation) -> MultiPoly:
    total = MultiPoly.zero(w.n)
    for pd in reduced_pipe_dreams(w):
        total = total + pipe_dream_weight(pd)
    return total


def double_schubert_via_pipedreams(w: Permutation) -> MultiPoly:
    total = MultiPoly.zero(w.n)
    for pd in reduced_pipe_dreams(w):
        total = total + pipe_dream_double_weight(pd)
    return total


# -- Bruhat chains ------------------------------------------------------------

@dataclass(frozen=True)
class ChainSequence:
    """``u_1, ..., u_n`` with ``u_n = w^{-1} w0`` and every ``A_i(u_i, u_{i+1})`` existing."""
    n: int
    perms: tuple[Permutation, ...]
    witnesses: tuple[ChainWitness, ...]

    @property
    def supports(self) -> tuple[frozenset, ...]:
        return tuple(wit.support for wit in self.witnesses)

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "perms": [p.to_json() for p in self.perms],
            "witnesses": [wit.to_json() for wit in self.witnesses],
        }


@lru_cache(maxsize=None)
def _predecessors(u_next: Permutation, k: int) -> tuple:
    """All ``(u, witness)`` with ``A_k(u, u_next)`` existing."""
    out = []
    for u in all_permutations(u_next.n):
        wit = a_set(u, u_next, k)
        if wit is not None:
            out.append((u, wit))
    return tuple(out)


def _level_factor(u: Permutation, wit: ChainWitness, i: int, double: bool) -> MultiPoly:
    n = u.n
    result = MultiPoly.one(n)
    for j in range(1, i + 1):
        if j in wit.support:
            continue
        f = MultiPoly.x(u(j), n)
        if double:
            f = f - MultiPoly.y(n - i, n)
        result = result * f
    return result


def enumerate_chains(w: Permutation) -> list[ChainSequence]:
    """Every chain ``u_1, ..., u_{n-1}`` below ``u_n = w^{-1} w0``."""
    n = w.n
    un = compose(w.inverse(), Permutation.longest(n))
    out = []

    def dfs(i, perms, wits):
        # perms holds u_{i+1}, ..., u_n (reversed)
        if i == 0:
            out.append(ChainSequence(n, tuple(reversed(perms)), tuple(reversed(wits))))
            return
        for u, wit in _predecessors(perms[-1], i):
            perms.append(u)
            wits.append(wit)
            dfs(i - 1, perms, wits)
            perms.pop()
            wits.pop()

    dfs(n - 1, [un], [])
    return out


def chain_weight(chain: ChainSequence, double: bool = False) -> MultiPoly:
    """``prod_i prod_{j <= i, j not in A_i} x_{u_i(j)}`` (or ``x_{u_i(j)} - y_{n-i}``)."""
    n = chain.n
    result = MultiPoly.one(n)
    for i in range(1, n):
        result = result * _level_factor(chain.perms[i - 1], chain.witnesses[i - 1], i, double)
    return result


@lru_cache(maxsize=None)
def _chain_sum(u_next: Permutation, i: int, double: bool) -> MultiPoly:
    # sum over u_i, ..., u_1 below a fixed u_{i+1}
    n = u_next.n
    if i == 0:
        return MultiPoly.one(n)
    total = MultiPoly.zero(n)
    for u, wit in _predecessors(u_next, i):
        total = total + _level_factor(u, wit, i, double) * _chain_sum(u, i - 1, double)
    return total


def twisted_schubert_via_chains(w: Permutation) -> MultiPoly:
    """Sum of chain weights; a manifestly nonnegative expression."""
    un = compose(w.inverse(), Permutation.longest(w.n))
    return _chain_sum(un, w.n - 1, False)


def double_twisted_schubert_via_chains(w: Permutation) -> MultiPoly:
    un = compose(w.inverse(), Permutation.longest(w.n))
    return _chain_sum(un, w.n - 1, True)


def min_degree_chains(w: Permutation) -> list[ChainSequence]:
    """Chains with ``u_1 = id`` and ``|A_i| = l(u_{i+1}) - l(u_i)``; these give ``S_w``."""
    out = []
    for ch in enumerate_chains(w):
        if not ch.perms[0].is_identity():
            continue
        if all(
            len(ch.witnesses[i].support) == ch.perms[i + 1].length() - ch.perms[i].length()
            for i in range(ch.n - 1)
        ):
            out.append(ch)
    return out


def chain_from_pipe_dream(pd: PipeDream) -> ChainSequence:
    """Read ``w0 u_i^{-1}`` down the left edge of column ``n + 1 - i``, then ``n-i, ..., 1``."""
    t = trace(pd)
    if not t.reduced:
        raise ValueError("pipe dream is not reduced")
    n = pd.n
    w0 = Permutation.longest(n)
    perms = []
    for i in range(1, n + 1):
        reading = Permutation(t.left_edges[n + 1 - i] + tuple(range(n - i, 0, -1)))
        perms.append(compose(reading.inverse(), w0))
    wits = []
    for i in range(1, n):
        wit = a_set(perms[i - 1], perms[i], i)
        if wit is None:
            raise ValueError(f"no witness A_{i}({perms[i - 1]}, {perms[i]})")
        wits.append(wit)
    return ChainSequence(n, tuple(perms), tuple(wits))


def pipe_dream_from_chain(chain: ChainSequence) -> PipeDream:
    """Inverse of :func:`chain_from_pipe_dream`: column ``n - i`` has crosses in rows
    ``u_i(j)`` for ``j <= i`` with ``j`` not in ``A_i``."""
    n = chain.n
    crosses = set()
    for i in range(1, n):
        u, wit = chain.perms[i - 1], chain.witnesses[i - 1]
        for j in range(1, i + 1):
            if j not in wit.support:
                crosses.add((u(j), n - i))
    return PipeDream(n, frozenset(crosses))


# -- localization -------------------------------------------------------------

@dataclass(frozen=True)
class LocalizationFactors:
    prefactor: MultiPoly   # prod (1 + y_b - y_a) over a < b with w^{-1}(a) < w^{-1}(b)
    subset_sum: MultiPoly  # sum_J prod_{j in J} (y_{beta_j} - y_{alpha_j})
    pairs: tuple = ()      # the (a, b) behind each prefactor factor

    def product(self) -> MultiPoly:
        return self.prefactor * self.subset_sum

    def to_text(self) -> str:
        parts = [f"(1+y{b}-y{a})" for a, b in self.pairs]
        if self.subset_sum.is_zero():
            return "0"
        if self.subset_sum != MultiPoly.one(self.subset_sum.n):
            s = self.subset_sum.to_text()
            parts.append(f"({s})" if len(self.subset_sum.terms) > 1 else s)
        return "*".join(parts) or "1"


def localize(v: Permutation, w: Permutation) -> MultiPoly:
    """``S~_v(y_{w(1)}, ..., y_{w(n)}; y_1, ..., y_n)`` by direct substitution."""
    if v.n != w.n:
        raise ValueError("size mismatch")
    return substitute_x_by_y(double_twisted_schubert(v), w)


def _subset_sum(v: Permutation, w: Permutation, word, reduced: bool) -> MultiPoly:
    n = w.n
    word = canonical_reduced_word(w.inverse()) if word is None else tuple(word)
    if Permutation.from_word(word, n) != w.inverse():
        raise ValueError(f"word {word} is not a word for w^-1 = {w.inverse()}")
    pairs = alpha_beta_pairs(word, n)
    total = MultiPoly.zero(n)
    for J in subwords_with_product(word, v.inverse(), require_reduced=reduced):
        term = MultiPoly.one(n)
        for j in J:
            a, b = pairs[j - 1]
            term = term * (MultiPoly.y(b, n) - MultiPoly.y(a, n))
        total = total + term
    return total


def localize_formula(v: Permutation, w: Permutation, word=None) -> LocalizationFactors:
    """Closed form ``P(w) * Q(v, w)`` from a reduced word of ``w^{-1}``."""
    if v.n != w.n:
        raise ValueError("size mismatch")
    n = w.n
    winv = w.inverse()
    pre = MultiPoly.one(n)
    pairs = []
    for a in range(1, n + 1):
        for b in range(a + 1, n + 1):
            if winv(a) < winv(b):
                pre = pre * (MultiPoly.y(b, n) - MultiPoly.y(a, n) + 1)
                pairs.append((a, b))
    return LocalizationFactors(pre, _subset_sum(v, w, word, reduced=False), tuple(pairs))


def billey(v: Permutation, w: Permutation, word=None) -> MultiPoly:
    """``S_v(wy, y)`` as a sum over reduced subwords for ``v^{-1}``."""
    if v.n != w.n:
        raise ValueError("size mismatch")
    return _subset_sum(v, w, word, reduced=True)


# -- Schubert basis -----------------------------------------------------------

@lru_cache(maxsize=None)
def _stable_schubert(w: Permutation) -> MultiPoly:
    return schubert(w.trim())


def expand_schubert(F: MultiPoly, N: int | None = None) -> dict[Permutation, int]:
    """Coefficients of ``F`` (no y variables) in the Schubert basis of ``S_N``.

    Repeatedly subtracts ``c * S_w`` where ``x^{code(w)}`` is the lex-leading
    monomial of what is left.
    """
    if F.y_degree():
        raise ValueError("expand_schubert needs a polynomial in x only")
    if F.is_zero():
        return {}
    if N is None:
        used = max((i + 1 for m in F.terms for i in range(F.n) if m[i]), default=0)
        N = F.degree() + used + 1
    amb = max(F.n, N)
    rest = F.embed(amb)
    out: dict[Permutation, int] = {}
    budget = 1 + sum(abs(c) for c in F.terms.values()) * 10_000
    while not rest.is_zero():
        budget -= 1
        if budget < 0:
            raise RuntimeError("Schubert expansion did not terminate; increase N")
        lead = rest.leading_x_monomial()
        c = rest.terms[lead + (0,) * amb]
        try:
            w = Permutation.from_code(lead, N)
        except ValueError as exc:
            raise ValueError(f"N={N} too small for leading monomial {lead}: {exc}") from None
        S = _stable_schubert(w)
        rest = rest - S.embed(amb) * c
        out[w] = out.get(w, 0) + c
    return {w: c for w, c in out.items() if c}


def tv_schubert(v: Permutation, w: Permutation) -> MultiPoly:
    """``T_v S_w`` for ``v, w`` in the same ``S_n``."""
    from .operators import twisted_T
    return twisted_T(v, schubert(w))
