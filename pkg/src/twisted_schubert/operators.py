"""
Formal integer combinations of words in the divided differences ``d(a,b)``.

A term ``(coeff, leading, word)`` stands for ``coeff * leading * d(p_1) d(p_2) ... d(p_k)``
where the rightmost factor acts first.  Pairs are stored with ``a < b``;
``d(b,a) = -d(a,b)`` is absorbed into the coefficient.  No other relation is
used, so two expressions for the same operator may look different; compare
them with :func:`operators_agree`.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field
from functools import lru_cache

from .permutations import (
    Permutation, alpha_beta_pairs, canonical_reduced_word, compose,
    subwords_with_product,
)
from .polyring import (
    MultiPoly, act_permutation, divided_difference, monomials_up_to_degree,
    twisted_op,
)

__all__ = [
    "OperatorExpr", "identity_op", "dd", "apply", "skew_naive", "twisted_skew_naive",
    "twisted_skew_positive", "twisted_T", "leibniz_expand", "operators_agree",
    "commutation_normal_form", "equality_basket",
]

Pair = tuple[int, int]
Word = tuple[Pair, ...]


def _normalize(word) -> tuple[int, Word]:
    sign = 1
    out = []
    for a, b in word:
        if a == b:
            raise ValueError(f"d({a},{b}) is undefined")
        if a > b:
            sign = -sign
            a, b = b, a
        out.append((a, b))
    return sign, tuple(out)


@dataclass(frozen=True)
class OperatorExpr:
    """Sum of ``coeff * [leading] * d-word`` terms; see module docstring."""
    terms: dict = field(default_factory=dict)  # (leading | None, word) -> int
    positive: bool = False

    def __post_init__(self):
        merged = defaultdict(int)
        for (lead, word), c in self.terms.items():
            sign, w = _normalize(word)
            if lead is not None and lead.is_identity():
                lead = None
            merged[(lead, w)] += sign * c
        object.__setattr__(self, "terms", {k: c for k, c in merged.items() if c})
        if self.positive and not self.is_positive_form():
            raise ValueError("expression flagged positive violates positive form")

    @classmethod
    def from_terms(cls, items, positive: bool = False) -> OperatorExpr:
        """Build from ``(coeff, leading, word)`` triples."""
        terms = defaultdict(int)
        for c, lead, word in items:
            sign, w = _normalize(word)
            terms[(lead, w)] += sign * c
        return cls(dict(terms), positive=positive)

    def is_positive_form(self) -> bool:
        return all(c > 0 and lead is None for (lead, _), c in self.terms.items())

    def is_zero(self) -> bool:
        return not self.terms

    def words(self) -> dict:
        """``{word: coeff}`` for expressions without leading permutations."""
        if any(lead is not None for lead, _ in self.terms):
            raise ValueError("expression has leading permutations")
        return {w: c for (_, w), c in self.terms.items()}

    def max_length_part(self) -> OperatorExpr:
        if not self.terms:
            return self
        top = max(len(w) for _, w in self.terms)
        return OperatorExpr({k: c for k, c in self.terms.items() if len(k[1]) == top})

    def __add__(self, other: OperatorExpr) -> OperatorExpr:
        terms = defaultdict(int, self.terms)
        for k, c in other.terms.items():
            terms[k] += c
        return OperatorExpr(dict(terms))

    def __neg__(self):
        return OperatorExpr({k: -c for k, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def then(self, pair: Pair) -> OperatorExpr:
        """``d(pair) * self`` (``pair`` applied after ``self``); leading-free only."""
        sign, (p,) = _normalize([pair])
        terms = {}
        for (lead, w), c in self.terms.items():
            if lead is not None:
                raise ValueError("cannot prepend past a leading permutation")
            terms[(None, (p,) + w)] = sign * c
        return OperatorExpr(terms)

    def sorted_terms(self):
        return sorted(
            self.terms.items(),
            key=lambda kv: (-len(kv[0][1]), kv[0][1], () if kv[0][0] is None else kv[0][0].images),
        )

    def to_text(self, latex: bool = False) -> str:
        if not self.terms:
            return "0"
        out = []
        for (lead, w), c in self.sorted_terms():
            if latex:
                factors = [] if lead is None else [rf"\sigma_{{{lead}}}"]
                factors += [rf"\partial_{{{a}{b}}}" for a, b in w]
                body = " ".join(factors) if factors else "1"
                mult = " "
            else:
                factors = [] if lead is None else [f"[w={lead}]"]
                factors += [f"∂({a},{b})" for a, b in w]
                body = "*".join(factors) if factors else "1"
                mult = "*"
            a = abs(c)
            if a != 1:
                body = f"{a}{mult}{body}"
            if not out:
                out.append(body if c > 0 else f"-{body}")
            else:
                out.append(f" {'+' if c > 0 else '-'} {body}")
        return "".join(out)

    def __str__(self):
        return self.to_text()

    def to_json(self) -> dict:
        return {
            "positive": self.positive,
            "terms": [
                {
                    "coeff": str(c),
                    "leading": None if lead is None else lead.to_json(),
                    "word": [list(p) for p in w],
                }
                for (lead, w), c in self.sorted_terms()
            ],
        }

    @classmethod
    def from_json(cls, data: dict) -> OperatorExpr:
        items = []
        for t in data["terms"]:
            lead = None if t["leading"] is None else Permutation(tuple(t["leading"]))
            items.append((int(t["coeff"]), lead, tuple(tuple(p) for p in t["word"])))
        return cls.from_terms(items, positive=bool(data.get("positive", False)))


def identity_op() -> OperatorExpr:
    return OperatorExpr({(None, ()): 1})


def dd(*pairs) -> OperatorExpr:
    """Single word ``d(p_1) d(p_2) ...``."""
    return OperatorExpr.from_terms([(1, None, tuple(pairs))])


@lru_cache(maxsize=200_000)
def _apply_word(word: Word, P: MultiPoly) -> MultiPoly:
    if not word:
        return P
    inner = _apply_word(word[1:], P)
    a, b = word[0]
    return divided_difference(a, b, inner)


def apply(expr: OperatorExpr, P: MultiPoly) -> MultiPoly:
    result = MultiPoly.zero(P.n)
    for (lead, word), c in expr.terms.items():
        Q = _apply_word(word, P)
        if lead is not None:
            Q = act_permutation(lead, Q)
        result = result + Q * c
    return result


def _moved_left(word, J, n: int) -> tuple[Permutation, list[Pair]]:
    """Rewrite ``phi_J`` as ``g * d-word`` by pushing group elements left.

    Scans right to left keeping ``phi = g * D``; a divided difference
    ``d_i`` in front becomes ``g * d(g^{-1}(i), g^{-1}(i+1)) * D``.
    """
    g = Permutation.identity(n)
    pairs: list[Pair] = []
    J = set(J)
    for pos in range(len(word), 0, -1):
        i = word[pos - 1]
        if pos in J:
            g = g.left_mul_simple(i)
        else:
            ginv = g.inverse()
            pairs.append((ginv(i), ginv(i + 1)))
    pairs.reverse()
    return g, pairs


def _skew(w: Permutation, v: Permutation, require_reduced: bool, word=None) -> OperatorExpr:
    if v.n != w.n:
        raise ValueError("size mismatch")
    word = canonical_reduced_word(w) if word is None else tuple(word)
    items = []
    for J in subwords_with_product(word, v, require_reduced=require_reduced):
        g, pairs = _moved_left(word, J, w.n)
        assert g == v
        items.append((1, None, tuple(pairs)))
    return OperatorExpr.from_terms(items)


def skew_naive(w: Permutation, v: Permutation, word=None) -> OperatorExpr:
    """Macdonald's skew operator ``v^{-1} sum_J phi_J`` over reduced subwords for ``v``."""
    return _skew(w, v, True, word)


def twisted_skew_naive(w: Permutation, v: Permutation, word=None) -> OperatorExpr:
    """Twisted skew operator from ``T_w = sum_v v * tdel_{w/v}``; subwords need not be reduced."""
    return _skew(w, v, False, word)


def twisted_skew_positive(w: Permutation, v: Permutation, word=None) -> OperatorExpr:
    """Positive expansion ``sum_J prod_{j not in J} d(alpha_j, beta_j)``.

    ``word`` is a reduced word for ``w0 * v`` (lex-min by default) and ``J``
    ranges over subwords, reduced or not, whose product is ``w0 * w``.
    """
    if v.n != w.n:
        raise ValueError("size mismatch")
    n = w.n
    w0 = Permutation.longest(n)
    w0v = compose(w0, v)
    word = canonical_reduced_word(w0v) if word is None else tuple(word)
    if Permutation.from_word(word, n) != w0v:
        raise ValueError(f"word {word} is not a word for w0*v = {w0v}")
    pairs = alpha_beta_pairs(word, n)
    items = []
    for J in subwords_with_product(word, compose(w0, w)):
        Js = set(J)
        items.append((1, None, tuple(pairs[j - 1] for j in range(1, len(word) + 1) if j not in Js)))
    return OperatorExpr.from_terms(items, positive=True)


def twisted_T(w: Permutation, P: MultiPoly, word=None) -> MultiPoly:
    """``T_w P = T_{i_1} ... T_{i_l} P`` for a word of ``w``."""
    word = canonical_reduced_word(w) if word is None else tuple(word)
    for i in reversed(word):
        P = twisted_op(i, P)
    return P


def leibniz_expand(w: Permutation, P: MultiPoly, Q: MultiPoly) -> MultiPoly:
    """Right side of ``T_w(PQ) = sum_v v(tdel_{w/v} P) * T_v Q``."""
    from .permutations import all_permutations

    total = MultiPoly.zero(P.n)
    for v in all_permutations(w.n):
        op = twisted_skew_naive(w, v)
        if op.is_zero():
            continue
        left = act_permutation(v, apply(op, P))
        if left.is_zero():
            continue
        total = total + left * twisted_T(v, Q)
    return total


def equality_basket(n: int, degree: int | None = None) -> list[MultiPoly]:
    """Monomials of degree up to ``n(n-1)/2`` (or ``degree``) in ``x_1..x_n``."""
    d = n * (n - 1) // 2 if degree is None else degree
    return monomials_up_to_degree(n, d)


def operators_agree(e1: OperatorExpr, e2: OperatorExpr, basket) -> bool:
    """Equal action on every polynomial of ``basket``."""
    return all(apply(e1, P) == apply(e2, P) for P in basket)


def commutation_normal_form(expr: OperatorExpr) -> dict:
    """``{word: coeff}`` modulo ``d(i,j) d(k,l) = d(k,l) d(i,j)`` for disjoint pairs.

    Each word is replaced by the lexicographically least word reachable by
    swapping adjacent disjoint letters (a trace-monoid normal form).
    """
    out = defaultdict(int)
    for w, c in expr.words().items():
        out[_trace_min(w)] += c
    return {w: c for w, c in out.items() if c}


def _trace_min(word: Word) -> Word:
    # greedy: repeatedly take the least letter that commutes past everything before it
    rest = list(word)
    out = []
    while rest:
        best = None
        for k, p in enumerate(rest):
            if all(not (set(p) & set(q)) for q in rest[:k]):
                if best is None or p < rest[best]:
                    best = k
        out.append(rest.pop(best))
    return tuple(out)
