"""
Permutations of ``{1, ..., n}`` in one-line notation, reduced words, the
wiring-diagram pairs of a reduced word, Bruhat order and subword enumeration.

Composition is ``(u * v)(i) == u(v(i))``.  A word ``(i_1, ..., i_l)`` denotes
the product ``s_{i_1} * s_{i_2} * ... * s_{i_l}`` taken left to right, so
``w * s_i`` swaps the entries in positions ``i`` and ``i + 1`` of ``w``.

>>> w = Permutation.parse("2431")
>>> w.length()
4
>>> canonical_reduced_word(Permutation.parse("321"))
(1, 2, 1)
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache

__all__ = [
    "Permutation", "compose", "word_product", "is_reduced", "reduced_words",
    "canonical_reduced_word", "alpha_beta_pairs", "bruhat_leq",
    "bruhat_leq_tableau", "subwords_with_product", "remove_letters_factorization",
    "cycles", "all_permutations",
]


@dataclass(frozen=True, slots=True)
class Permutation:
    """An element of S_n; ``images[i - 1] == w(i)``."""
    images: tuple[int, ...]

    def __post_init__(self):
        imgs = tuple(int(a) for a in self.images)
        if not imgs or sorted(imgs) != list(range(1, len(imgs) + 1)):
            raise ValueError(f"not a permutation of 1..{len(imgs)}: {self.images!r}")
        object.__setattr__(self, "images", imgs)

    # -- constructors -----------------------------------------------------

    @classmethod
    def identity(cls, n: int) -> Permutation:
        return cls(tuple(range(1, n + 1)))

    @classmethod
    def longest(cls, n: int) -> Permutation:
        return cls(tuple(range(n, 0, -1)))

    @classmethod
    def transposition(cls, a: int, b: int, n: int) -> Permutation:
        imgs = list(range(1, n + 1))
        imgs[a - 1], imgs[b - 1] = b, a
        return cls(tuple(imgs))

    @classmethod
    def simple(cls, i: int, n: int) -> Permutation:
        return cls.transposition(i, i + 1, n)

    @classmethod
    def from_word(cls, word, n: int) -> Permutation:
        return word_product(tuple(word), n)

    @classmethod
    def from_code(cls, code, n: int | None = None) -> Permutation:
        """Inverse of :meth:`code`; ``n`` defaults to ``len(code)``."""
        code = list(code)
        n = len(code) if n is None else n
        if len(code) > n:
            if any(code[n:]):
                raise ValueError(f"code {code} does not fit in S_{n}")
            code = code[:n]
        code += [0] * (n - len(code))
        avail = list(range(1, n + 1))
        imgs = []
        for i, c in enumerate(code):
            if c > n - 1 - i:
                raise ValueError(f"code {code} does not fit in S_{n}")
            imgs.append(avail.pop(c))
        return cls(tuple(imgs))

    @classmethod
    def parse(cls, text: str) -> Permutation:
        """Digit string (``"2431"``) or comma list (``"2,4,3,1,10,..."``)."""
        text = text.strip().strip("[]")
        if "," in text:
            return cls(tuple(int(t) for t in text.split(",") if t.strip()))
        if not text.isdigit():
            raise ValueError(f"cannot parse permutation {text!r}")
        return cls(tuple(int(ch) for ch in text))

    # -- basic structure --------------------------------------------------

    @property
    def n(self) -> int:
        return len(self.images)

    def __call__(self, i: int) -> int:
        return self.images[i - 1]

    def __mul__(self, other: Permutation) -> Permutation:
        return compose(self, other)

    def __iter__(self):
        return iter(self.images)

    def __len__(self):
        return len(self.images)

    def __str__(self):
        if self.n <= 9:
            return "".join(map(str, self.images))
        return ",".join(map(str, self.images))

    def __repr__(self):
        return f"Permutation({self})"

    def inverse(self) -> Permutation:
        inv = [0] * self.n
        for i, a in enumerate(self.images, 1):
            inv[a - 1] = i
        return Permutation(tuple(inv))

    def is_identity(self) -> bool:
        return all(a == i for i, a in enumerate(self.images, 1))

    def inversions(self) -> list[tuple[int, int]]:
        """Pairs ``a < b`` (positions) with ``w(a) > w(b)``."""
        w = self.images
        return [(a + 1, b + 1) for a in range(self.n) for b in range(a + 1, self.n) if w[a] > w[b]]

    def length(self) -> int:
        w = self.images
        return sum(1 for a in range(self.n) for b in range(a + 1, self.n) if w[a] > w[b])

    def code(self) -> tuple[int, ...]:
        """Lehmer code: ``code[i] = #{j > i : w(j) < w(i)}``."""
        w = self.images
        return tuple(sum(1 for j in range(i + 1, self.n) if w[j] < w[i]) for i in range(self.n))

    def left_descents(self) -> list[int]:
        """All ``i`` with ``l(s_i w) < l(w)``."""
        inv = self.inverse().images
        return [i for i in range(1, self.n) if inv[i - 1] > inv[i]]

    def right_descents(self) -> list[int]:
        """All ``i`` with ``l(w s_i) < l(w)``."""
        w = self.images
        return [i for i in range(1, self.n) if w[i - 1] > w[i]]

    def right_mul_simple(self, i: int) -> Permutation:
        """``w * s_i``: swap positions ``i`` and ``i + 1``."""
        imgs = list(self.images)
        imgs[i - 1], imgs[i] = imgs[i], imgs[i - 1]
        return Permutation(tuple(imgs))

    def left_mul_simple(self, i: int) -> Permutation:
        """``s_i * w``: swap the values ``i`` and ``i + 1``."""
        swap = {i: i + 1, i + 1: i}
        return Permutation(tuple(swap.get(a, a) for a in self.images))

    def embed(self, n: int) -> Permutation:
        """Image under ``S_m -> S_n`` fixing the letters above ``m``."""
        if n < self.n:
            raise ValueError(f"cannot embed S_{self.n} into S_{n}")
        return Permutation(self.images + tuple(range(self.n + 1, n + 1)))

    def trim(self) -> Permutation:
        """Smallest-rank representative under the stable embedding."""
        m = self.n
        while m > 1 and self.images[m - 1] == m:
            m -= 1
        return Permutation(self.images[:m])

    def largest_moved(self) -> int:
        moved = [i for i, a in enumerate(self.images, 1) if a != i]
        return max(moved, default=0)

    def to_json(self) -> list[int]:
        return list(self.images)


def compose(u: Permutation, v: Permutation) -> Permutation:
    """``(u * v)(i) = u(v(i))``."""
    if u.n != v.n:
        raise ValueError(f"size mismatch: S_{u.n} vs S_{v.n}")
    ui = u.images
    return Permutation(tuple(ui[a - 1] for a in v.images))


def all_permutations(n: int) -> list[Permutation]:
    """S_n sorted by length, then lexicographically."""
    perms = [Permutation(p) for p in itertools.permutations(range(1, n + 1))]
    return sorted(perms, key=lambda p: (p.length(), p.images))


def word_product(word, n: int) -> Permutation:
    imgs = list(range(1, n + 1))
    for i in word:
        if not 1 <= i < n:
            raise ValueError(f"letter {i} out of range for S_{n}")
    # right-multiply from the left end: w * s_i swaps positions
    for i in word:
        imgs[i - 1], imgs[i] = imgs[i], imgs[i - 1]
    return Permutation(tuple(imgs))


def is_reduced(word, n: int) -> bool:
    return word_product(word, n).length() == len(word)


@lru_cache(maxsize=None)
def reduced_words(w: Permutation) -> tuple[tuple[int, ...], ...]:
    """All reduced words of ``w`` in lexicographic order."""
    if w.is_identity():
        return ((),)
    out = []
    for i in w.left_descents():
        for rest in reduced_words(w.left_mul_simple(i)):
            out.append((i,) + rest)
    return tuple(sorted(out))


@lru_cache(maxsize=None)
def canonical_reduced_word(w: Permutation) -> tuple[int, ...]:
    """Lexicographically smallest reduced word of ``w``.

    Every left descent can start a reduced word, so taking the smallest one at
    each step gives the lex-min word without backtracking.
    """
    word = []
    while not w.is_identity():
        i = w.left_descents()[0]
        word.append(i)
        w = w.left_mul_simple(i)
    return tuple(word)


def alpha_beta_pairs(word, n: int) -> list[tuple[int, int]]:
    """Pairs ``(alpha_m, beta_m)`` with ``s_{i_m} s_{i_{m+1}} ... = s_{i_{m+1}} ... s_{alpha beta}``.

    ``alpha_m = s_{i_l} ... s_{i_{m+1}}(i_m)``, ``beta_m`` likewise at ``i_m + 1``.
    """
    word = tuple(word)
    if not is_reduced(word, n):
        raise ValueError(f"word {word} is not reduced")
    pairs = []
    # u = s_{i_l} s_{i_{l-1}} ... s_{i_{m+1}}, built by right-multiplying as m decreases
    u = list(range(1, n + 1))
    for i in reversed(word):
        a, b = u[i - 1], u[i]
        assert a < b
        pairs.append((a, b))
        u[i - 1], u[i] = u[i], u[i - 1]
    pairs.reverse()
    return pairs


def _suffix_reach(word, n: int) -> list[set[Permutation]]:
    # reach[m]: products of all subwords of word[m:]
    reach = [set() for _ in range(len(word) + 1)]
    reach[-1] = {Permutation.identity(n)}
    for m in range(len(word) - 1, -1, -1):
        i = word[m]
        reach[m] = reach[m + 1] | {p.left_mul_simple(i) for p in reach[m + 1]}
    return reach


def subwords_with_product(word, target: Permutation, require_reduced: bool = False) -> list[tuple[int, ...]]:
    """All ``J`` (1-based, increasing) with ``prod_{j in J} s_{i_j} == target``.

    The DFS only enters branches whose suffix can still reach the target.
    """
    word = tuple(word)
    n = target.n
    reach = _suffix_reach(word, n)
    tlen = target.length()
    out = []

    def dfs(m, g, chosen):
        if m == len(word):
            if g == target:
                out.append(tuple(chosen))
            return
        if require_reduced and len(chosen) > tlen:
            return
        if compose(g.inverse(), target) not in reach[m]:
            return
        dfs(m + 1, g, chosen)
        chosen.append(m + 1)
        dfs(m + 1, g.right_mul_simple(word[m]), chosen)
        chosen.pop()

    dfs(0, Permutation.identity(n), [])
    if require_reduced:
        out = [J for J in out if len(J) == tlen]
    return sorted(out)


def bruhat_leq(v: Permutation, w: Permutation, word=None) -> bool:
    """``v <= w``: some subword of a reduced word of ``w`` multiplies to ``v``."""
    if v.n != w.n:
        raise ValueError("size mismatch")
    if v.length() > w.length():
        return False
    word = canonical_reduced_word(w) if word is None else tuple(word)
    reach = _suffix_reach(word, w.n)
    return v in reach[0]


def bruhat_leq_tableau(v: Permutation, w: Permutation) -> bool:
    """Tableau criterion: sorted prefixes of ``v`` are dominated by those of ``w``."""
    for i in range(1, v.n):
        a, b = sorted(v.images[:i]), sorted(w.images[:i])
        if any(x > y for x, y in zip(a, b)):
            return False
    return True


def remove_letters_factorization(word, J, n: int) -> Permutation:
    """``w * prod_{j not in J} s_{alpha_j beta_j}``, checked against ``prod_{j in J} s_{i_j}``."""
    word = tuple(word)
    J = set(J)
    pairs = alpha_beta_pairs(word, n)
    w = word_product(word, n)
    result = w
    for j in range(1, len(word) + 1):
        if j not in J:
            a, b = pairs[j - 1]
            result = compose(result, Permutation.transposition(a, b, n))
    direct = word_product([word[j - 1] for j in sorted(J)], n)
    assert result == direct, (word, sorted(J), result, direct)
    return result


def cycles(w: Permutation) -> list[tuple[int, ...]]:
    """Nontrivial cycles ``(c_0 c_1 ...)`` with ``w(c_k) = c_{k+1}``, each starting at its minimum."""
    seen = set()
    out = []
    for start in range(1, w.n + 1):
        if start in seen or w(start) == start:
            continue
        cyc = [start]
        seen.add(start)
        a = w(start)
        while a != start:
            cyc.append(a)
            seen.add(a)
            a = w(a)
        out.append(tuple(cyc))
    return out
