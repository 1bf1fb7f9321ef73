"""
Sparse polynomials with integer coefficients in ``x_1..x_n`` and ``y_1..y_n``.

A monomial is stored as one tuple of ``2n`` exponents, x part first.  Every
polynomial carries its ambient ``n`` and binary operations refuse to mix
sizes, because twisted Schubert polynomials are not stable under
``S_n -> S_{n+1}``; use :meth:`MultiPoly.embed` explicitly.
"""

from __future__ import annotations

import ast
import itertools
from collections import defaultdict

from .permutations import Permutation

__all__ = [
    "MultiPoly", "act_permutation", "divided_difference", "simple_divided_difference",
    "twisted_op", "substitute_x_by_y", "is_monomial_nonnegative", "min_degree_part",
    "elementary", "homogeneous", "staircase", "staircase_double", "parse_poly",
    "monomials_up_to_degree",
]


def _clean(terms) -> dict:
    return {m: c for m, c in terms.items() if c}


class MultiPoly:
    """Immutable sparse polynomial; ``terms`` maps exponent tuples to nonzero ints."""

    __slots__ = ("n", "terms", "_hash")

    def __init__(self, n: int, terms=None):
        self.n = n
        terms = {} if terms is None else terms
        for m in terms:
            if len(m) != 2 * n:
                raise ValueError(f"monomial {m} has wrong length for n={n}")
        self.terms = _clean(terms)
        self._hash = None

    # -- constructors -----------------------------------------------------

    @classmethod
    def const(cls, c: int, n: int) -> MultiPoly:
        return cls(n, {(0,) * (2 * n): int(c)})

    @classmethod
    def zero(cls, n: int) -> MultiPoly:
        return cls(n)

    @classmethod
    def one(cls, n: int) -> MultiPoly:
        return cls.const(1, n)

    @classmethod
    def x(cls, i: int, n: int) -> MultiPoly:
        if not 1 <= i <= n:
            raise ValueError(f"x{i} out of range for n={n}")
        e = [0] * (2 * n)
        e[i - 1] = 1
        return cls(n, {tuple(e): 1})

    @classmethod
    def y(cls, j: int, n: int) -> MultiPoly:
        if not 1 <= j <= n:
            raise ValueError(f"y{j} out of range for n={n}")
        e = [0] * (2 * n)
        e[n + j - 1] = 1
        return cls(n, {tuple(e): 1})

    @classmethod
    def monomial(cls, xexp, yexp=None, n: int | None = None, coeff: int = 1) -> MultiPoly:
        n = len(xexp) if n is None else n
        xexp = tuple(xexp) + (0,) * (n - len(xexp))
        yexp = (0,) * n if yexp is None else tuple(yexp) + (0,) * (n - len(yexp))
        return cls(n, {xexp + yexp: coeff})

    # -- arithmetic -------------------------------------------------------

    def _coerce(self, other) -> MultiPoly:
        if isinstance(other, MultiPoly):
            if other.n != self.n:
                raise ValueError(f"ambient size mismatch: {self.n} vs {other.n}")
            return other
        if isinstance(other, int):
            return MultiPoly.const(other, self.n)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        terms = dict(self.terms)
        for m, c in other.terms.items():
            terms[m] = terms.get(m, 0) + c
        return MultiPoly(self.n, terms)

    __radd__ = __add__

    def __neg__(self):
        return MultiPoly(self.n, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            return MultiPoly(self.n, {m: c * other for m, c in self.terms.items()})
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        terms = defaultdict(int)
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                terms[tuple(a + b for a, b in zip(m1, m2))] += c1 * c2
        return MultiPoly(self.n, terms)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative power")
        result = MultiPoly.one(self.n)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, int):
            other = MultiPoly.const(other, self.n)
        if not isinstance(other, MultiPoly):
            return NotImplemented
        return self.n == other.n and self.terms == other.terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.n, frozenset(self.terms.items())))
        return self._hash

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    # -- structure --------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def degree(self) -> int:
        if not self.terms:
            raise ValueError("degree of the zero polynomial")
        return max(sum(m) for m in self.terms)

    def y_degree(self) -> int:
        return max((sum(m[self.n:]) for m in self.terms), default=0)

    def coefficient(self, xexp, yexp=None) -> int:
        xexp = tuple(xexp) + (0,) * (self.n - len(xexp))
        yexp = (0,) * self.n if yexp is None else tuple(yexp) + (0,) * (self.n - len(yexp))
        return self.terms.get(xexp + yexp, 0)

    def homogeneous_part(self, d: int) -> MultiPoly:
        return MultiPoly(self.n, {m: c for m, c in self.terms.items() if sum(m) == d})

    def embed(self, n: int) -> MultiPoly:
        """Same polynomial viewed with ``n >= self.n`` variables per alphabet."""
        if n < self.n:
            if any(m[i] for m in self.terms for i in itertools.chain(range(n, self.n), range(self.n + n, 2 * self.n))):
                raise ValueError(f"polynomial uses variables beyond n={n}")
            return MultiPoly(n, {m[:n] + m[self.n:self.n + n]: c for m, c in self.terms.items()})
        pad = (0,) * (n - self.n)
        return MultiPoly(n, {m[:self.n] + pad + m[self.n:] + pad: c for m, c in self.terms.items()})

    def set_y_zero(self) -> MultiPoly:
        return MultiPoly(self.n, {m: c for m, c in self.terms.items() if not any(m[self.n:])})

    def sorted_terms(self) -> list[tuple[tuple[int, ...], int]]:
        """Graded lex, largest first: total degree, then x exponents, then y."""
        return sorted(self.terms.items(), key=lambda mc: (sum(mc[0]), mc[0]), reverse=True)

    def leading_x_monomial(self) -> tuple[int, ...]:
        """Lex-largest x exponent vector (``x_1 > x_2 > ...``), ignoring degree."""
        return max(self.terms)[:self.n]

    # -- output -----------------------------------------------------------

    def _monomial_str(self, m, mul="*", latex=False) -> str:
        parts = []
        for k, e in enumerate(m):
            if not e:
                continue
            name, idx = ("x", k + 1) if k < self.n else ("y", k - self.n + 1)
            if latex:
                v = f"{name}_{{{idx}}}"
                parts.append(v if e == 1 else f"{v}^{{{e}}}")
            else:
                v = f"{name}{idx}"
                parts.append(v if e == 1 else f"{v}^{e}")
        return mul.join(parts)

    def to_text(self, latex: bool = False) -> str:
        if not self.terms:
            return "0"
        mul = "" if latex else "*"
        out = []
        for m, c in self.sorted_terms():
            mono = self._monomial_str(m, mul, latex)
            a = abs(c)
            if not mono:
                body = str(a)
            elif a == 1:
                body = mono
            else:
                body = f"{a}{mul}{mono}"
            sign = "-" if c < 0 else "+"
            if not out:
                out.append(body if c > 0 else f"-{body}")
            else:
                out.append(f" {sign} {body}")
        return "".join(out)

    def to_latex(self) -> str:
        return self.to_text(latex=True)

    def __str__(self):
        return self.to_text()

    def __repr__(self):
        return f"MultiPoly(n={self.n}, {self.to_text()})"

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "terms": [
                {"coeff": str(c), "x": list(m[:self.n]), "y": list(m[self.n:])}
                for m, c in self.sorted_terms()
            ],
        }

    @classmethod
    def from_json(cls, data: dict) -> MultiPoly:
        n = int(data["n"])
        terms = defaultdict(int)
        for t in data["terms"]:
            x, y = t["x"], t.get("y", [0] * n)
            if len(x) != n or len(y) != n:
                raise ValueError("exponent vector length does not match n")
            terms[tuple(x) + tuple(y)] += int(t["coeff"])
        return cls(n, terms)


# -- parsing ---------------------------------------------------------------

def parse_poly(text: str, n: int) -> MultiPoly:
    """Parse ``2*x2*x3 + x3^2 - (1+y1)*x1`` into a :class:`MultiPoly`."""
    try:
        tree = ast.parse(text.replace("^", "**"), mode="eval")
    except SyntaxError as exc:
        raise ValueError(f"cannot parse {text!r}: {exc.msg}") from None

    def ev(node):
        if isinstance(node, ast.Expression):
            return ev(node.body)
        if isinstance(node, ast.Constant) and isinstance(node.value, int):
            return MultiPoly.const(node.value, n)
        if isinstance(node, ast.Name):
            name = node.id
            if name[0] in "xy" and name[1:].isdigit():
                i = int(name[1:])
                return MultiPoly.x(i, n) if name[0] == "x" else MultiPoly.y(i, n)
            raise ValueError(f"unknown variable {name!r}")
        if isinstance(node, ast.UnaryOp) and isinstance(node.op, (ast.USub, ast.UAdd)):
            val = ev(node.operand)
            return -val if isinstance(node.op, ast.USub) else val
        if isinstance(node, ast.BinOp):
            if isinstance(node.op, ast.Pow):
                if not (isinstance(node.right, ast.Constant) and isinstance(node.right.value, int)):
                    raise ValueError("exponents must be integer literals")
                return ev(node.left) ** node.right.value
            left, right = ev(node.left), ev(node.right)
            if isinstance(node.op, ast.Add):
                return left + right
            if isinstance(node.op, ast.Sub):
                return left - right
            if isinstance(node.op, ast.Mult):
                return left * right
        raise ValueError(f"unsupported syntax in {text!r}")

    return ev(tree)


# -- operators on polynomials ---------------------------------------------

def act_permutation(w: Permutation, P: MultiPoly) -> MultiPoly:
    """``(wP)(x_1, ..., x_n) = P(x_{w(1)}, ..., x_{w(n)})``; y untouched."""
    if w.n != P.n:
        raise ValueError("size mismatch")
    n = P.n
    imgs = w.images
    terms = {}
    for m, c in P.terms.items():
        new = [0] * n
        for i in range(n):
            new[imgs[i] - 1] = m[i]
        terms[tuple(new) + m[n:]] = c
    return MultiPoly(n, terms)


def divided_difference(a: int, b: int, P: MultiPoly) -> MultiPoly:
    """``(P - s_{ab} P) / (x_a - x_b)`` computed termwise.

    For exponents ``p != q`` of ``x_a, x_b`` the quotient is the geometric sum
    ``sign * sum_r x_a^{lo + r} x_b^{hi - 1 - r}``, ``r < hi - lo``, so no
    division with remainder ever happens.
    """
    if a == b or not (1 <= a <= P.n and 1 <= b <= P.n):
        raise ValueError(f"bad divided difference indices ({a}, {b}) for n={P.n}")
    ia, ib = a - 1, b - 1
    terms = defaultdict(int)
    for m, c in P.terms.items():
        p, q = m[ia], m[ib]
        if p == q:
            continue
        lo, hi = (q, p) if p > q else (p, q)
        sc = c if p > q else -c
        e = list(m)
        for r in range(hi - lo):
            e[ia] = lo + r
            e[ib] = hi - 1 - r
            terms[tuple(e)] += sc
    return MultiPoly(P.n, terms)


def simple_divided_difference(i: int, P: MultiPoly) -> MultiPoly:
    return divided_difference(i, i + 1, P)


def twisted_op(i: int, P: MultiPoly) -> MultiPoly:
    """``T_i = s_i + partial_i``."""
    if not 1 <= i < P.n:
        raise ValueError(f"T_{i} undefined for n={P.n}")
    return act_permutation(Permutation.simple(i, P.n), P) + divided_difference(i, i + 1, P)


def substitute_x_by_y(P: MultiPoly, w: Permutation) -> MultiPoly:
    """Replace every ``x_j`` by ``y_{w(j)}``."""
    if w.n != P.n:
        raise ValueError("size mismatch")
    n = P.n
    terms = defaultdict(int)
    for m, c in P.terms.items():
        y = list(m[n:])
        for j in range(n):
            y[w.images[j] - 1] += m[j]
        terms[(0,) * n + tuple(y)] += c
    return MultiPoly(n, terms)


def is_monomial_nonnegative(P: MultiPoly) -> bool:
    return all(c > 0 for c in P.terms.values())


def min_degree_part(P: MultiPoly) -> MultiPoly:
    if P.is_zero():
        raise ValueError("minimum degree part of the zero polynomial")
    d = min(sum(m) for m in P.terms)
    return P.homogeneous_part(d)


def elementary(m: int, A, n: int) -> MultiPoly:
    """``e_m(A)``; ``e_0 = 1``, zero for ``m < 0`` or ``m > |A|``."""
    if m < 0:
        return MultiPoly.zero(n)
    terms = {}
    for combo in itertools.combinations(sorted(A), m):
        e = [0] * (2 * n)
        for i in combo:
            e[i - 1] += 1
        terms[tuple(e)] = 1
    return MultiPoly(n, terms)


def homogeneous(m: int, A, n: int) -> MultiPoly:
    """``h_m(A)``; ``h_0 = 1``, zero for ``m < 0``."""
    if m < 0:
        return MultiPoly.zero(n)
    terms = {}
    for combo in itertools.combinations_with_replacement(sorted(A), m):
        e = [0] * (2 * n)
        for i in combo:
            e[i - 1] += 1
        terms[tuple(e)] = 1
    return MultiPoly(n, terms)


def staircase(n: int) -> MultiPoly:
    """``x_1^{n-1} x_2^{n-2} ... x_{n-1}``."""
    return MultiPoly.monomial([n - 1 - i for i in range(n)], n=n)


def staircase_double(n: int) -> MultiPoly:
    """``prod_{i + j <= n} (x_i - y_j)``."""
    result = MultiPoly.one(n)
    for i in range(1, n):
        for j in range(1, n + 1 - i):
            result = result * (MultiPoly.x(i, n) - MultiPoly.y(j, n))
    return result


def monomials_up_to_degree(n: int, d: int) -> list[MultiPoly]:
    """All x-monomials of total degree at most ``d``."""
    out = []
    for deg in range(d + 1):
        for combo in itertools.combinations_with_replacement(range(n), deg):
            e = [0] * n
            for i in combo:
                e[i] += 1
            out.append(MultiPoly.monomial(e, n=n))
    return out
