"""Exact rational scalars, polynomials and matrices.

Everything here is immutable. Coefficients are :class:`fractions.Fraction`
values, which are always kept in lowest terms with a positive denominator,
so structural equality is mathematical equality.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import comb
from numbers import Rational as _RationalABC
from typing import Iterable, Mapping, Sequence, Union

Rational = Fraction
RationalLike = Union[Fraction, int, str]

ZERO = Fraction(0)
ONE = Fraction(1)

#: degree reported for the zero polynomial
ZERO_DEGREE = -1


class Singular(ArithmeticError):
    """Raised when an exact linear system has no unique solution."""


def as_rational(x: RationalLike) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, bool):
        raise TypeError("bool is not a rational")
    if isinstance(x, (int, _RationalABC)):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x.strip())
    raise TypeError(f"cannot convert {type(x).__name__} to an exact rational")


@lru_cache(maxsize=None)
def factorial(m: int) -> Fraction:
    if m < 0:
        raise ValueError("factorial of a negative integer")
    return ONE if m == 0 else factorial(m - 1) * m


def inv_factorial(m: int) -> Fraction:
    """1/m!, with the convention 1/m! = 0 for m < 0."""
    if m < 0:
        return ZERO
    return 1 / factorial(m)


def rational_to_str(x: Fraction) -> str:
    return f"{x.numerator}/{x.denominator}"


# ---------------------------------------------------------------------------
# univariate polynomials
# ---------------------------------------------------------------------------


class UniPoly:
    """Polynomial in one variable with exact rational coefficients.

    ``coeffs[i]`` is the coefficient of ``t**i``; trailing zeros are dropped.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[RationalLike] = ()):
        cs = [as_rational(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("UniPoly is immutable")

    # constructors
    @classmethod
    def zero(cls) -> "UniPoly":
        return cls()

    @classmethod
    def constant(cls, c: RationalLike) -> "UniPoly":
        return cls([c])

    @classmethod
    def monomial(cls, k: int, c: RationalLike = 1) -> "UniPoly":
        if k < 0:
            raise ValueError("negative exponent")
        return cls([0] * k + [c])

    @classmethod
    def from_dict(cls, terms: Mapping[int, RationalLike]) -> "UniPoly":
        if not terms:
            return cls()
        cs = [ZERO] * (max(terms) + 1)
        for k, c in terms.items():
            cs[k] += as_rational(c)
        return cls(cs)

    # basic queries
    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_constant(self) -> bool:
        return len(self.coeffs) <= 1

    def coeff(self, k: int) -> Fraction:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else ZERO

    def __eq__(self, other):
        if isinstance(other, UniPoly):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self.coeffs == UniPoly([other]).coeffs
        return NotImplemented

    def __hash__(self):
        return hash(("UniPoly", self.coeffs))

    def __repr__(self):
        return f"UniPoly({format_unipoly(self)!r})"

    def __str__(self):
        return format_unipoly(self)

    # arithmetic
    def __add__(self, other):
        other = _coerce_uni(other)
        if other is None:
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        return UniPoly([x + (b[i] if i < len(b) else 0) for i, x in enumerate(a)])

    __radd__ = __add__

    def __neg__(self):
        return UniPoly([-c for c in self.coeffs])

    def __sub__(self, other):
        other = _coerce_uni(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = _coerce_uni(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            c = as_rational(other)
            return UniPoly([c * x for x in self.coeffs])
        if not isinstance(other, UniPoly):
            return NotImplemented
        if self.is_zero() or other.is_zero():
            return UniPoly()
        out = [ZERO] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, x in enumerate(self.coeffs):
            if x:
                for j, y in enumerate(other.coeffs):
                    out[i + j] += x * y
        return UniPoly(out)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return self * (1 / as_rational(other))
        return NotImplemented

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative power")
        out = UniPoly([1])
        for _ in range(k):
            out = out * self
        return out

    def __call__(self, x):
        """Horner evaluation; exact for rationals, float for floats."""
        acc = ZERO if isinstance(x, (int, Fraction)) else x * 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def evaluate_float(self, x):
        """Vectorised float evaluation (x may be a numpy array)."""
        acc = 0.0 * x
        for c in reversed(self.coeffs):
            acc = acc * x + float(c)
        return acc

    # calculus
    def derivative(self, order: int = 1) -> "UniPoly":
        if order < 0:
            raise ValueError("negative derivative order")
        cs = self.coeffs
        for _ in range(order):
            cs = tuple(k * c for k, c in enumerate(cs))[1:]
        return UniPoly(cs)

    def antiderivative(self) -> "UniPoly":
        """Antiderivative with zero constant term."""
        return UniPoly([0] + [c / (k + 1) for k, c in enumerate(self.coeffs)])

    def integrate(self, lo: RationalLike, hi: RationalLike) -> Fraction:
        F = self.antiderivative()
        return F(as_rational(hi)) - F(as_rational(lo))

    # composition
    def compose(self, other: "UniPoly") -> "UniPoly":
        acc = UniPoly()
        for c in reversed(self.coeffs):
            acc = acc * other + UniPoly([c])
        return acc

    def compose_affine(self, c: RationalLike, h: RationalLike) -> "UniPoly":
        """t -> p((t - c) / h)."""
        h = as_rational(h)
        if h == 0:
            raise ZeroDivisionError("affine map with zero scale")
        c = as_rational(c)
        return self.compose(UniPoly([-c / h, 1 / h]))

    def scale_argument(self, c: RationalLike) -> "UniPoly":
        """t -> p(c t)."""
        c = as_rational(c)
        return UniPoly([a * c**k for k, a in enumerate(self.coeffs)])

    def shift_argument(self, c: RationalLike) -> "UniPoly":
        """t -> p(t + c)."""
        return self.compose(UniPoly([as_rational(c), 1]))

    def to_json(self) -> dict:
        return unipoly_to_json(self)


def _coerce_uni(x):
    if isinstance(x, UniPoly):
        return x
    if isinstance(x, (int, Fraction)) and not isinstance(x, bool):
        return UniPoly([x])
    return None


T = UniPoly([0, 1])


# ---------------------------------------------------------------------------
# bivariate polynomials
# ---------------------------------------------------------------------------


class BiPoly:
    """Polynomial in (s, t); ``terms[(i, j)]`` is the coefficient of s^i t^j."""

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[tuple[int, int], RationalLike] | None = None):
        clean = {}
        for (i, j), c in (terms or {}).items():
            c = as_rational(c)
            if c:
                clean[(int(i), int(j))] = c
        object.__setattr__(self, "terms", clean)

    def __setattr__(self, name, value):
        raise AttributeError("BiPoly is immutable")

    @classmethod
    def _raw(cls, terms: dict) -> "BiPoly":
        obj = cls.__new__(cls)
        object.__setattr__(obj, "terms", {k: v for k, v in terms.items() if v})
        return obj

    @classmethod
    def product(cls, f: UniPoly, g: UniPoly) -> "BiPoly":
        """f(s) * g(t)."""
        return cls._raw(
            {(i, j): a * b for i, a in enumerate(f.coeffs) if a for j, b in enumerate(g.coeffs) if b}
        )

    @classmethod
    def in_s(cls, f: UniPoly) -> "BiPoly":
        return cls.product(f, UniPoly([1]))

    @classmethod
    def in_t(cls, g: UniPoly) -> "BiPoly":
        return cls.product(UniPoly([1]), g)

    def is_zero(self) -> bool:
        return not self.terms

    def degrees(self) -> tuple[int, int]:
        if not self.terms:
            return (ZERO_DEGREE, ZERO_DEGREE)
        return (max(i for i, _ in self.terms), max(j for _, j in self.terms))

    def __eq__(self, other):
        if isinstance(other, BiPoly):
            return self.terms == other.terms
        return NotImplemented

    def __hash__(self):
        return hash(("BiPoly", frozenset(self.terms.items())))

    def __repr__(self):
        return f"BiPoly({format_bipoly(self)!r})"

    def __str__(self):
        return format_bipoly(self)

    def __add__(self, other):
        if not isinstance(other, BiPoly):
            return NotImplemented
        out = dict(self.terms)
        for k, v in other.terms.items():
            out[k] = out.get(k, ZERO) + v
        return BiPoly._raw(out)

    def __neg__(self):
        return BiPoly._raw({k: -v for k, v in self.terms.items()})

    def __sub__(self, other):
        if not isinstance(other, BiPoly):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            c = as_rational(other)
            return BiPoly._raw({k: c * v for k, v in self.terms.items()})
        if not isinstance(other, BiPoly):
            return NotImplemented
        out: dict = {}
        for (i1, j1), a in self.terms.items():
            for (i2, j2), b in other.terms.items():
                key = (i1 + i2, j1 + j2)
                out[key] = out.get(key, ZERO) + a * b
        return BiPoly._raw(out)

    __rmul__ = __mul__

    def swap(self) -> "BiPoly":
        """(s, t) -> (t, s)."""
        return BiPoly._raw({(j, i): v for (i, j), v in self.terms.items()})

    def __call__(self, s, t):
        return sum((c * s**i * t**j for (i, j), c in self.terms.items()), ZERO)

    def evaluate_float(self, s, t):
        acc = 0.0 * s * t
        for (i, j), c in self.terms.items():
            acc = acc + float(c) * s**i * t**j
        return acc

    def diff_s(self, order: int = 1) -> "BiPoly":
        out = dict(self.terms)
        for _ in range(order):
            out = {(i - 1, j): i * c for (i, j), c in out.items() if i > 0}
        return BiPoly._raw(out)

    def diff_t(self, order: int = 1) -> "BiPoly":
        out = dict(self.terms)
        for _ in range(order):
            out = {(i, j - 1): j * c for (i, j), c in out.items() if j > 0}
        return BiPoly._raw(out)

    def at_s(self, s: RationalLike) -> UniPoly:
        """Substitute a value for s; result is a polynomial in t."""
        s = as_rational(s)
        out: dict = {}
        for (i, j), c in self.terms.items():
            out[j] = out.get(j, ZERO) + c * s**i
        return UniPoly.from_dict(out)

    def at_t(self, t: RationalLike) -> UniPoly:
        """Substitute a value for t; result is a polynomial in s."""
        t = as_rational(t)
        out: dict = {}
        for (i, j), c in self.terms.items():
            out[i] = out.get(i, ZERO) + c * t**j
        return UniPoly.from_dict(out)

    def diagonal(self) -> UniPoly:
        """t -> p(t, t)."""
        out: dict = {}
        for (i, j), c in self.terms.items():
            out[i + j] = out.get(i + j, ZERO) + c
        return UniPoly.from_dict(out)

    def sorted_terms(self) -> list[tuple[int, int, Fraction]]:
        return [(i, j, self.terms[(i, j)]) for i, j in sorted(self.terms)]


def binomial_power(a: RationalLike, b: RationalLike, k: int) -> BiPoly:
    """(a s + b t)^k expanded."""
    a, b = as_rational(a), as_rational(b)
    return BiPoly._raw({(m, k - m): comb(k, m) * a**m * b ** (k - m) for m in range(k + 1)})


@dataclass(frozen=True)
class PiecewiseBiPoly:
    """One polynomial on {s <= t} (``lower``) and one on {s >= t} (``upper``)."""

    lower: BiPoly
    upper: BiPoly
    check_continuity: bool = field(default=True, compare=False, repr=False)

    def __post_init__(self):
        if self.check_continuity and self.lower.diagonal() != self.upper.diagonal():
            raise ValueError("piecewise polynomial is discontinuous on the diagonal s = t")

    @classmethod
    def symmetric_from_lower(cls, lower: BiPoly) -> "PiecewiseBiPoly":
        return cls(lower, lower.swap())

    @classmethod
    def zero(cls) -> "PiecewiseBiPoly":
        return cls(BiPoly(), BiPoly())

    def __add__(self, other):
        if not isinstance(other, PiecewiseBiPoly):
            return NotImplemented
        return PiecewiseBiPoly(self.lower + other.lower, self.upper + other.upper)

    def __neg__(self):
        return PiecewiseBiPoly(-self.lower, -self.upper, check_continuity=False)

    def __sub__(self, other):
        if not isinstance(other, PiecewiseBiPoly):
            return NotImplemented
        return PiecewiseBiPoly(self.lower - other.lower, self.upper - other.upper)

    def __mul__(self, c):
        if isinstance(c, (int, Fraction)) and not isinstance(c, bool):
            return PiecewiseBiPoly(self.lower * c, self.upper * c, check_continuity=False)
        return NotImplemented

    __rmul__ = __mul__

    def transpose(self) -> "PiecewiseBiPoly":
        """The function (s, t) -> self(t, s)."""
        return PiecewiseBiPoly(self.upper.swap(), self.lower.swap(), check_continuity=False)

    def is_symmetric(self) -> bool:
        return self.lower == self.upper.swap()

    def is_zero(self) -> bool:
        return self.lower.is_zero() and self.upper.is_zero()

    def __call__(self, s, t):
        return self.lower(s, t) if s <= t else self.upper(s, t)

    def evaluate_float(self, s, t):
        import numpy as np

        s = np.asarray(s, dtype=float)
        t = np.asarray(t, dtype=float)
        return np.where(s <= t, self.lower.evaluate_float(s, t), self.upper.evaluate_float(s, t))

    def to_json(self) -> dict:
        return piecewise_to_json(self)


def bipoly_definite_integral_s(p: PiecewiseBiPoly, weight: UniPoly) -> UniPoly:
    """t -> int_0^t lower(s,t) w(s) ds + int_t^1 upper(s,t) w(s) ds, exactly."""
    out: dict[int, Fraction] = {}

    def add(k, c):
        out[k] = out.get(k, ZERO) + c

    for (i, j), c in p.lower.terms.items():
        for k, w in enumerate(weight.coeffs):
            if w:
                m = i + k + 1
                add(j + m, c * w / m)
    for (i, j), c in p.upper.terms.items():
        for k, w in enumerate(weight.coeffs):
            if w:
                m = i + k + 1
                cw = c * w / m
                add(j, cw)
                add(j + m, -cw)
    return UniPoly.from_dict(out)


# ---------------------------------------------------------------------------
# dense rational matrices
# ---------------------------------------------------------------------------


class RatMatrix:
    """Dense rectangular matrix of Fractions."""

    __slots__ = ("rows", "shape")

    def __init__(self, rows: Sequence[Sequence[RationalLike]]):
        rs = tuple(tuple(as_rational(x) for x in r) for r in rows)
        ncols = len(rs[0]) if rs else 0
        if any(len(r) != ncols for r in rs):
            raise ValueError("ragged matrix")
        object.__setattr__(self, "rows", rs)
        object.__setattr__(self, "shape", (len(rs), ncols))

    def __setattr__(self, name, value):
        raise AttributeError("RatMatrix is immutable")

    @classmethod
    def identity(cls, n: int) -> "RatMatrix":
        return cls([[1 if i == j else 0 for j in range(n)] for i in range(n)])

    @classmethod
    def zeros(cls, r: int, c: int) -> "RatMatrix":
        return cls([[0] * c for _ in range(r)])

    @classmethod
    def column(cls, values: Sequence[RationalLike]) -> "RatMatrix":
        return cls([[v] for v in values])

    @property
    def nrows(self) -> int:
        return self.shape[0]

    @property
    def ncols(self) -> int:
        return self.shape[1]

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def col(self, j: int) -> tuple[Fraction, ...]:
        return tuple(r[j] for r in self.rows)

    def __eq__(self, other):
        if isinstance(other, RatMatrix):
            return self.rows == other.rows
        return NotImplemented

    def __hash__(self):
        return hash(self.rows)

    def __repr__(self):
        body = "; ".join(", ".join(str(x) for x in r) for r in self.rows)
        return f"RatMatrix([{body}])"

    def __matmul__(self, other: "RatMatrix") -> "RatMatrix":
        if self.ncols != other.nrows:
            raise ValueError(f"shape mismatch {self.shape} @ {other.shape}")
        cols = list(zip(*other.rows)) if other.rows else []
        return RatMatrix(
            [[sum((a * b for a, b in zip(r, c) if a and b), ZERO) for c in cols] for r in self.rows]
        )

    def __add__(self, other: "RatMatrix") -> "RatMatrix":
        return RatMatrix([[a + b for a, b in zip(r1, r2)] for r1, r2 in zip(self.rows, other.rows)])

    def __sub__(self, other: "RatMatrix") -> "RatMatrix":
        return RatMatrix([[a - b for a, b in zip(r1, r2)] for r1, r2 in zip(self.rows, other.rows)])

    def transpose(self) -> "RatMatrix":
        return RatMatrix(list(zip(*self.rows)) if self.rows else [])

    def is_lower_triangular(self) -> bool:
        return all(self.rows[i][j] == 0 for i in range(self.nrows) for j in range(i + 1, self.ncols))

    def is_upper_triangular(self) -> bool:
        return all(self.rows[i][j] == 0 for i in range(self.nrows) for j in range(min(i, self.ncols)))

    def diagonal(self) -> tuple[Fraction, ...]:
        return tuple(self.rows[i][i] for i in range(min(self.shape)))

    def leading_minors(self) -> list[Fraction]:
        return [determinant(RatMatrix([r[:k] for r in self.rows[:k]])) for k in range(1, self.nrows + 1)]

    def to_float(self):
        import numpy as np

        return np.array([[float(x) for x in r] for r in self.rows], dtype=float)


def solve_linear(A: RatMatrix, rhs: RatMatrix) -> RatMatrix:
    """Exact Gauss-Jordan elimination; pivots are chosen by nonzero-ness."""
    n = A.nrows
    if A.ncols != n:
        raise ValueError("solve_linear needs a square matrix")
    if rhs.nrows != n:
        raise ValueError("right-hand side has the wrong number of rows")
    m = rhs.ncols
    aug = [list(A.rows[i]) + list(rhs.rows[i]) for i in range(n)]
    for col in range(n):
        piv = next((r for r in range(col, n) if aug[r][col] != 0), None)
        if piv is None:
            raise Singular("matrix is singular")
        aug[col], aug[piv] = aug[piv], aug[col]
        p = aug[col][col]
        prow = [x / p for x in aug[col]]
        aug[col] = prow
        for r in range(n):
            if r != col and aug[r][col] != 0:
                f = aug[r][col]
                aug[r] = [x - f * y for x, y in zip(aug[r], prow)]
    return RatMatrix([row[n:] for row in aug]) if m else RatMatrix([[] for _ in range(n)])


def determinant(A: RatMatrix) -> Fraction:
    n = A.nrows
    if A.ncols != n:
        raise ValueError("determinant needs a square matrix")
    a = [list(r) for r in A.rows]
    det = ONE
    for col in range(n):
        piv = next((r for r in range(col, n) if a[r][col] != 0), None)
        if piv is None:
            return ZERO
        if piv != col:
            a[col], a[piv] = a[piv], a[col]
            det = -det
        p = a[col][col]
        det *= p
        for r in range(col + 1, n):
            if a[r][col]:
                f = a[r][col] / p
                a[r] = [x - f * y for x, y in zip(a[r], a[col])]
    return det


def forward_substitution(L: RatMatrix, b: Sequence[Fraction]) -> list[Fraction]:
    n = L.nrows
    y: list[Fraction] = []
    for i in range(n):
        row = L.rows[i]
        acc = as_rational(b[i])
        for k in range(i):
            if row[k] and y[k]:
                acc -= row[k] * y[k]
        if row[i] == 0:
            raise Singular("zero on the diagonal of a lower-triangular factor")
        y.append(acc if row[i] == 1 else acc / row[i])
    return y


def back_substitution(U: RatMatrix, b: Sequence[Fraction]) -> list[Fraction]:
    n = U.nrows
    x: list[Fraction] = [ZERO] * n
    for i in reversed(range(n)):
        row = U.rows[i]
        acc = as_rational(b[i])
        for k in range(i + 1, n):
            if row[k] and x[k]:
                acc -= row[k] * x[k]
        if row[i] == 0:
            raise Singular("zero on the diagonal of an upper-triangular factor")
        x[i] = acc if row[i] == 1 else acc / row[i]
    return x


def upper_triangular_inverse(U: RatMatrix) -> RatMatrix:
    """Inverse of an upper-triangular matrix, one back-substitution per column."""
    n = U.nrows
    cols = [back_substitution(U, [ONE if i == j else ZERO for i in range(n)]) for j in range(n)]
    return RatMatrix([[cols[j][i] for j in range(n)] for i in range(n)])


# ---------------------------------------------------------------------------
# text rendering and canonical JSON
# ---------------------------------------------------------------------------


def _magnitude(a: Fraction) -> str:
    return str(a.numerator) if a.denominator == 1 else f"{a.numerator}/{a.denominator}"


def format_terms(terms: list[tuple[tuple[tuple[str, int], ...], Fraction]]) -> str:
    """Maple-style text: ``-1/120 s^5 - 1/72 s^4 t^3 + 1/24 s^4 t``."""
    if not terms:
        return "0"
    out = []
    for idx, (powers, c) in enumerate(terms):
        mono = " ".join(v if k == 1 else f"{v}^{k}" for v, k in powers if k)
        a = abs(c)
        body = " ".join(x for x in ("" if (a == 1 and mono) else _magnitude(a), mono) if x)
        if idx == 0:
            out.append(("-" if c < 0 else "") + body)
        else:
            out.append(("- " if c < 0 else "+ ") + body)
    return " ".join(out)


def format_unipoly(p: UniPoly, var: str = "t") -> str:
    """Highest power first, e.g. ``1/2 t^3 - t + 2``."""
    terms = [(((var, k),), c) for k, c in reversed(list(enumerate(p.coeffs))) if c]
    return format_terms(terms)


def format_bipoly(p: BiPoly, vars: tuple[str, str] = ("s", "t")) -> str:
    """Pure lexicographic order in (s, t), highest first."""
    keys = sorted(p.terms, reverse=True)
    terms = [(((vars[0], i), (vars[1], j)), p.terms[(i, j)]) for i, j in keys]
    return format_terms(terms)


def unipoly_to_json(p: UniPoly) -> dict:
    return {"type": "unipoly", "terms": [[k, rational_to_str(c)] for k, c in enumerate(p.coeffs) if c]}


def unipoly_from_json(obj) -> UniPoly:
    if isinstance(obj, dict):
        obj = obj["terms"]
    return UniPoly.from_dict({int(k): Fraction(c) for k, c in obj})


def bipoly_to_json(p: BiPoly) -> list:
    return [[i, j, rational_to_str(c)] for i, j, c in p.sorted_terms()]


def bipoly_from_json(obj) -> BiPoly:
    return BiPoly({(int(i), int(j)): Fraction(c) for i, j, c in obj})


def piecewise_to_json(p: PiecewiseBiPoly) -> dict:
    return {"type": "piecewise_bipoly", "lower": bipoly_to_json(p.lower), "upper": bipoly_to_json(p.upper)}


def piecewise_from_json(obj) -> PiecewiseBiPoly:
    return PiecewiseBiPoly(bipoly_from_json(obj["lower"]), bipoly_from_json(obj["upper"]))


def dumps(obj, **kw) -> str:
    kw.setdefault("indent", 2)
    return json.dumps(obj, **kw)
