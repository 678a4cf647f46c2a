"""Exact scalars, univariate polynomials, rational functions and square matrices.

Scalars are :class:`fractions.Fraction` (always stored reduced, so ``==`` is a
structural check). Polynomials and rational functions live in one
indeterminate, written ``λ``, over the rationals. Matrices are square and
carry a field tag, either :data:`QQ` or :data:`QQ_LAMBDA`.

>>> lam = LAMBDA
>>> (lam**2 - 1) / (lam - 1)
RationalFunction('λ + 1')
>>> mat_det(Matrix([[5, 1], [2, 3]]))
Fraction(13, 1)
"""
from __future__ import annotations

from fractions import Fraction
from itertools import zip_longest
from typing import Iterable, Sequence, Union

from .errors import SizeMismatch, Singular, ZeroDenominator, ZeroMatrix

Rational = Fraction
SYMBOL = "λ"

QQ = "Q"
QQ_LAMBDA = "Q(λ)"


def parse_rational(text: str) -> Fraction:
    """Parse ``"p/q"`` or ``"p"`` (surrounding whitespace allowed)."""
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise ValueError(f"not a rational number: {text!r}") from exc


def format_rational(q: Fraction) -> str:
    return str(q)


class Polynomial:
    """Dense polynomial in λ; ``coeffs[k]`` is the coefficient of λ**k.

    Trailing zeros are stripped, so the zero polynomial has ``coeffs == ()``
    and degree -1.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        cs = [c if type(c) is Fraction else Fraction(c) for c in coeffs]
        while cs and not cs[-1]:
            cs.pop()
        self.coeffs = tuple(cs)

    @classmethod
    def _wrap(cls, coeffs: list) -> "Polynomial":
        # coeffs already Fractions
        p = object.__new__(cls)
        while coeffs and not coeffs[-1]:
            coeffs.pop()
        p.coeffs = tuple(coeffs)
        return p

    @classmethod
    def constant(cls, c) -> "Polynomial":
        return cls((c,))

    @staticmethod
    def _coerce(other) -> "Polynomial | None":
        if isinstance(other, Polynomial):
            return other
        if isinstance(other, (int, Fraction)):
            return Polynomial((other,))
        return None

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def leading(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self):
        return bool(self.coeffs)

    def is_constant(self) -> bool:
        return len(self.coeffs) <= 1

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.coeffs == o.coeffs

    def __hash__(self):
        if len(self.coeffs) <= 1:
            return hash(self.leading)
        return hash(self.coeffs)

    def __neg__(self):
        return Polynomial._wrap([-c for c in self.coeffs])

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return Polynomial._wrap(
            [a + b for a, b in zip_longest(self.coeffs, o.coeffs, fillvalue=0)]
        )

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return Polynomial._wrap(
            [a - b for a, b in zip_longest(self.coeffs, o.coeffs, fillvalue=0)]
        )

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        a, b = self.coeffs, o.coeffs
        if not a or not b:
            return Polynomial()
        out = [Fraction(0)] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    out[i + j] += ai * bj
        return Polynomial._wrap(out)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if e < 0:
            raise ValueError("negative polynomial power")
        result, base = Polynomial((1,)), self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __divmod__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if o.is_zero():
            raise ZeroDenominator("polynomial division by zero")
        rem = list(self.coeffs)
        dd = o.degree
        lead = o.leading
        if len(rem) - 1 < dd:
            return Polynomial(), self
        quot = [Fraction(0)] * (len(rem) - dd)
        for k in range(len(rem) - 1, dd - 1, -1):
            c = rem[k]
            if not c:
                continue
            c = c / lead
            quot[k - dd] = c
            for j, oj in enumerate(o.coeffs):
                rem[k - dd + j] -= c * oj
        return Polynomial._wrap(quot), Polynomial._wrap(rem[:dd])

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def monic(self) -> "Polynomial":
        if not self.coeffs:
            return self
        lead = self.coeffs[-1]
        if lead == 1:
            return self
        return Polynomial._wrap([c / lead for c in self.coeffs])

    def __call__(self, x):
        acc = Fraction(0) if isinstance(x, (int, Fraction)) else 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __repr__(self):
        return f"Polynomial({[str(c) for c in self.coeffs]})"

    def __str__(self):
        if not self.coeffs:
            return "0"
        terms = []
        for k in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[k]
            if not c:
                continue
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            if k == 0:
                body = str(mag)
            else:
                mono = SYMBOL if k == 1 else f"{SYMBOL}^{k}"
                body = mono if mag == 1 else f"{mag}*{mono}"
            terms.append((sign, body))
        first_sign, first = terms[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in terms[1:]:
            out += f" {sign} {body}"
        return out


def poly_gcd(a: Polynomial, b: Polynomial) -> Polynomial:
    """Monic gcd by the Euclidean algorithm (zero iff both inputs are zero)."""
    while b:
        a, b = b, a % b
    return a.monic()


ScalarLike = Union[int, Fraction, Polynomial, "RationalFunction"]


class RationalFunction:
    """Element of Q(λ) in canonical form: coprime, monic denominator."""

    __slots__ = ("num", "den")

    def __init__(self, num: ScalarLike = 0, den: ScalarLike = 1):
        rf = ratfunc_reduce(_as_poly_or_rf(num), _as_poly_or_rf(den))
        self.num, self.den = rf.num, rf.den

    @classmethod
    def _from_reduced(cls, num: Polynomial, den: Polynomial) -> "RationalFunction":
        rf = object.__new__(cls)
        rf.num, rf.den = num, den
        return rf

    @staticmethod
    def _coerce(other) -> "RationalFunction | None":
        if isinstance(other, RationalFunction):
            return other
        if isinstance(other, (int, Fraction)):
            return RationalFunction._from_reduced(Polynomial((other,)), _ONE_POLY)
        if isinstance(other, Polynomial):
            return RationalFunction._from_reduced(other, _ONE_POLY)
        return None

    def is_zero(self) -> bool:
        return not self.num

    def __bool__(self):
        return bool(self.num)

    def is_constant(self) -> bool:
        return self.num.is_constant() and self.den.is_constant()

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.num == o.num and self.den == o.den

    def __hash__(self):
        if self.den.degree == 0 and self.num.degree <= 0:
            return hash(self.num.leading)
        return hash((self.num, self.den))

    def __neg__(self):
        return RationalFunction._from_reduced(-self.num, self.den)

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if self.den == o.den:
            return ratfunc_reduce(self.num + o.num, self.den)
        return ratfunc_reduce(self.num * o.den + o.num * self.den, self.den * o.den)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return ratfunc_reduce(self.num * o.num, self.den * o.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if o.is_zero():
            raise ZeroDenominator("division by the zero rational function")
        return ratfunc_reduce(self.num * o.den, self.den * o.num)

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o / self

    def __pow__(self, e: int):
        if e < 0:
            if self.is_zero():
                raise ZeroDenominator("zero to a negative power")
            return ratfunc_reduce(self.den ** (-e), self.num ** (-e))
        return RationalFunction._from_reduced(self.num**e, self.den**e)

    def __call__(self, x) -> Fraction:
        """Evaluate at a rational point."""
        d = self.den(Fraction(x))
        if not d:
            raise ZeroDenominator(f"pole at {x}")
        return self.num(Fraction(x)) / d

    def __repr__(self):
        return f"RationalFunction({str(self)!r})"

    def __str__(self):
        if self.den == 1:
            return str(self.num)
        num = str(self.num)
        if sum(1 for c in self.num.coeffs if c) > 1 or "/" in num:
            num = f"({num})"
        return f"{num}/({self.den})"


_ONE_POLY = Polynomial((1,))


def _as_poly_or_rf(v):
    if isinstance(v, (Polynomial, RationalFunction)):
        return v
    return Polynomial((v,))


def ratfunc_reduce(num, den) -> RationalFunction:
    """Canonical ``num/den``: common factors removed, denominator monic."""
    if isinstance(num, RationalFunction) or isinstance(den, RationalFunction):
        n = RationalFunction._coerce(num)
        d = RationalFunction._coerce(den)
        if d.is_zero():
            raise ZeroDenominator("zero denominator")
        return ratfunc_reduce(n.num * d.den, n.den * d.num)
    if den.is_zero():
        raise ZeroDenominator("zero denominator")
    if num.is_zero():
        return RationalFunction._from_reduced(Polynomial(), _ONE_POLY)
    if den.degree > 0:
        g = poly_gcd(num, den)
        if g.degree > 0:
            num, den = num // g, den // g
    lead = den.leading
    if lead != 1:
        num = Polynomial._wrap([c / lead for c in num.coeffs])
        den = Polynomial._wrap([c / lead for c in den.coeffs])
    return RationalFunction._from_reduced(num, den)


LAMBDA = RationalFunction._from_reduced(Polynomial((0, 1)), _ONE_POLY)


def field_of(value) -> str:
    return QQ_LAMBDA if isinstance(value, (RationalFunction, Polynomial)) else QQ


def to_field(value, field: str):
    if field == QQ_LAMBDA:
        if isinstance(value, RationalFunction):
            return value
        if isinstance(value, Polynomial):
            return RationalFunction._coerce(value)
        return RationalFunction._coerce(Fraction(value))
    if isinstance(value, RationalFunction):
        if not value.is_constant():
            raise TypeError(f"{value} is not a rational constant")
        return value.num.leading / value.den.leading
    return value if type(value) is Fraction else Fraction(value)


def field_zero(field: str):
    return to_field(0, field)


def field_one(field: str):
    return to_field(1, field)


class Matrix:
    """Immutable square matrix over Q or Q(λ); indexing is 0-based."""

    __slots__ = ("rows", "field")

    def __init__(self, rows: Iterable[Iterable], field: str | None = None):
        rows = [list(r) for r in rows]
        n = len(rows)
        if n == 0 or any(len(r) != n for r in rows):
            raise SizeMismatch("matrix must be square and non-empty")
        if field is None:
            field = QQ_LAMBDA if any(field_of(v) == QQ_LAMBDA for r in rows for v in r) else QQ
        self.field = field
        self.rows = tuple(tuple(to_field(v, field) for v in r) for r in rows)

    @classmethod
    def identity(cls, n: int, field: str = QQ) -> "Matrix":
        one, zero = field_one(field), field_zero(field)
        return cls([[one if i == j else zero for j in range(n)] for i in range(n)], field)

    @property
    def size(self) -> int:
        return len(self.rows)

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def entries(self):
        return [v for r in self.rows for v in r]

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.rows == other.rows

    def __hash__(self):
        return hash(self.rows)

    def __repr__(self):
        body = ", ".join("[" + ", ".join(str(v) for v in r) + "]" for r in self.rows)
        return f"Matrix([{body}])"

    def transpose(self) -> "Matrix":
        return Matrix(zip(*self.rows), self.field)

    @property
    def T(self) -> "Matrix":
        return self.transpose()

    def scale(self, c) -> "Matrix":
        field = QQ_LAMBDA if field_of(c) == QQ_LAMBDA else self.field
        return Matrix([[c * v for v in r] for r in self.rows], field)

    def apply(self, vector: Sequence):
        """Matrix times column vector, returned as a tuple."""
        if len(vector) != self.size:
            raise SizeMismatch("vector length does not match matrix size")
        return tuple(sum((a * b for a, b in zip(r, vector)), field_zero(self.field)) for r in self.rows)

    def evaluate(self, lam) -> "Matrix":
        """Specialise λ to a rational value (Q(λ) matrices only)."""
        if self.field == QQ:
            return self
        return Matrix([[v(lam) for v in r] for r in self.rows], QQ)

    def __matmul__(self, other):
        if isinstance(other, Matrix):
            return mat_mul(self, other)
        return self.apply(other)

    def __mul__(self, other):
        if isinstance(other, Matrix):
            return mat_mul(self, other)
        return self.scale(other)

    def __rmul__(self, other):
        return self.scale(other)

    def __pow__(self, e: int) -> "Matrix":
        base = self if e >= 0 else mat_inverse(self)
        e = abs(e)
        result = Matrix.identity(self.size, self.field)
        while e:
            if e & 1:
                result = mat_mul(result, base)
            base = mat_mul(base, base)
            e >>= 1
        return result


def _check_same(A: Matrix, B: Matrix):
    if A.size != B.size:
        raise SizeMismatch(f"sizes {A.size} and {B.size} differ")
    if A.field != B.field:
        raise SizeMismatch(f"fields {A.field} and {B.field} differ")


def mat_mul(A: Matrix, B: Matrix) -> Matrix:
    _check_same(A, B)
    zero = field_zero(A.field)
    cols = list(zip(*B.rows))
    return Matrix(
        [[sum((a * b for a, b in zip(r, c) if a and b), zero) for c in cols] for r in A.rows],
        A.field,
    )


def _eliminate(A: Matrix, augment: Matrix | None = None):
    """Row-reduce to upper-triangular form with the first nonzero pivot.

    Returns (rows, aug_rows, sign) or raises Singular when a column has no pivot.
    """
    n = A.size
    rows = [list(r) for r in A.rows]
    aug = [list(r) for r in augment.rows] if augment is not None else None
    sign = 1
    for col in range(n):
        piv = next((r for r in range(col, n) if rows[r][col]), None)
        if piv is None:
            raise Singular("matrix is singular")
        if piv != col:
            rows[col], rows[piv] = rows[piv], rows[col]
            if aug is not None:
                aug[col], aug[piv] = aug[piv], aug[col]
            sign = -sign
        p = rows[col][col]
        for r in range(col + 1, n):
            if not rows[r][col]:
                continue
            factor = rows[r][col] / p
            rows[r] = [x - factor * y if y else x for x, y in zip(rows[r], rows[col])]
            rows[r][col] = field_zero(A.field)
            if aug is not None:
                aug[r] = [x - factor * y if y else x for x, y in zip(aug[r], aug[col])]
    return rows, aug, sign


def mat_det(A: Matrix):
    try:
        rows, _, sign = _eliminate(A)
    except Singular:
        return field_zero(A.field)
    det = field_one(A.field) if sign == 1 else -field_one(A.field)
    for i in range(A.size):
        det = det * rows[i][i]
    return det


def mat_inverse(A: Matrix) -> Matrix:
    """Gauss-Jordan inverse; raises Singular when det(A) = 0."""
    n = A.size
    rows, aug, _ = _eliminate(A, Matrix.identity(n, A.field))
    for col in range(n - 1, -1, -1):
        p = rows[col][col]
        aug[col] = [v / p for v in aug[col]]
        for r in range(col):
            factor = rows[r][col]
            if factor:
                aug[r] = [x - factor * y if y else x for x, y in zip(aug[r], aug[col])]
    return Matrix(aug, A.field)


def proportional(u: Sequence, v: Sequence) -> bool:
    """True iff u = c*v for some nonzero scalar c; both must be nonzero."""
    if len(u) != len(v):
        raise SizeMismatch("length mismatch")
    k = next((i for i, b in enumerate(v) if b), None)
    if k is None or not any(u):
        raise ZeroMatrix("zero vector has no projective class")
    if not u[k]:
        return False
    c = u[k] / v[k]
    return all(a == c * b for a, b in zip(u, v))


def projective_equal(A: Matrix, B: Matrix) -> bool:
    """Equality in PGL: A = c*B for a nonzero scalar c of the field."""
    _check_same(A, B)
    return proportional(A.entries(), B.entries())
