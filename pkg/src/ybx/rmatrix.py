"""The birational map R on pairs of torus points, and its linear models.

Coordinates are 1-based (``t_1 .. t_n``) and partial products 0-based
(``T_0 = 1, T_i = t_1 ... t_i``), extended to every integer index by
``T_{i+n} = level * T_i``.

R(x, y) = (x', y') is determined by

    x'_1 ... x'_k = Y_k + Delta_k(x, y) * eta(x, y),   x'_i y'_i = x_i y_i,

with ``eta = (level(x) - level(y)) / Delta_n``. The first component is
``f_y(x)``, the second ``g_x(y)``. On the leaf of level ``a`` the map
``f_y`` is the projective transformation ``Z -> A_f(y, a) Z`` in the chart
``j_+``; ``g_x`` is ``Z -> A_g(x, b) Z`` in the chart ``j_-``.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, NamedTuple, Sequence

from .algebra import Matrix, field_of, field_one, field_zero, proportional
from .errors import (
    DegenerateOutput,
    DimensionMismatch,
    IndexOutOfRange,
    OutsideDomain,
    PostconditionFailed,
    Singular,
    ZeroCoordinate,
)

PLUS = "plus"
MINUS = "minus"


@dataclass(frozen=True)
class TorusPoint:
    """A point ``[t_1, ..., t_n]`` of (Q*)^n; ``level`` is the coordinate product."""

    coords: tuple
    level: Fraction = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        coords = tuple(c if type(c) is Fraction else Fraction(c) for c in self.coords)
        if not coords:
            raise DimensionMismatch("a torus point needs at least one coordinate")
        if not all(coords):
            raise ZeroCoordinate(f"zero coordinate in {coords}")
        object.__setattr__(self, "coords", coords)
        level = Fraction(1)
        for c in coords:
            level *= c
        object.__setattr__(self, "level", level)

    @classmethod
    def of(cls, *values) -> "TorusPoint":
        return cls(tuple(values))

    @property
    def n(self) -> int:
        return len(self.coords)

    def coord(self, i: int) -> Fraction:
        """1-based coordinate access."""
        if not 1 <= i <= len(self.coords):
            raise IndexOutOfRange(f"coordinate index {i} outside 1..{self.n}")
        return self.coords[i - 1]

    def __len__(self):
        return len(self.coords)

    def __iter__(self):
        return iter(self.coords)

    def __str__(self):
        return "(" + ", ".join(str(c) for c in self.coords) + ")"


@dataclass(frozen=True)
class TProducts:
    """Partial products ``(T_0, ..., T_n)`` of a torus point."""

    base: tuple

    @property
    def n(self) -> int:
        return len(self.base) - 1

    @property
    def level(self) -> Fraction:
        return self.base[-1]

    def __getitem__(self, i: int) -> Fraction:
        return t_index(self, i)


class ProjVector(NamedTuple):
    """Homogeneous coordinates; ``chart`` is ``PLUS``, ``MINUS`` or None."""

    entries: tuple
    chart: str | None = None

    def proportional_to(self, other: Sequence) -> bool:
        return proportional(self.entries, tuple(other))


class RPair(NamedTuple):
    x_out: TorusPoint
    y_out: TorusPoint


def _same_dim(x: TorusPoint, y: TorusPoint) -> int:
    if x.n != y.n:
        raise DimensionMismatch(f"dimensions {x.n} and {y.n} differ")
    return x.n


def partial_products(t: TorusPoint) -> TProducts:
    out = [Fraction(1)]
    for c in t.coords:
        out.append(out[-1] * c)
    return TProducts(tuple(out))


def t_index(tp: TProducts, i: int) -> Fraction:
    """``T_i`` for any integer i, using ``T_{i+n} = level * T_i``."""
    n = tp.n
    q, r = divmod(i, n)
    if q == 0:
        return tp.base[r]
    return tp.base[r] * tp.level**q


def point_from_products(products: Sequence) -> TorusPoint:
    """Inverse of :func:`partial_products`; ``products[0]`` must be 1."""
    return TorusPoint(tuple(products[k] / products[k - 1] for k in range(1, len(products))))


def delta_k(x: TorusPoint, y: TorusPoint, k: int) -> Fraction:
    n = _same_dim(x, y)
    if not 1 <= k <= n:
        raise IndexOutOfRange(f"k={k} outside 1..{n}")
    return _deltas(x, y)[k]


def _deltas(x: TorusPoint, y: TorusPoint) -> list:
    # Delta_{k+1} = X_k + y_{k+1} Delta_k, index 0 unused
    deltas = [None, Fraction(1)]
    xk = Fraction(1)
    for k in range(1, x.n):
        xk *= x.coords[k - 1]
        deltas.append(xk + y.coords[k] * deltas[k])
    return deltas


def eta(x: TorusPoint, y: TorusPoint) -> Fraction:
    n = _same_dim(x, y)
    d = _deltas(x, y)[n]
    if not d:
        raise OutsideDomain("Delta_n vanishes")
    return (x.level - y.level) / d


def apply_R(x: TorusPoint, y: TorusPoint) -> RPair:
    n = _same_dim(x, y)
    deltas = _deltas(x, y)
    if not deltas[n]:
        raise OutsideDomain("Delta_n vanishes")
    e = (x.level - y.level) / deltas[n]
    prev = Fraction(1)
    yk = Fraction(1)
    xs = []
    for k in range(1, n + 1):
        yk *= y.coords[k - 1]
        cur = yk + deltas[k] * e
        if not cur:
            raise OutsideDomain(f"partial product {k} of the image vanishes")
        xs.append(cur / prev)
        prev = cur
    if prev != x.level:
        raise PostconditionFailed(f"level of x' is {prev}, expected {x.level}")
    x_out = TorusPoint(tuple(xs))
    y_out = TorusPoint(tuple(a * b / c for a, b, c in zip(x.coords, y.coords, xs)))
    if y_out.level != y.level:
        raise PostconditionFailed(f"level of y' is {y_out.level}, expected {y.level}")
    return RPair(x_out, y_out)


def f_map(x: TorusPoint, y: TorusPoint) -> TorusPoint:
    """``f_y(x)``, the first component of R(x, y)."""
    return apply_R(x, y).x_out


def g_map(x: TorusPoint, y: TorusPoint) -> TorusPoint:
    """``g_x(y)``, the second component of R(x, y)."""
    return apply_R(x, y).y_out


def g_sum(X: TProducts, Y: TProducts, k: int):
    """``a * sum_{r<=k} X_{r-1}/Y_r + b * sum_{r>k} X_{r-1}/Y_r``.

    ``a``, ``b`` are the levels of X and Y. Applied to column products this
    is the H-sum as well.
    """
    m = X.n
    if Y.n != m:
        raise DimensionMismatch(f"lengths {m} and {Y.n} differ")
    if not 0 <= k <= m:
        raise IndexOutOfRange(f"k={k} outside 0..{m}")
    low = sum((X.base[r - 1] / Y.base[r] for r in range(1, k + 1)), Fraction(0))
    high = sum((X.base[r - 1] / Y.base[r] for r in range(k + 1, m + 1)), Fraction(0))
    return X.level * low + Y.level * high


def g_sums(X: TProducts, Y: TProducts) -> list:
    """All of ``G_0 .. G_m`` in one pass."""
    m = X.n
    if Y.n != m:
        raise DimensionMismatch(f"lengths {m} and {Y.n} differ")
    w = [X.base[r - 1] / Y.base[r] for r in range(1, m + 1)]
    total = sum(w, Fraction(0))
    out = []
    low = Fraction(0)
    for k in range(m + 1):
        if k:
            low += w[k - 1]
        out.append(X.level * low + Y.level * (total - low))
    return out


def closed_form_R(x: TorusPoint, y: TorusPoint) -> RPair:
    """R from the G-sums: ``T_k(x') = Y_k G_k / G_0``, ``T_k(y') = X_k G_0 / G_k``."""
    _same_dim(x, y)
    X, Y = partial_products(x), partial_products(y)
    G = g_sums(X, Y)
    if not all(G):
        raise OutsideDomain("a G-sum vanishes")
    g0 = G[0]
    xp = [Yk * Gk / g0 for Yk, Gk in zip(Y.base, G)]
    yp = [Xk * g0 / Gk for Xk, Gk in zip(X.base, G)]
    return RPair(point_from_products(xp), point_from_products(yp))


def embed_plus(t: TorusPoint) -> ProjVector:
    """``j_+(t) = (1, T_1, ..., T_{n-1})``."""
    return ProjVector(partial_products(t).base[:-1], PLUS)


def embed_minus(t: TorusPoint) -> ProjVector:
    """``j_-(t) = (1/T_1, ..., 1/T_n)``."""
    return ProjVector(tuple(1 / T for T in partial_products(t).base[1:]), MINUS)


def point_from_proj(v, level, chart: str | None = None) -> TorusPoint:
    """Pull a chart vector back to the torus point of the given level."""
    if isinstance(v, ProjVector):
        chart = chart or v.chart
        entries = v.entries
    else:
        entries = tuple(v)
    if chart not in (PLUS, MINUS):
        raise ValueError(f"unknown chart {chart!r}")
    level = Fraction(level)
    if not level:
        raise ZeroCoordinate("level must be nonzero")
    if not all(entries):
        raise ZeroCoordinate(f"zero entry in {entries}")
    if chart == PLUS:
        v1 = entries[0]
        products = [e / v1 for e in entries] + [level]
    else:
        vn = entries[-1]
        products = [Fraction(1)] + [level * vn / e for e in entries]
    return point_from_products(products)


def _param_field(p) -> str:
    return field_of(p)


def matrix_af(y: TorusPoint, a) -> Matrix:
    """``A_f(y, a)_{ij} = Y_{i-1}/Y_j * (a if i > j else b)`` with ``b = level(y)``.

    ``a`` may be a rational or the indeterminate λ.
    """
    if not a:
        raise ValueError("parameter a must be nonzero")
    Y = partial_products(y).base
    b = Y[-1]
    n = y.n
    rows = [
        [Y[i - 1] / Y[j] * (a if i > j else b) for j in range(1, n + 1)]
        for i in range(1, n + 1)
    ]
    return Matrix(rows, _param_field(a))


def matrix_ag(x: TorusPoint, b) -> Matrix:
    """``A_g(x, b)_{ij} = X_{j-1}/X_i * (a if i >= j else b)`` with ``a = level(x)``."""
    if not b:
        raise ValueError("parameter b must be nonzero")
    X = partial_products(x).base
    a = X[-1]
    n = x.n
    rows = [
        [X[j - 1] / X[i] * (a if i >= j else b) for j in range(1, n + 1)]
        for i in range(1, n + 1)
    ]
    return Matrix(rows, _param_field(b))


def matrix_af_inv(y: TorusPoint, a) -> Matrix:
    """Closed-form inverse of :func:`matrix_af`.

    Nonzero entries only where ``j - i`` is 0 or 1 mod n: ``Y_i/Y_{i-1}`` on
    the diagonal, ``-1`` above it and ``-a`` in the corner ``(n, 1)``, all
    divided by ``b - a``.
    """
    fld = _param_field(a)
    n = y.n
    if n == 1:
        # diagonal and corner coincide: (b - a)/(b - a)
        return Matrix.identity(1, fld)
    Y = partial_products(y).base
    b = Y[-1]
    if b == a:
        raise Singular("a equals the level of y")
    s = field_one(fld) / (b - a)
    zero = field_zero(fld)
    rows = [[zero] * n for _ in range(n)]
    for i in range(1, n + 1):
        rows[i - 1][i - 1] = s * (Y[i] / Y[i - 1])
        if i < n:
            rows[i - 1][i] = -s
    rows[n - 1][0] = -a * s
    return Matrix(rows, fld)


def phi_map(Y: TProducts, X: TProducts) -> ProjVector:
    """``phi_i = Y_{i+1}/Y_i * X_i - X_{i+1}`` for i = 0..n-1 (plus chart).

    With X the products of ``f_y(x)`` this is proportional to ``j_+(x)``.
    """
    entries = tuple(Y[i + 1] / Y[i] * X[i] - X[i + 1] for i in range(X.n))
    if not any(entries):
        raise DegenerateOutput("phi vanishes identically")
    return ProjVector(entries, PLUS)


def gamma_map(X: TProducts, Y: TProducts) -> ProjVector:
    """``gamma_i = 1/(X_i/X_{i-1}/Y_i - 1/Y_{i-1})`` for i = 1..n.

    With Y the products of ``g_x(y)`` this is proportional to ``(Y_1..Y_n)``
    of ``y``. The variant with ``X_i * X_{i-1}`` in place of ``X_i/X_{i-1}``
    is not an inverse of g.
    """
    out = []
    for i in range(1, X.n + 1):
        inner = X[i] / X[i - 1] / Y[i] - 1 / Y[i - 1]
        if not inner:
            raise OutsideDomain(f"gamma denominator vanishes at i={i}")
        out.append(1 / inner)
    return ProjVector(tuple(out))


def f_inverse(y: TorusPoint, x_image: TorusPoint) -> TorusPoint:
    """The x with ``f_y(x) = x_image``."""
    _same_dim(y, x_image)
    phi = phi_map(partial_products(y), partial_products(x_image))
    return point_from_proj(phi, x_image.level, PLUS)


def g_inverse(x: TorusPoint, y_image: TorusPoint) -> TorusPoint:
    """The y with ``g_x(y) = y_image``."""
    _same_dim(x, y_image)
    gamma = gamma_map(partial_products(x), partial_products(y_image))
    return point_from_proj(ProjVector(tuple(1 / c for c in gamma.entries), MINUS), y_image.level)


def f_by_matrix(x: TorusPoint, y: TorusPoint) -> TorusPoint:
    """``f_y(x)`` through the plus chart and ``A_f(y, level(x))``."""
    _same_dim(x, y)
    v = matrix_af(y, x.level).apply(embed_plus(x).entries)
    if not any(v):
        raise DegenerateOutput("matrix image vanishes")
    return point_from_proj(v, x.level, PLUS)


def g_by_matrix(x: TorusPoint, y: TorusPoint) -> TorusPoint:
    """``g_x(y)`` through the minus chart and ``A_g(x, level(y))``."""
    _same_dim(x, y)
    v = matrix_ag(x, y.level).apply(embed_minus(y).entries)
    if not any(v):
        raise DegenerateOutput("matrix image vanishes")
    return point_from_proj(v, y.level, MINUS)


def involutivity_kernel(Xw: Sequence, Yw: Sequence):
    """Both sides of the local identity behind involutivity.

    ``Xw = (X_{i-1}, X_i, X_{i+1})`` and likewise ``Yw``; returns
    ``(lhs, 1/Y_i)`` which must agree for any nonzero window where defined.
    """
    Xm, X0, X1 = map(Fraction, Xw)
    Ym, Y0, Y1 = map(Fraction, Yw)
    a = Y1 / Y0 * X0 - X1
    b = Y0 / Ym * Xm - X0
    c = X1 / X0 * Y0 - Y1
    d = X0 / Xm * Ym - Y0
    if not (b and c and d):
        raise OutsideDomain("vanishing factor in the window identity")
    return a / b / c - 1 / d, 1 / Y0


def as_point(values: Iterable) -> TorusPoint:
    return TorusPoint(tuple(values))
