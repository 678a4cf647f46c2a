"""Symmetric-group actions built from R, and the identities they satisfy.

The generator ``(i, i+1)`` acts on tuples of points by ``P R`` in slots
``i, i+1`` (R, then swap). Grids carry two such actions: on adjacent rows
(points of dimension m) and on adjacent columns (points of dimension n).
Every ``*_check`` function returns an :class:`ActionReport`; inputs outside
the domain of R raise a :class:`~ybx.errors.DomainError` instead.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .errors import DimensionMismatch, IndexOutOfRange, OutsideDomain
from .rmatrix import (
    TorusPoint,
    apply_R,
    f_inverse,
    f_map,
    g_sum,
    g_sums,
    partial_products,
)

__all__ = [
    "ActionReport",
    "Grid",
    "PointTuple",
    "b_symmetry_check",
    "braid_check",
    "col_action",
    "commutation_check",
    "g_sum",
    "involutivity_check",
    "j_map",
    "j_map_inverse",
    "plain_swap",
    "qybe_check",
    "rho_conjugation_check",
    "row_action",
    "sigma_generator",
    "star_formula_check",
]

PointTuple = tuple  # tuple[TorusPoint, ...] of uniform dimension


@dataclass(frozen=True)
class ActionReport:
    passed: bool
    identity: str | None = None
    indices: tuple | None = None
    left: object = None
    right: object = None

    def __post_init__(self):
        if self.passed != (self.identity is None):
            raise ValueError("a report fails exactly when it names an identity")

    @classmethod
    def ok(cls) -> "ActionReport":
        return cls(True)

    @classmethod
    def fail(cls, identity: str, left, right, indices: tuple | None = None) -> "ActionReport":
        return cls(False, identity, indices, left, right)

    def __bool__(self):
        return self.passed


def _compare(identity: str, left, right, indices=None) -> ActionReport | None:
    if left != right:
        return ActionReport.fail(identity, left, right, indices)
    return None


def _first_failure(checks) -> ActionReport:
    for c in checks:
        if c is not None:
            return c
    return ActionReport.ok()


def _check_tuple(ts: Sequence[TorusPoint]) -> tuple:
    ts = tuple(ts)
    if not ts:
        raise DimensionMismatch("a point tuple needs at least one point")
    if len({t.n for t in ts}) != 1:
        raise DimensionMismatch("points of different dimensions")
    return ts


def _check_gen(i: int, N: int):
    if not 1 <= i <= N - 1:
        raise IndexOutOfRange(f"generator index {i} outside 1..{N - 1}")


def sigma_generator(ts: Sequence[TorusPoint], i: int) -> PointTuple:
    """Apply ``P R`` to slots i, i+1 (1-based)."""
    ts = _check_tuple(ts)
    _check_gen(i, len(ts))
    xp, yp = apply_R(ts[i - 1], ts[i])
    return ts[: i - 1] + (yp, xp) + ts[i + 1 :]


def plain_swap(ts: Sequence[TorusPoint], i: int) -> PointTuple:
    ts = _check_tuple(ts)
    _check_gen(i, len(ts))
    return ts[: i - 1] + (ts[i], ts[i - 1]) + ts[i + 1 :]


def j_map(ts: Sequence[TorusPoint]) -> PointTuple:
    """Slot k becomes ``f_{x_N} ... f_{x_{k+1}}(x_k)``; the last slot is kept."""
    ts = _check_tuple(ts)
    out = []
    for k, v in enumerate(ts):
        for z in ts[k + 1 :]:
            v = f_map(v, z)
        out.append(v)
    return tuple(out)


def j_map_inverse(us: Sequence[TorusPoint]) -> PointTuple:
    us = _check_tuple(us)
    N = len(us)
    xs = [None] * N
    xs[-1] = us[-1]
    for k in range(N - 2, -1, -1):
        v = us[k]
        for l in range(N - 1, k, -1):
            v = f_inverse(xs[l], v)
        xs[k] = v
    return tuple(xs)


def rho_conjugation_check(ts: Sequence[TorusPoint], i: int) -> ActionReport:
    """``P R_{i,i+1}`` equals ``J^{-1} (plain swap) J`` at ts."""
    left = sigma_generator(ts, i)
    right = j_map_inverse(plain_swap(j_map(ts), i))
    return _first_failure([_compare("J^-1 s_i J = PR_i", left, right, (i,))])


def braid_check(ts: Sequence[TorusPoint], i: int) -> ActionReport:
    """``s_i s_{i+1} s_i = s_{i+1} s_i s_{i+1}`` for the ``P R`` generators."""
    ts = _check_tuple(ts)
    if not 1 <= i <= len(ts) - 2:
        raise IndexOutOfRange(f"braid index {i} outside 1..{len(ts) - 2}")
    left = sigma_generator(sigma_generator(sigma_generator(ts, i), i + 1), i)
    right = sigma_generator(sigma_generator(sigma_generator(ts, i + 1), i), i + 1)
    return _first_failure([_compare("braid relation", left, right, (i,))])


def involutivity_check(x: TorusPoint, y: TorusPoint) -> ActionReport:
    xp, yp = apply_R(x, y)
    back = apply_R(yp, xp)
    return _first_failure([_compare("R21 R = 1", tuple(back), (y, x))])


def _r_on(triple: tuple, a: int, b: int) -> tuple:
    out = list(triple)
    out[a], out[b] = apply_R(triple[a], triple[b])
    return tuple(out)


def qybe_check(x: TorusPoint, y: TorusPoint, z: TorusPoint) -> ActionReport:
    """``R12 R13 R23 = R23 R13 R12`` on (x, y, z), operators acting right to left."""
    t = _check_tuple((x, y, z))
    left = _r_on(_r_on(_r_on(t, 1, 2), 0, 2), 0, 1)
    right = _r_on(_r_on(_r_on(t, 0, 1), 0, 2), 1, 2)
    checks = [_compare(f"QYBE component {k + 1}", left[k], right[k]) for k in range(3)]
    return _first_failure(checks)


@dataclass(frozen=True)
class Grid:
    """n-by-m array of nonzero rationals; rows and columns are 1-based."""

    entries: tuple
    n: int = field(init=False)
    m: int = field(init=False)

    def __post_init__(self):
        rows = tuple(tuple(Fraction(v) for v in r) for r in self.entries)
        if not rows or not rows[0] or len({len(r) for r in rows}) != 1:
            raise DimensionMismatch("grid must be a non-empty rectangle")
        if not all(v for r in rows for v in r):
            raise OutsideDomain("grid entries must be nonzero")
        object.__setattr__(self, "entries", rows)
        object.__setattr__(self, "n", len(rows))
        object.__setattr__(self, "m", len(rows[0]))

    def row(self, j: int) -> TorusPoint:
        return TorusPoint(self.entries[j - 1])

    def col(self, i: int) -> TorusPoint:
        return TorusPoint(tuple(r[i - 1] for r in self.entries))

    def with_rows(self, j: int, first: TorusPoint, second: TorusPoint) -> "Grid":
        rows = list(self.entries)
        rows[j - 1], rows[j] = first.coords, second.coords
        return Grid(tuple(rows))

    def with_cols(self, i: int, first: TorusPoint, second: TorusPoint) -> "Grid":
        rows = [list(r) for r in self.entries]
        for l, r in enumerate(rows):
            r[i - 1], r[i] = first.coords[l], second.coords[l]
        return Grid(tuple(tuple(r) for r in rows))

    def __str__(self):
        return "[" + "; ".join(" ".join(str(v) for v in r) for r in self.entries) + "]"


def row_action(grid: Grid, j: int) -> Grid:
    """``P R`` on rows j, j+1, each read as a point of dimension m."""
    if not 1 <= j <= grid.n - 1:
        raise IndexOutOfRange(f"row index {j} outside 1..{grid.n - 1}")
    xp, yp = apply_R(grid.row(j), grid.row(j + 1))
    return grid.with_rows(j, yp, xp)


def col_action(grid: Grid, i: int) -> Grid:
    """``P R`` on columns i, i+1, each read as a point of dimension n."""
    if not 1 <= i <= grid.m - 1:
        raise IndexOutOfRange(f"column index {i} outside 1..{grid.m - 1}")
    pp, qp = apply_R(grid.col(i), grid.col(i + 1))
    return grid.with_cols(i, qp, pp)


def commutation_check(grid: Grid, i: int, j: int) -> ActionReport:
    """Column generator i commutes with row generator j."""
    left = col_action(row_action(grid, j), i)
    right = row_action(col_action(grid, i), j)
    return _first_failure([_compare("row/column actions commute", left, right, (i, j))])


def star_formula_check(grid: Grid, i: int, j: int) -> ActionReport:
    """Closed forms for one row move followed by one column move.

    Rows j, j+1 are x, y (products X, Y, levels a, b); columns i, i+1 are
    p, q (products P, Q, levels c, d). ``*`` marks values after the row move
    and ``**`` after the column move that follows it.
    """
    if not 1 <= j <= grid.n - 1:
        raise IndexOutOfRange(f"row index {j} outside 1..{grid.n - 1}")
    if not 1 <= i <= grid.m - 1:
        raise IndexOutOfRange(f"column index {i} outside 1..{grid.m - 1}")
    m, n = grid.m, grid.n
    Xt, Yt = partial_products(grid.row(j)), partial_products(grid.row(j + 1))
    Pt, Qt = partial_products(grid.col(i)), partial_products(grid.col(i + 1))
    X, Y, P, Q = Xt.base, Yt.base, Pt.base, Qt.base
    a, b, c, d = X[m], Y[m], P[n], Q[n]
    G = g_sums(Xt, Yt)
    H = g_sums(Pt, Qt)
    if not all(G) or not all(H):
        raise OutsideDomain("a G- or H-sum vanishes")

    checks = [
        _compare("shared entries P_j/P_j-1 = X_i/X_i-1", P[j] / P[j - 1], X[i] / X[i - 1]),
        _compare("shared entries Q_j/Q_j-1 = X_i+1/X_i", Q[j] / Q[j - 1], X[i + 1] / X[i]),
        _compare("shared entries Q_j+1/Q_j = Y_i+1/Y_i", Q[j + 1] / Q[j], Y[i + 1] / Y[i]),
        _compare("shared entries P_j+1/P_j = Y_i/Y_i-1", P[j + 1] / P[j], Y[i] / Y[i - 1]),
    ]

    once = row_action(grid, j)
    Xs, Ys = partial_products(once.row(j)).base, partial_products(once.row(j + 1)).base
    Ps, Qs = partial_products(once.col(i)).base, partial_products(once.col(i + 1)).base
    for k in range(m + 1):
        checks.append(_compare("X*_k = X_k G_0/G_k", Xs[k], X[k] * G[0] / G[k], (k,)))
        checks.append(_compare("Y*_k = Y_k G_k/G_0", Ys[k], Y[k] * G[k] / G[0], (k,)))
    for l in range(n + 1):
        if l != j:
            checks.append(_compare("P*_l = P_l", Ps[l], P[l], (l,)))
            checks.append(_compare("Q*_l = Q_l", Qs[l], Q[l], (l,)))
    checks.append(_compare("P*_j = P_j G_i-1/G_i", Ps[j], P[j] * G[i - 1] / G[i]))
    checks.append(_compare("Q*_j = Q_j G_i/G_i+1", Qs[j], Q[j] * G[i] / G[i + 1]))

    U = P[j - 1] / Q[j] * X[i] / Y[i + 1]
    U_mirror = P[j] / Q[j + 1] * X[i - 1] / Y[i]
    checks.append(_compare("U is relabeling invariant", U, U_mirror))
    checks.append(
        _compare("P_j-1/Q*_j expansion", P[j - 1] / Qs[j], P[j - 1] / Q[j] + (a - b) * U / G[i])
    )
    checks.append(
        _compare("P*_j/Q_j+1 expansion", Ps[j] / Q[j + 1], P[j] / Q[j + 1] - (a - b) * U_mirror / G[i])
    )
    checks.append(
        _compare(
            "starred pair sum is unchanged",
            P[j - 1] / Qs[j] + Ps[j] / Q[j + 1],
            P[j - 1] / Q[j] + P[j] / Q[j + 1],
        )
    )

    twice = col_action(once, i)
    Xss, Yss = partial_products(twice.row(j)).base, partial_products(twice.row(j + 1)).base
    Pss, Qss = partial_products(twice.col(i)).base, partial_products(twice.col(i + 1)).base
    S = (c - d) * (a - b) * U + G[i] * H[j]
    if not S:
        raise OutsideDomain("S vanishes")
    Hj_star = g_sum(partial_products(once.col(i)), partial_products(once.col(i + 1)), j)
    checks.append(_compare("H_j(P*, Q*) = S/G_i", Hj_star, S / G[i]))
    for k in range(m + 1):
        if k != i:
            checks.append(_compare("X**_k = X_k G_0/G_k", Xss[k], X[k] * G[0] / G[k], (k,)))
            checks.append(_compare("Y**_k = Y_k G_k/G_0", Yss[k], Y[k] * G[k] / G[0], (k,)))
    for l in range(n + 1):
        if l != j:
            checks.append(_compare("P**_l = P_l H_0/H_l", Pss[l], P[l] * H[0] / H[l], (l,)))
            checks.append(_compare("Q**_l = Q_l H_l/H_0", Qss[l], Q[l] * H[l] / H[0], (l,)))
    checks.append(_compare("X**_i = X_i G_0 H_j-1 / S", Xss[i], X[i] * G[0] * H[j - 1] / S))
    checks.append(_compare("P**_j = P_j H_0 G_i-1 / S", Pss[j], P[j] * H[0] * G[i - 1] / S))
    report = _first_failure(checks)
    if not report.passed:
        report = ActionReport.fail(
            report.identity, report.left, report.right, (i, j) + (report.indices or ())
        )
    return report


def _b_coefficients(Xw: Sequence, Yw: Sequence):
    X0, X1, X2 = Xw
    Y0, Y1, Y2 = Yw
    op_den = Y1 / Y0 * X0 - X1
    den = Y1 * X0 - X1 * Y0
    if not op_den or not den:
        raise OutsideDomain("B-operator denominator vanishes")
    K = (Y2 / Y1 * X1 - X2) / op_den
    operator_form = (K * Y1 / Y0, -K - Y2 / Y1, Fraction(1))
    closed_form = ((Y2 * X1 - Y1 * X2) / den, -(Y2 * X0 - Y0 * X2) / den, Fraction(1))
    return operator_form, closed_form


def b_symmetry_check(Xwin: Sequence, Ywin: Sequence, i: int = 0) -> ActionReport:
    """Coefficients of ``Z_i, Z_{i+1}, Z_{i+2}`` in the operator B are symmetric in X, Y.

    ``Xwin = (X_i, X_{i+1}, X_{i+2})``, likewise ``Ywin``.
    """
    Xw = tuple(Fraction(v) for v in Xwin)
    Yw = tuple(Fraction(v) for v in Ywin)
    if len(Xw) != 3 or len(Yw) != 3:
        raise DimensionMismatch("windows must have length 3")
    if not all(Xw) or not all(Yw):
        raise OutsideDomain("window entries must be nonzero")
    op_xy, closed_xy = _b_coefficients(Xw, Yw)
    op_yx, closed_yx = _b_coefficients(Yw, Xw)
    checks = []
    for r in range(3):
        idx = (i + r,)
        checks.append(_compare("B coefficient closed form", op_xy[r], closed_xy[r], idx))
        checks.append(_compare("B coefficient closed form (swapped)", op_yx[r], closed_yx[r], idx))
        checks.append(_compare("B coefficient symmetric in X, Y", closed_xy[r], closed_yx[r], idx))
    return _first_failure(checks)
