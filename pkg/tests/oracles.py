"""Independent reference computations used only by the tests.

Everything here is written out by hand for n = 2 (or by brute-force sums)
and shares no code with the package.
"""
from fractions import Fraction as F
from math import prod


def r_two_dim_oracle(x, y):
    """n = 2 closed form obtained by eliminating variables by hand."""
    x1, x2 = x.coords
    y1, y2 = y.coords
    xp1 = x1 * (x2 + y1) / (x1 + y2)
    xp2 = x.level / xp1
    return (xp1, xp2), (x1 * y1 / xp1, x2 * y2 / xp2)


def delta_brute(x, y, k):
    if k == 1:
        return F(1)
    xs, ys = x.coords, y.coords
    return sum(prod(xs[: k - 1 - j]) * prod(ys[k - j : k]) for j in range(k))


def af_two_dim(y, a):
    y1, y2 = y.coords
    b = y1 * y2
    return [[b / y1, b / (y1 * y2)], [F(a), b / y2]]


def inverse_two_dim(M):
    (p, q), (r, s) = M
    det = p * s - q * r
    return det, [[s / det, -q / det], [-r / det, p / det]]


def g_sums_two_dim(x, y):
    x1, _ = x.coords
    y1, y2 = y.coords
    a, b = x.level, y.level
    t1, t2 = 1 / y1, x1 / (y1 * y2)
    return [b * (t1 + t2), a * t1 + b * t2, a * (t1 + t2)]


def phi_two_dim(y, x_image):
    y1, y2 = y.coords
    u1, u2 = x_image.coords
    return (y1 - u1, y2 * u1 - u1 * u2)
