"""Reduced structure groups as subgroups of PGL_n(Q(λ)).

The plus group is generated by ``A_f(z, λ)^{-1}`` and the minus group by
``A_g(z, λ)``, one generator per torus point z. Both assignments respect the
defining relations ``x y = y' x'`` (for ``R(x, y) = (x', y')``) up to scalars.

Composition convention: ``f_y`` after ``f_x`` is the matrix product
``A_f(y, λ) @ A_f(x, λ)``.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from .actions import ActionReport
from .algebra import LAMBDA, QQ_LAMBDA, Matrix, mat_det, mat_mul, projective_equal
from .errors import DimensionMismatch, FamilyMismatch, ZeroMatrix, OutsideDomain
from .rmatrix import TorusPoint, apply_R, matrix_af, matrix_af_inv, matrix_ag

PLUS = "+"
MINUS = "-"


def generator_plus(z: TorusPoint) -> Matrix:
    """``(level(z) - λ) * A_f(z, λ)^{-1}``: diagonal ``Z_i/Z_{i-1}``, -1 above, -λ in the corner."""
    return matrix_af_inv(z, LAMBDA).scale(z.level - LAMBDA)


def generator_minus(z: TorusPoint) -> Matrix:
    return matrix_ag(z, LAMBDA)


_GENERATORS = {PLUS: generator_plus, MINUS: generator_minus}


@dataclass(frozen=True)
class Letter:
    point: TorusPoint
    sign: str = PLUS
    exponent: int = 1

    def __post_init__(self):
        if self.sign not in (PLUS, MINUS):
            raise ValueError(f"sign must be '+' or '-', got {self.sign!r}")
        if not self.exponent:
            raise ValueError("exponent must be nonzero")


@dataclass(frozen=True)
class GroupWord:
    letters: tuple
    n: int | None = None

    def __post_init__(self):
        letters = tuple(self.letters)
        dims = {l.point.n for l in letters}
        if self.n is not None:
            dims.add(self.n)
        if len(dims) > 1:
            raise DimensionMismatch("letters of different dimensions")
        if not dims:
            raise DimensionMismatch("an empty word needs an explicit dimension")
        object.__setattr__(self, "letters", letters)
        object.__setattr__(self, "n", dims.pop())

    @classmethod
    def of(cls, letters: Iterable[Letter], n: int | None = None) -> "GroupWord":
        return cls(tuple(letters), n)


def word_evaluate(word: GroupWord, family: str) -> Matrix:
    """Ordered product of generator powers over Q(λ)."""
    if family not in _GENERATORS:
        raise FamilyMismatch(f"unknown family {family!r}")
    gen = _GENERATORS[family]
    result = Matrix.identity(word.n, QQ_LAMBDA)
    for letter in word.letters:
        if letter.sign != family:
            raise FamilyMismatch(f"letter of family {letter.sign!r} in a {family!r} word")
        result = mat_mul(result, gen(letter.point) ** letter.exponent)
    return result


def relation_word(x: TorusPoint, y: TorusPoint, family: str = PLUS) -> GroupWord:
    """The relator ``x y x'^{-1} y'^{-1}`` of the structure group."""
    xp, yp = apply_R(x, y)
    return GroupWord.of(
        [Letter(x, family, 1), Letter(y, family, 1), Letter(xp, family, -1), Letter(yp, family, -1)]
    )


def is_projective_identity(M: Matrix) -> bool:
    return projective_equal(M, Matrix.identity(M.size, M.field))


def generator_is_invertible(z: TorusPoint, family: str = PLUS) -> bool:
    return bool(mat_det(_GENERATORS[family](z)))


def relation_check(x: TorusPoint, y: TorusPoint) -> ActionReport:
    """``f_y f_x = f_{x'} f_{y'}`` and ``g_x g_y = g_{y'} g_{x'}`` as matrices over Q(λ)."""
    xp, yp = apply_R(x, y)
    left_f = mat_mul(matrix_af(y, LAMBDA), matrix_af(x, LAMBDA))
    right_f = mat_mul(matrix_af(xp, LAMBDA), matrix_af(yp, LAMBDA))
    if not projective_equal(left_f, right_f):
        return ActionReport.fail("A_f(y)A_f(x) ~ A_f(x')A_f(y')", left_f, right_f)
    left_g = mat_mul(matrix_ag(x, LAMBDA), matrix_ag(y, LAMBDA))
    right_g = mat_mul(matrix_ag(yp, LAMBDA), matrix_ag(xp, LAMBDA))
    if not projective_equal(left_g, right_g):
        return ActionReport.fail("A_g(x)A_g(y) ~ A_g(y')A_g(x')", left_g, right_g)
    return ActionReport.ok()


def relation_check_at(x: TorusPoint, y: TorusPoint, lam) -> ActionReport:
    """The plus-family relation with λ specialised to a rational value."""
    lam = Fraction(lam)
    if not lam:
        raise OutsideDomain("λ = 0 is not an admissible parameter")
    xp, yp = apply_R(x, y)
    left = mat_mul(matrix_af(y, lam), matrix_af(x, lam))
    right = mat_mul(matrix_af(xp, lam), matrix_af(yp, lam))
    try:
        same = projective_equal(left, right)
    except ZeroMatrix as exc:
        raise OutsideDomain(f"product vanishes at λ={lam}") from exc
    if not same:
        return ActionReport.fail("A_f(y)A_f(x) ~ A_f(x')A_f(y') at λ", left, right, (lam,))
    return ActionReport.ok()


def transpose_check(z: TorusPoint) -> ActionReport:
    """``A_f(z, λ)^T == A_g(z, λ)`` entrywise."""
    left = matrix_af(z, LAMBDA).transpose()
    right = matrix_ag(z, LAMBDA)
    if left != right:
        return ActionReport.fail("A_f(z)^T = A_g(z)", left, right)
    return ActionReport.ok()
