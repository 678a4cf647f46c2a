"""Walk through the n = 2 example x = (1, 2), y = (3, 5) step by step."""
from ybx.algebra import LAMBDA, mat_det
from ybx.rmatrix import (
    TorusPoint,
    apply_R,
    delta_k,
    eta,
    g_sums,
    matrix_af,
    matrix_af_inv,
    partial_products,
    phi_map,
)
from ybx.structure import generator_plus, relation_check


def main():
    x, y = TorusPoint.of(1, 2), TorusPoint.of(3, 5)
    print(f"x = {x}, y = {y}, levels {x.level} and {y.level}")
    print(f"Delta_1, Delta_2 = {delta_k(x, y, 1)}, {delta_k(x, y, 2)}; eta = {eta(x, y)}")

    xp, yp = apply_R(x, y)
    print(f"R(x, y) = ({xp}, {yp})")
    print(f"R21 R = 1 on (x, y): {apply_R(yp, xp) == (y, x)}")

    X, Y = partial_products(x), partial_products(y)
    print("G-sums:", ", ".join(str(g) for g in g_sums(X, Y)))

    A = matrix_af(y, x.level)
    print(f"A_f(y, {x.level}) = {A}, det = {mat_det(A)}")
    print(f"closed-form inverse = {matrix_af_inv(y, x.level)}")

    phi = phi_map(Y, partial_products(xp))
    print(f"phi(x') = {tuple(str(v) for v in phi.entries)}, proportional to (1, 1)")

    print(f"plus generator at y: {generator_plus(y)}")
    print(f"det over Q(λ): {mat_det(matrix_af(y, LAMBDA))}")
    print(f"relation holds over Q(λ): {bool(relation_check(x, y))}")


if __name__ == "__main__":
    main()
