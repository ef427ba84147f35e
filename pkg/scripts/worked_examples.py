"""Print the small worked instances: U(F), Delta, j(F)^q, W = Q U^T and the adjugate representation."""

from frobjac import delta, jacobian, parse_map, parse_polynomial, q_exponent, represent_delta_multiple, u_matrix
from frobjac.frobenius import expand_in_powers
from frobjac.polynomial import det_fraction_free
from frobjac.wronskian import c_p_constant, q_matrix, reduced_wronskian

CASES = [
    ("x1 + x2; x1*x2", 2, 2),
    ("x + x^2", 2, 1),
    ("2*x", 3, 1),
    ("x^2", 2, 1),
    ("x1 + x2^3; x2 + x1^2", 3, 2),
]


def show_matrix(M, indent="    "):
    for row in M.to_strings():
        print(indent + "[" + ", ".join(row) + "]")


for text, p, n in CASES:
    F = parse_map(text, p, n)
    q = q_exponent(p, n)
    print(f"F = ({text})  over F_{p}, n = {n}, q = {q}")
    print("  U(F) =")
    show_matrix(u_matrix(F))
    j = jacobian(F)
    print(f"  j(F) = {j};  Delta(F) = {delta(F)};  j(F)^q = {j ** q}")
    asm = reduced_wronskian(F, p)
    print(f"  block sizes s_l = {asm.block_sizes};  det W = {det_fraction_free(asm.W)}"
          f"  (c_p^n = {pow(c_p_constant(p), n, p)})")
    print(f"  W == Q U(F)^T: {asm.W == q_matrix(p, n) @ u_matrix(F).transpose()}")
    g = parse_polynomial("x1", p, n)
    coeffs = represent_delta_multiple(g, F)
    nz = {b: str(c) for b, c in coeffs.items() if c}
    print(f"  Delta(F) * x1 = sum c_b F^b with c = {nz};  re-expands: {expand_in_powers(coeffs, F)}")
    print()
