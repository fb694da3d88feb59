"""A non-compact operator that Phi kills in one step.

phi(z) = (0, z_1) sends z_2^s to z_1^s, so C_phi is an isometry on the powers of
z_2 and far from compact.  Still, Phi(C_phi) = 0 exactly: C_phi is uniformly
asymptotically Toeplitz with symbol 0.
"""
from hardy_toeplitz.basis import enumerate_basis
from hardy_toeplitz.diagnostics import uat_sequence
from hardy_toeplitz.operators import apply, coefficient_vector, composition_op, vector_norm_sq
from hardy_toeplitz.phi import phi_apply
from hardy_toeplitz.symbols import PolySelfMap

B = enumerate_basis(2, 8)
C = composition_op(PolySelfMap(2, [{}, {(1, 0): 1}]), B)

print("norms of z_2^s before and after C_phi (exact):")
for s in range(5):
    x = coefficient_vector({(0, s): 1}, B)
    print(f"  s={s}: ||z_2^s||^2 = {vector_norm_sq(x, B)}, ||C_phi z_2^s||^2 = {vector_norm_sq(apply(C, x), B)}")

P = phi_apply(C)
print("Phi(C_phi) is zero on its valid block:", all(v == 0 for v in P.block().ravel()))

report = uat_sequence(C, 4)
print("verdict:", report.verdict)
print("series:", [(m, round(v, 12)) for m, v in report.series])
