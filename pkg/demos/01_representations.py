"""The irreducible representations rho^(d) and the generic elements t_i.

Builds the Chevalley matrices, checks the bracket relations, shows that the
generic element t_1 transforms by conjugation, and that words in rho(h) and
rho(e + f) span all d x d matrices.
"""
from sl2conc import chevalley, linalg, t
from sl2conc.matrixcon import is_equivariant, words_span_dim
from sl2conc.sl2 import H_COORDS, PANEL, psi_group, torus

for d in (2, 3, 4):
    E, F, H = chevalley(d)
    print(f"d={d}: E={E}")
    print(f"      F={F}")
    print(f"      H={H}")
    print(f"      [E,F] == H: {linalg.commutator(E, F) == H}")

print("\nPsi(diag(2, 1/2)) for d=3:", psi_group(3, torus(2)))

t1 = t(1, 3, 2)
print("\nt1 for d=3:")
print(t1)
print("t1 equivariant on the 7-element panel:", is_equivariant(t1, PANEL))

print("\nspan of words in rho(h), rho(e+f):")
for d in range(2, 7):
    print(f"  d={d}: {words_span_dim(d, H_COORDS, (-1, 0, 1), 2 * d)} (d^2 = {d * d})")
