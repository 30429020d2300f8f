"""Isotypic blocks of d x d matrices and the transfer to binary form covariants."""
from sl2conc import form_F, isotypic_basis, jac_J, phi, project, t
from sl2conc.cg import block_support
from sl2conc.matrixcon import commutator_t, proportionality

for d in range(2, 6):
    print(f"d={d}: block sizes {isotypic_basis(d).block_sizes()}")

d, m = 4, 2
t1 = t(1, d, m)
print(f"\nd={d}, m={m}")
for s in (1, 2, 3):
    top = t1**s
    G = t1 ** (s - 1) * commutator_t(1, 2, d, m)
    print(f"s={s}: blocks of t1^s {block_support(top)}, of t1^(s-1)[t1,t2] {block_support(G)}")
    a = proportionality(phi(project(top, s), s), form_F(1, m) ** s)
    b = proportionality(phi(project(G, s), s), form_F(1, m) ** (s - 1) * jac_J(1, 2, m))
    print(f"     phi(top block) = {a} * F1^{s},  = {b} * F1^{s - 1} J12")
