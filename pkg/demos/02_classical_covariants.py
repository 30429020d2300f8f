"""Joint covariants of binary quadratic forms and their two relations."""
from sl2conc import check_syzygy_FJ, check_syzygy_JJ, det_E, disc_D, form_F, glm_act, jac_J
from sl2conc.classical import check_covariance
from sl2conc.sl2 import PANEL

m = 3
for name, G in [("F1", form_F(1, m)), ("D12", disc_D(1, 2, m)), ("E123", det_E(1, 2, 3, m)), ("J12", jac_J(1, 2, m))]:
    covariant = all(check_covariance(G, g).is_zero() for g in PANEL)
    print(f"{name:5s} order={G.order} degree={G.degree} covariant={covariant}")
    print(f"      {G}")

print("\nF1 J23 - F2 J13 + F3 J12 =", check_syzygy_FJ() or 0)
print("J12 J34 - (D13 F2 F4 + D24 F1 F3 - D14 F2 F3 - D23 F1 F4) =", check_syzygy_JJ() or 0)
print("with the opposite overall sign the residual is 2 J12 J34:")
print("  ", check_syzygy_JJ(literal=True) == (jac_J(1, 2, 4) * jac_J(3, 4, 4)).poly * 2)

print("\nGL_2 acts on slots; diag(2, 3) scales F1^2 J12 by 2^3 * 3:")
G = form_F(1, 2) ** 2 * jac_J(1, 2, 2)
print("  ", glm_act(G, [[2, 0], [0, 3]]) == G * 24)
