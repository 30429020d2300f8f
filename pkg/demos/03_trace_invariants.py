"""Scalar invariants u, w and the St3 identity, with their normalization constants."""
from sl2conc import check_lemma52, kappa, lemma52_scalar
from sl2conc.matrixcon import HEF, charpoly, evaluate, st3, t, w, w_scale

print(" d  kappa_d  c_d  Alt(w)/E  St3 identity")
for d in range(2, 7):
    ok = check_lemma52(d).is_zero()
    print(f"{d:2d}  {kappa(d)!s:7s}  {lemma52_scalar(d):3d}  {w_scale(d)!s:8s}  {ok}")

print("\nd=2 at (h, e, f): St3 =", evaluate(st3(1, 2, 3, 2, 3), HEF), " w =", evaluate(w(1, 2, 3, 2, 3), HEF))

print("\ncharacteristic polynomial of t1 for d=3, lowest coefficient first:")
for k, c in enumerate(charpoly(t(1, 3, 1))):
    print(f"  lambda^{k}: {c}")
