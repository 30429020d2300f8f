"""Graded dimensions from the character oracle, and spans of generators measured against them."""
from sl2conc import dim_Cd, verify_algebra_generation, verify_module_decomposition
from sl2conc.oracle import dim_Cd_bruteforce

m = 2
print("dim of degree p pieces, m=2 (oracle / brute force):")
for d in (2, 3, 4):
    row = [f"{dim_Cd(m, d, p)}/{dim_Cd_bruteforce(m, d, p)}" for p in range(5)]
    print(f"  d={d}: {'  '.join(row)}")

print("\ngenerators t_i, u_ij I for d=3:")
for r in verify_algebra_generation(2, 3, 4):
    print(f"  p={r.degree}: span {r.span_dim} oracle {r.oracle_dim} -> {r.verdict}")
print("t_i alone for d=3:")
for r in verify_algebra_generation(2, 3, 4, use_u=False):
    print(f"  p={r.degree}: span {r.span_dim} oracle {r.oracle_dim} -> {r.verdict}")

print("\nmodule decomposition for d=4:")
for r in verify_module_decomposition(2, 4, 4):
    print(f"  p={r.degree}: {r.detail['parts']} total {r.span_dim} oracle {r.oracle_dim} -> {r.verdict}")
