"""Build the four universal factorizations at genus 3 and read off their invariants.

Each one is a positive factorization of the boundary twist T_δ, so each describes
a Lefschetz fibration with a section of square −1. The signatures differ, and the
differences σ(A)−σ(B) = −6 and σ(C)−σ(D) = 5 do not depend on the genus.
"""
from lefschetz import boundary_power, census, euler_characteristic, signature
from lefschetz.universal import build_universal

for g in (3, 4):
    print(f"genus {g}")
    for kind in "ABCD":
        F = build_universal(kind, g)
        rep = signature(F)
        print(f"  {kind}: r={len(F):4d}  product=T_δ^{boundary_power(F)}  "
              f"chi={euler_characteristic(F):4d}  sigma={rep.signature:5d}  "
              f"irreducible={census(F).irreducible}")
