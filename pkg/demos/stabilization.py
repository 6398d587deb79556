"""The stabilization pipeline on two examples.

1. A and B differ by one chain relation. They have different Euler characteristic
   and signature, so hypotheses are relaxed: the compiler trades one copy of B for
   a copy of A (l = 1), and the bookkeeping 10l−9k and −6l+5k closes the gap exactly.
2. A·B and B·A are related by the chain relation applied forward on the first
   block and backward on the second. The two trades cancel, leaving k = l = 0.
"""
from lefschetz import DerivationCertificate, Relation, stable_equivalence
from lefschetz.universal import build_universal

A, B = build_universal("A", 3), build_universal("B", 3)

res = stable_equivalence(A, B, DerivationCertificate([Relation("chain", "fwd", 1)]),
                         enforce_hypotheses=False)
print("A vs B:", res.ledger, f"{len(res.certificate)} moves (replay-verified)")

d = DerivationCertificate([Relation("chain", "fwd", 1), Relation("chain", "bwd", 75)])
res = stable_equivalence(A + B, B + A, d)
print("A·B vs B·A:", res.ledger, "trades", res.trades, f"{len(res.certificate)} moves")
