"""A factorization with one reducible fiber of type (1, 2).

Its separating factor carries a conjugator. Normalization spends one copy of A
per conjugator letter and brings the factorization to s1 followed by
non-separating factors. The signature recipe is applied uniformly and agrees
with Endo's formula here; the report flags it as extrapolated.
"""
from lefschetz import (Factor, Factorization, census, check_certificate, endo_signature,
                       global_conjugate, parse_word, signature)
from lefschetz.braid import rn_braid_parts
from lefschetz.mcg import chain
from lefschetz.stabilize import reducible_normalize
from lefschetz.universal import build_universal

a1, a2, b1, b2 = rn_braid_parts(3, 4)
Fs = (Factorization.from_word(3, chain(*(b1 + b2 + a1))) + Factorization(3, (Factor("s1"),))
      + Factorization.from_word(3, chain(*(a1 + b1 + b2))))
F = global_conjugate(Fs, parse_word("a4^-1 a2"))
rep = signature(F)
print(f"r={len(F)}  sigma={rep.signature}  endo={endo_signature(census(F), 3)}  "
      f"extrapolated={rep.extrapolated}")

N, Ft, Ftp, cert, _, S = reducible_normalize(F, Fs)
A = build_universal("A", 3)
print(f"N={N}; normalized prefix: {[str(f) for f in S]}; "
      f"certificate of {len(cert)} moves replays: {check_certificate(F + A * N, cert, S + Ft)}")
