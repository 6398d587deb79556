"""Move certificates: rotate a central factorization, conjugate it by one of its own
factors, and commute two blocks past each other. Each certificate is replayed."""
from lefschetz import (block_commute_certificate, check_certificate, conjugation_certificate,
                       format_certificate, rotate_certificate)
from lefschetz.universal import build_universal

A, B = build_universal("A", 3), build_universal("B", 3)

G, cert = rotate_certificate(A)
print(f"rotation: {len(cert)} moves, replays: {check_certificate(A, cert, G)}")

j = next(k for k, f in enumerate(A, 1) if f.base == "a5")
G, cert = conjugation_certificate(A, [(j, 1)])
print(f"conjugation by factor {j} (a5): {len(cert)} moves, replays: {check_certificate(A, cert, G)}")
print("first factor after conjugation:", G[0])

cert = block_commute_certificate(A, B)
print(f"A·B -> B·A: {len(cert)} moves, replays: {check_certificate(A + B, cert, B + A)}")
print("certificate head:")
print("".join(format_certificate(cert).splitlines(True)[:4]), end="")
