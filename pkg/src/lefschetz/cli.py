"""Command-line entry point: ``lefschetz <subcommand> ...``.

Exit codes: 0 pass, 1 a check failed, 2 usage or parse error.
The word-length cap is read from ``LEFSCHETZ_WORD_CAP``.
"""
from __future__ import annotations

import argparse
import sys

from .factorization import IllegalMove, replay
from .freegroup import WordLengthError
from .invariants import census, endo_signature, euler_characteristic, section_square, signature
from .mcg import failing_relators, mcg_equal, parse_word, twist_table
from .stabilize import HypothesisError, LedgerContradiction, stable_equivalence
from .textio import (ParseError, format_certificate, format_factorization, format_report,
                     parse_certificate, parse_derivation, parse_factorization)
from .universal import KINDS, build_universal

# σ of the four universal fibrations at genus 3
GOLDEN_SIGNATURES = {"A": -48, "B": -42, "C": -35, "D": -40}


class CheckFailed(Exception):
    pass


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def _write(path: str | None, text: str, out) -> None:
    if path is None or path == "-":
        out.write(text)
    else:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)


def cmd_build(args, out) -> int:
    F = build_universal(args.kind, args.genus, args.n)
    _write(args.output, format_factorization(F), out)
    return 0


def invariants_report(F) -> list[tuple[str, object]]:
    rep = signature(F)
    cen = census(F)
    items = [("genus", F.genus), ("factors", len(F)), ("chi", euler_characteristic(F)),
             ("sigma", rep.signature), ("section", section_square(F)),
             ("irreducible", cen.irreducible)]
    for h, s in cen.separating.items():
        items.append((f"separating type {h}", s))
    items.append(("kernel rank", rep.kernel_rank))
    items.append(("form rank", rep.form_rank))
    if rep.extrapolated:
        items.append(("sigma status", "recipe-extrapolated"))
        try:
            items.append(("endo reference", endo_signature(cen, F.genus)))
        except ValueError:
            pass
    return items


def cmd_invariants(args, out) -> int:
    F = parse_factorization(_read(args.file))
    try:
        items = invariants_report(F)
    except ValueError as e:
        raise CheckFailed(str(e)) from None
    out.write(format_report(items))
    return 0


def cmd_equal(args, out) -> int:
    try:
        w1, w2 = parse_word(args.word1, args.genus), parse_word(args.word2, args.genus)
    except ValueError as e:
        raise ParseError(0, str(e)) from None
    if mcg_equal(w1, w2, twist_table(args.genus)):
        out.write("equal\n")
        return 0
    out.write("not equal\n")
    return 1


def cmd_check_cert(args, out) -> int:
    start = parse_factorization(_read(args.start))
    cert = parse_certificate(_read(args.certificate))
    end = parse_factorization(_read(args.end))
    if start.genus != end.genus:
        raise CheckFailed("start and end have different genus")
    try:
        got = replay(start, cert)
    except IllegalMove as e:
        raise CheckFailed(f"illegal move at {e}") from None
    want = end.twists()
    if len(got) != len(want):
        raise CheckFailed(f"replay gives {len(got)} factors, expected {len(want)}")
    for i, (a, b) in enumerate(zip(got, want), 1):
        if a != b:
            raise CheckFailed(f"factor {i} differs after replay")
    out.write(f"pass: {len(cert)} moves replay to the end factorization\n")
    return 0


def cmd_stabilize(args, out) -> int:
    F = parse_factorization(_read(args.start))
    Fp = parse_factorization(_read(args.end))
    d = parse_derivation(_read(args.derivation))
    try:
        res = stable_equivalence(F, Fp, d, enforce_hypotheses=not args.no_hypotheses)
    except (HypothesisError, LedgerContradiction, IllegalMove, ValueError) as e:
        raise CheckFailed(str(e)) from None
    L = res.ledger
    out.write(format_report([("n", L.n), ("A", L.a), ("B", L.b), ("C", L.c), ("D", L.d),
                             ("k", L.k), ("l", L.l), ("N", L.N),
                             ("moves", len(res.certificate)), ("verified", "yes")]))
    if args.certificate_out:
        _write(args.certificate_out, format_certificate(res.certificate), out)
    if args.start_out:
        _write(args.start_out, format_factorization(res.start), out)
    if args.end_out:
        _write(args.end_out, format_factorization(res.end), out)
    return 0


def selftest_items(g: int):
    """(name, ok, detail) for the relator and golden-number suites."""
    bad = failing_relators(g)
    yield "relators", not bad, ", ".join(bad) or "all hold"
    if g < 3:
        return
    U = {k: build_universal(k, g) for k in "ABCD"}
    for k, F in U.items():
        yield f"product {k}", section_square(F) == -1, f"section {section_square(F)}"
    sig = {k: signature(F).signature for k, F in U.items()}
    if g == 3:
        for k, want in GOLDEN_SIGNATURES.items():
            yield f"sigma {k}", sig[k] == want, f"{sig[k]} (expected {want})"
    yield "sigma A-B", sig["A"] - sig["B"] == -6, str(sig["A"] - sig["B"])
    yield "sigma C-D", sig["C"] - sig["D"] == 5, str(sig["C"] - sig["D"])
    yield "count A-B", len(U["A"]) - len(U["B"]) == 10, str(len(U["A"]) - len(U["B"]))
    yield "count D-C", len(U["D"]) - len(U["C"]) == 9, str(len(U["D"]) - len(U["C"]))
    H = build_universal("H", g)
    sH, eH = signature(H).signature, endo_signature(census(H), g)
    yield "endo hyperelliptic", sH == eH == -4 * g * (g + 1), f"{sH} vs {eH}"


def cmd_selftest(args, out) -> int:
    first_bad = None
    for name, ok, detail in selftest_items(args.genus):
        out.write(f"{'pass' if ok else 'FAIL'} {name}: {detail}\n")
        if not ok and first_bad is None:
            first_bad = name
    if first_bad:
        raise CheckFailed(f"first failing item: {first_bad}")
    out.write("pass\n")
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="lefschetz",
                                description="Exact tools for positive factorizations in Map_{g,1}.")
    sub = p.add_subparsers(dest="command", required=True)

    b = sub.add_parser("build", help="write a universal factorization")
    b.add_argument("kind", choices=KINDS + ("Hyperelliptic",))
    b.add_argument("--genus", "-g", type=int, required=True)
    b.add_argument("--n", type=int, default=None, help="n for kind Rn")
    b.add_argument("--output", "-o", default=None)
    b.set_defaults(func=cmd_build)

    i = sub.add_parser("invariants", help="print chi, sigma, census and section square")
    i.add_argument("file", nargs="?", default="-")
    i.set_defaults(func=cmd_invariants)

    e = sub.add_parser("equal", help="decide equality of two mapping class words")
    e.add_argument("word1")
    e.add_argument("word2")
    e.add_argument("--genus", "-g", type=int, required=True)
    e.set_defaults(func=cmd_equal)

    c = sub.add_parser("check-cert", help="replay a move certificate")
    c.add_argument("start")
    c.add_argument("certificate")
    c.add_argument("end")
    c.set_defaults(func=cmd_check_cert)

    s = sub.add_parser("stabilize", help="compile a derivation into a stabilized certificate")
    s.add_argument("start")
    s.add_argument("end")
    s.add_argument("derivation")
    s.add_argument("--no-hypotheses", action="store_true",
                   help="allow inputs with different chi or sigma (trades absorb the gap)")
    s.add_argument("--certificate-out", default=None)
    s.add_argument("--start-out", default=None, help="write the padded start factorization")
    s.add_argument("--end-out", default=None, help="write the padded end factorization")
    s.set_defaults(func=cmd_stabilize)

    t = sub.add_parser("selftest", help="run the relator and golden-number suites")
    t.add_argument("--genus", "-g", type=int, default=3)
    t.set_defaults(func=cmd_selftest)
    return p


def run(argv=None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)
    try:
        return args.func(args, out)
    except ParseError as e:
        err.write(f"parse error: {e}\n")
        return 2
    except (OSError, ValueError) as e:
        err.write(f"error: {e}\n")
        return 2
    except (CheckFailed, WordLengthError) as e:
        err.write(f"failed: {e}\n")
        return 1


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
