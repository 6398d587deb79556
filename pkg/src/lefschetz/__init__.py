"""Exact workbench for positive factorizations in the mapping class group Map_{g,1}."""
from .braid import BraidWord, braid_equal, full_twist, rn_braid_parts
from .factorization import (Factor, Factorization, GlobalConj, HurwitzL, HurwitzR, IllegalMove,
                            MoveCertificate, Subst, block_commute_certificate, boundary_power,
                            check_certificate, conjugation_certificate, factor_equal,
                            factorizations_equal, global_conjugate, hurwitz_left, hurwitz_right,
                            product, rotate_certificate)
from .freegroup import Automorphism, WordLengthError, compose, reduce_word
from .invariants import (FiberCensus, SignatureReport, census, endo_signature,
                         euler_characteristic, section_square, signature)
from .mcg import TwistTable, detect_boundary_power, mcg_equal, mcg_to_auto, parse_word, twist_table
from .stabilize import (DerivationCertificate, HypothesisError, LedgerContradiction, PairCancel,
                        PairCreate, Relation, StabilizationLedger, bounded_search,
                        compile_positive, simplify, stable_equivalence, trade_ledger)
from .textio import (ParseError, format_certificate, format_factorization, parse_certificate,
                     parse_derivation, parse_factorization)
from .universal import build_Ai, build_universal, fiber_sum

__version__ = "0.1.0"
