"""Vanishing prover, Koszul engine and claim ledgers."""
from .claims import (DegreeSpec, Dimension, LedgerError, Vanish, VanishClaim, format_claim,
                     load_ledger, parse_claim, parse_ledger)
from .koszul import (KoszulResult, fano_cotangent_sections, fano_structure_sheaf,
                     koszul_cohomology)
from .prover import (BundleCohomology, ClaimResult, Inconclusive, LedgerReport, Proven, Refuted,
                     Witness, bundle_cohomology, euler_char, vanish_check, verify_ledger)

__all__ = [
    "BundleCohomology", "ClaimResult", "DegreeSpec", "Dimension", "Inconclusive", "KoszulResult",
    "LedgerError", "LedgerReport", "Proven", "Refuted", "Vanish", "VanishClaim", "Witness",
    "bundle_cohomology", "euler_char", "fano_cotangent_sections", "fano_structure_sheaf",
    "format_claim", "koszul_cohomology", "load_ledger", "parse_claim", "parse_ledger",
    "vanish_check", "verify_ledger",
]
