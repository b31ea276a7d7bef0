"""Bundle-expression DSL: syntax tree, parser, characters and decomposition."""
from .ast import (BundleExpr, Dual, LinePow, Param, Sum, Sym, Taut, Tensor, Wedge,
                  free_params, substitute, symbols)
from .character import (GradedPieces, character, check_symbols, decompose,
                        irreducible_character, is_split, levi_rank, rank)
from .parser import BundleSyntaxError, parse_bundle

__all__ = [
    "BundleExpr", "BundleSyntaxError", "Dual", "GradedPieces", "LinePow", "Param", "Sum",
    "Sym", "Taut", "Tensor", "Wedge", "character", "check_symbols", "decompose",
    "free_params", "irreducible_character", "is_split", "levi_rank", "parse_bundle",
    "rank", "substitute", "symbols",
]
