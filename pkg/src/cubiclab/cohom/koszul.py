"""Cohomology of zero loci through the Koszul resolution.

For a regular section of a rank-r bundle V with zero locus Z, the complex
``Wedge^r(V^*) -> ... -> V^* -> O`` resolves O_Z. Tensoring by a coefficient
bundle C gives a spectral sequence with E1 entries H^q(Wedge^j(V^*) (x) C)
in column -j, converging to H^(q-j)(Z, C|_Z).
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, List, Tuple

from ..bbw import CohomTable, Space, Status
from ..bundles import BundleExpr, Dual, LinePow, Taut, Tensor, Wedge, parse_bundle, rank
from .prover import bundle_cohomology, euler_char


@dataclass(frozen=True)
class KoszulResult:
    """Cohomology of ``coeff`` restricted to the zero locus.

    ``table`` holds exact values where ``degree_status`` says EXACT and
    upper bounds elsewhere. ``contributions`` maps each degree to the E1
    entries (j, q, dim) sitting on its antidiagonal q - j = degree.
    """

    table: CohomTable
    degree_status: Dict[int, Status]
    contributions: Dict[int, Tuple[Tuple[int, int, int], ...]]
    e1: Dict[Tuple[int, int], int]
    euler: int
    zero_locus_dim: int

    @property
    def status(self) -> Status:
        if all(s is Status.EXACT for s in self.degree_status.values()):
            return Status.EXACT
        return Status.UPPER_BOUND

    def value(self, degree: int) -> Tuple[int, Status]:
        return self.table[degree], self.degree_status.get(degree, Status.EXACT)

    def to_json(self) -> dict:
        return {
            "zero_locus_dim": self.zero_locus_dim,
            "h": {str(k): self.table[k] for k in range(self.zero_locus_dim + 1)},
            "status": {str(k): v.value for k, v in sorted(self.degree_status.items())},
            "contributions": {str(k): [list(c) for c in v] for k, v in sorted(self.contributions.items())},
            "euler": self.euler,
        }


def resolution_term(section_bundle: BundleExpr, coeff: BundleExpr, j: int) -> BundleExpr:
    wedge = Wedge(j, Dual(section_bundle))
    return wedge if coeff is None or coeff == LinePow("O", 0) else Tensor((wedge, coeff))


def koszul_cohomology(space: Space, section_bundle: BundleExpr, coeff: BundleExpr = None) -> KoszulResult:
    r = rank(section_bundle, space)
    if r > space.dim:
        raise ValueError(f"section bundle of rank {r} exceeds dim {space.dim} of {space}")
    top = space.dim - r
    e1: Dict[Tuple[int, int], int] = {}
    exact_terms = True
    euler = 0
    for j in range(r + 1):
        term = resolution_term(section_bundle, coeff, j)
        coh = bundle_cohomology(term, space)
        exact_terms &= coh.table.status is Status.EXACT
        for q, d in coh.table.dims.items():
            e1[(j, q)] = d
        euler += (-1) ** j * euler_char(term, space)

    def partners(j: int, q: int) -> List[Tuple[int, int]]:
        # d_s leaves (j, q) towards (j - s, q - s + 1) and arrives from (j + s, q + s - 1).
        out = [(j - s, q - s + 1) for s in range(1, j + 1)]
        out += [(j + s, q + s - 1) for s in range(1, r - j + 1)]
        return out

    dims: Dict[int, int] = {}
    status: Dict[int, Status] = {}
    contributions: Dict[int, Tuple[Tuple[int, int, int], ...]] = {}
    for k in range(top + 1):
        entries = tuple(sorted((j, q, d) for (j, q), d in e1.items() if q - j == k))
        contributions[k] = entries
        dims[k] = sum(d for _, _, d in entries)
        isolated = all(not e1.get(p) for j, q, _ in entries for p in partners(j, q))
        status[k] = Status.EXACT if (not entries or (isolated and exact_terms)) else Status.UPPER_BOUND
    table = CohomTable(dims, Status.EXACT if all(s is Status.EXACT for s in status.values())
                       else Status.UPPER_BOUND)
    return KoszulResult(table, status, contributions, e1, euler, top)


# -- Fano varieties of lines -----------------------------------------------------------

SECTION = parse_bundle("Sym3(Q)")


def fano_structure_sheaf(n: int) -> KoszulResult:
    """h^q(O_F) for the lines on a smooth cubic hypersurface in P^(n-1)."""
    return koszul_cohomology(Space.grassmannian(n), SECTION)


def fano_cotangent_sections(n: int) -> Tuple[int, Status]:
    """h^0(Omega^1_F) from the conormal sequence 0 -> E|F -> Omega_G|F -> Omega_F -> 0.

    H^0(Omega_G|F) -> H^0(Omega_F) -> H^1(E|F) is exact, so both outer
    groups vanishing forces h^0(Omega_F) = 0. Otherwise only a bound is known.
    """
    g = Space.grassmannian(n)
    ambient, s1 = koszul_cohomology(g, SECTION, Taut("Omega")).value(0)
    conormal, s2 = koszul_cohomology(g, SECTION, Taut("E")).value(1)
    exact = s1 is Status.EXACT and s2 is Status.EXACT and ambient == 0 and conormal == 0
    return ambient + conormal, Status.EXACT if exact else Status.UPPER_BOUND
