"""Exact ideal-lattice computations for finite commutative rings, with a
focus on strongly hollow and strongly irreducible ideals."""

from .errors import *  # noqa: F401,F403
from .ring import FiniteRing, check_ring_axioms, make_product, make_ring, make_structure_constants, make_zmod
from .poly import find_irreducible_poly, make_poly_quotient
from .lattice import (
    Ideal,
    IdealLattice,
    LatticeSummary,
    classify_ideal,
    colon,
    combine,
    enumerate_ideals,
    ideal_span,
    lattice_summary,
    principal_ideal,
    ring_flags,
)
from .quotient import RingHom, hom_image, hom_preimage, localize_at_maximal, make_quotient
from .hollow import (
    GcdResult,
    HollowProfile,
    IrreducibilityProfile,
    bijection_maps,
    gcd_ideal,
    greatest_not_containing,
    hollow_profile,
    irreducibility_profile,
    is_small_in,
    least_not_contained_in,
    maximal_sh_under,
    satisfies_star,
)
from .vspace import FinVectorSpace, m_mod_m2, split_scan, vs_split
from .corpus import CorpusSpec, LatticeCache, build_corpus, parse_ring
from .checks import REGISTRY, RingContext, TheoremCheck
from .verify import VerificationReport, replay, run_check, run_suite, search_counterexample
from .export import export_lattice

__version__ = "0.1.0"
