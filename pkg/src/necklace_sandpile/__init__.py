"""Aperiodic necklaces, irreducible polynomials over F_p, the groups generated
by the Reutenauer and Golomb bijections, and sandpile groups of the graphs
i -> p i + j on Z_n."""

from .abgroup import AbelianType, PermGroup, generate_group, type_from_order_statistics
from .bijection import (
    BijectionFamily,
    InvariantViolation,
    NormalBasisParam,
    PrimitiveParam,
    enumerate_params,
    golomb_group,
    golomb_map,
    reutenauer_group,
    reutenauer_map,
)
from .circulant import CirculantFp, quotient_group_type, unit_group_order
from .debruijn import (
    MultiDigraph,
    build_gamma,
    closed_form,
    closed_form_doubling,
    closed_form_odd,
    gamma_sandpile,
    laplacian,
    sandpile_group,
)
from .gfpoly import FieldCtx, FieldElem, Poly, enumerate_irreducible, is_irreducible, minimal_polynomial
from .necklace import PERIODIC, Necklace, averaging, canonicalize, count_aperiodic, enumerate_necklaces
from .orbitlab import OrbitReport, averaging_on_orbits, find_main_orbit, flip_extended_orbits, orbit_report
from .zlinalg import SmithForm, cokernel_type, smith_normal_form

__version__ = "0.1.0"
