"""Exact computational toolkit for toric difference varieties."""

from .errors import InputError, PreconditionError, ResourceExhausted
from .factorization import factor_int, factor_poly
from .order_bound import OrderBoundReport, jacobi_number, order_bound
from .poly_core import (
    IntPoly,
    NEG_INF,
    RatPoly,
    ResidueElem,
    bezout_qx,
    divrem_qx,
    format_poly,
    gcd_bezout_int,
    gcd_qx,
    parse_poly,
    residue_inverse,
)
from .saturation import (
    SaturationResult,
    SaturationWitness,
    ToricVerdict,
    is_qx_saturated,
    is_toric,
    sat_zx,
    z_factor,
    zx_factor,
)
from .semimodule import (
    Bounds,
    Face,
    FaceSaturationReport,
    MembershipAnswer,
    Semimodule,
    enumerate_faces,
    face_saturated_necessary,
    is_pointed,
    ss_member,
)
from .syzygy_transform import (
    BinomialGen,
    ImplicitResult,
    MonomialMap,
    NotToricError,
    ParametrizeResult,
    implicitize,
    lattice_intersection,
    orth_complement,
    parametrize,
    split_pos_neg,
    syzygy_basis,
)
from .zx_lattice import (
    GHNFBasis,
    LatticeVector,
    Monomial,
    ZxLattice,
    buchberger,
    cmp_monomials,
    grem,
    is_ghnf,
    is_reduced_monomial,
    lattices_equal,
    leading_term,
    member,
    rank,
    s_polynomial,
)

__version__ = "0.1.0"
