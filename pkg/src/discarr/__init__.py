"""Exact computation with discriminantal arrangements.

Everything runs over arbitrary-precision rationals: arrangement genericity,
the discriminantal construction, characteristic polynomials and cone counts
(three independent algorithms), the Dilworth-matroid very-genericity test,
the concurrency lattices P(n,k) and C(n,k), and cone-facet versus
simplex-cell analysis through an exact simplex LP.
"""

from .arrangement import (
    Arrangement,
    ConcurrencyReport,
    NotGenericError,
    ParseError,
    concurrency_report,
    is_generic,
    normals_generic,
    parse,
    serialize,
)
from .charpoly import (
    CharPoly,
    char_poly_via_flats,
    count_cones,
    count_cones_deletion_restriction,
    kernel_backend,
    whitney_char_poly,
)
from .conegeom import (
    CorrespondenceRecord,
    OnHyperplaneError,
    SimplexCell,
    correspondence_report,
    is_facet,
    render_svg,
    sign_vector,
    simplex_cells,
)
from .discriminantal import DiscArrangement, build_disc, disc_row, subsets_lex
from .exactmath import (
    DimensionError,
    Matrix,
    SingularMatrixError,
    cayley_orthogonal,
    det,
    minor,
    nullspace,
    rank,
    rat,
    rat_str,
)
from .fixtures import Fixture, load_fixture
from .lattice import (
    Poset,
    base_collection,
    closure,
    concurrency_sets,
    delta,
    enumerate_C,
    enumerate_P,
    flats_lattice,
    in_P,
    p_char_poly,
    p_flats_isomorphism,
    p_order,
    psi,
    sigma,
)
from .lp import lp_strict_feasible, lp_strict_point
from .matroid import (
    DiscRankOracle,
    VeryGenericCertificate,
    dilworth_independent,
    dilworth_rank,
    find_sdr,
    is_very_generic,
    uniform_circuits,
)

__version__ = "0.1.0"
