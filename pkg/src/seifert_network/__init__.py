"""Seifert surgeries on torus knots and the network of twists between them."""
from .catalog import Catalog, Seiferter, SeiferterKind, catalog_lookup, default_catalog
from .classifier import (
    classify_surgery,
    classify_torus_surgery,
    classify_unknot_surgery,
    degenerate_description,
    homology_order,
    surgered_invariants,
)
from .errors import *  # noqa: F401,F403
from .kernels import BACKEND
from .knots import (
    UNKNOT,
    DerivedKnot,
    NamedKnot,
    SeifertSurgery,
    TorusKnotId,
    TwistStep,
    canonical_torus_knot,
    parse_surgery,
    spreader_conjecture_predicate,
)
from .network import (
    NetworkGraph,
    add_seiferter_line,
    build_figure2,
    build_subcomplex_t,
    export_graph,
    find_path_to_t,
    import_graph,
)
from .sfs import (
    ConnectedSumLens,
    Lens,
    LensSpace,
    Prism,
    SeifertInvariants,
    SmallSFS,
    euler_number,
    first_homology_order,
    lens_equivalent,
    normalize,
    reverse_orientation,
    sfs_homeo_equivalent,
    to_lens_parameters,
)
from .twist import (
    basic_twist,
    linking_obstruction,
    m_equivalence_basic_candidates,
    twist_along_seiferter,
    twist_sequence,
)

__version__ = "0.1.0"
