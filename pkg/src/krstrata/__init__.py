"""Index sets, lengths, closure relations and p-ranks of Kottwitz-Rapoport strata."""

__version__ = "0.1.0"

from krstrata.weyl import (  # noqa: E402
    GL,
    GU,
    ExtAffineElement,
    FrobeniusTuple,
    GroupFlavor,
    GSp,
    adjoint_tau,
    in_flavor,
    inverse,
    multiply,
    shift,
)
from krstrata.alcove import (  # noqa: E402
    MonomialLattice,
    PermDatum,
    alcove_of,
    enumerate_perm,
    is_permissible,
    is_permissible_oracle,
    lattice_image,
    standard_alcove,
    verschiebung_to_frobenius,
)
from krstrata.bruhat import (  # noqa: E402
    admissible_set,
    bruhat_leq,
    closure,
    length_im,
    length_word,
    maximal_elements,
)
from krstrata.prank import (  # noqa: E402
    InertUnitaryConfig,
    RamifiedUnitaryConfig,
    SplitUnitaryConfig,
    SymplecticConfig,
    newton_vector,
    prank_sym,
    prank_uni_inert,
    prank_uni_ramified,
    prank_uni_split,
    xprime,
)
from krstrata.reports import (  # noqa: E402
    enumerate_wnr,
    hb_report,
    n_sigma_stats,
    ordinary_density,
    perm0_bijection_check,
    prank0_dimension,
)
