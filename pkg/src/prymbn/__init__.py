"""Exact enumerative invariants of pointed Prym-Brill-Noether loci."""

__version__ = "0.1.0"

from .exactring import TruncatedPoly, exp_scaled_xi, poincare_degree  # noqa: E402
from .tableaux import (  # noqa: E402
    ShiftedTableau,
    StrictPartition,
    count_marked_unmarked_diagonal,
    count_sst_bruteforce,
    count_sst_formula,
    count_syt_staircase,
    enumerate_sst,
    render_tableau,
    shifted_diagram,
)
from .prym import (  # noqa: E402
    PrymClass,
    VanishingSequence,
    beta,
    class_B_closed,
    degree_B,
    general_nonempty,
    n_a,
    prym_tyurin_exponent,
    verify_identities,
)
from .pfaffian import AntisymmetricMatrix, class_B_pfaffian, pfaffian, q_entry  # noqa: E402
