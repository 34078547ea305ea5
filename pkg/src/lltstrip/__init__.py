"""Horizontal-strip LLT polynomials.

Brute-force Schur expansions from the inversion statistic, the weighted
graph of a horizontal strip, and the cocharge formula valid for
triangle-free graphs.
"""

from .formula import (
    FormalSum,
    PreconditionError,
    TriangleError,
    apply_commute_swap,
    apply_inductive_relation,
    apply_merge_relation,
    cocharge_pi,
    find_inductive_pair,
    formula_expansion,
    formula_from_graph,
    hall_littlewood_expansion,
    merge_identity,
    nested_strip,
    normalize_for_induction,
    path_expansion,
)
from .graph import (
    GraphError,
    WeightedGraph,
    build_graph,
    caterpillar_decompose,
    check_admissible,
    commutes,
    graphs_isomorphic,
    is_triangle_free,
    m_statistic,
    munin_predict,
    realize,
)
from .llt import (
    BudgetExceeded,
    M_total,
    MultiskewTableau,
    attack_pairs,
    brute_force_llt,
    inversions,
    kappa_rotate,
    max_inversion_tableau,
)
from .qschur import (
    PositivityViolation,
    QPoly,
    SchurExpansion,
    format_expansion,
    kostka,
    monomials_to_schur,
    parse_expansion,
    parse_qpoly,
    schur_product_lr,
)
from .shapes import (
    HorizontalStrip,
    Multiskew,
    Row,
    ShapeError,
    SkewShape,
    conjugate_multiskew,
    parse_strip,
    row_shift,
    serialize_strip,
)
from .tableaux import (
    Tableau,
    cocharge,
    cocharge_ij,
    enumerate_ssyt,
    enumerate_ssyt_weight,
    f_statistic,
    jdt_slide,
    parse_tableau,
    rectify,
    restrict_rectify,
)
from .verify import conjecture_fuzz, verify_strip

__version__ = "0.1.0"

__all__ = [
    "__version__",
    "apply_commute_swap",
    "apply_inductive_relation",
    "apply_merge_relation",
    "attack_pairs",
    "brute_force_llt",
    "BudgetExceeded",
    "build_graph",
    "caterpillar_decompose",
    "check_admissible",
    "cocharge",
    "cocharge_ij",
    "cocharge_pi",
    "commutes",
    "conjecture_fuzz",
    "conjugate_multiskew",
    "enumerate_ssyt",
    "enumerate_ssyt_weight",
    "f_statistic",
    "find_inductive_pair",
    "FormalSum",
    "format_expansion",
    "formula_expansion",
    "formula_from_graph",
    "GraphError",
    "graphs_isomorphic",
    "hall_littlewood_expansion",
    "HorizontalStrip",
    "inversions",
    "is_triangle_free",
    "jdt_slide",
    "kappa_rotate",
    "kostka",
    "m_statistic",
    "M_total",
    "max_inversion_tableau",
    "merge_identity",
    "monomials_to_schur",
    "Multiskew",
    "MultiskewTableau",
    "munin_predict",
    "nested_strip",
    "normalize_for_induction",
    "parse_expansion",
    "parse_qpoly",
    "parse_strip",
    "parse_tableau",
    "path_expansion",
    "PositivityViolation",
    "PreconditionError",
    "QPoly",
    "realize",
    "rectify",
    "restrict_rectify",
    "Row",
    "row_shift",
    "schur_product_lr",
    "SchurExpansion",
    "serialize_strip",
    "ShapeError",
    "SkewShape",
    "Tableau",
    "TriangleError",
    "verify_strip",
    "WeightedGraph",
]
