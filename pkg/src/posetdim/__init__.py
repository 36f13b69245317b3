"""Order dimension of finite posets and multipartite posets."""
from .bounds import (
    B_of,
    BoundReport,
    FmEnvelope,
    bound_report,
    fm_envelope,
    gap_class_plan,
    pair_dimensions,
    proof_display_sum,
    remark_incomparable_count,
    sum_bound_realizer,
    theorem_bound_formula,
    theorem_bound_realizer,
)
from .constructions import (
    Matching,
    complete_minus_matching,
    lemma4_realizer,
    lower_bound_family,
    random_matching,
    random_multipartite,
    random_poset,
    stacked_standard,
    standard_example,
    subset_poset,
)
from .multipartite import BipartitePoset, MultipartitePoset, derive_levels, new_multipartite
from .poset import (
    LinearOrder,
    Poset,
    concat,
    delete,
    extend_linear_order,
    is_isomorphic,
    is_linear_extension,
    new_poset,
    reverse,
)
from .solver import (
    Certificate,
    DimensionResult,
    Realizer,
    embed,
    exact_dimension,
    greedy_dimension_upper_bound,
    is_realizer,
)

__version__ = "0.1.0"
