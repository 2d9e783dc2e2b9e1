"""Exact coincidence indices of the hypercubic lattice Z^n."""

from .indices import (
    CoprimalityViolated,
    IndexReport,
    index_closed_form,
    index_coprime_product,
    index_fortes,
    index_reflection,
    palindrome_factors,
)
from .isometry import (
    NotOrthogonal,
    RationalIsometry,
    ReflectionAxis,
    compose,
    from_rational_matrix,
    identity_isometry,
    random_corpus,
    random_isometry,
    reflection,
    transpose_inverse,
)
from .matrices import (
    IntMatrix,
    RatMatrix,
    det,
    format_int_matrix,
    format_rat_matrix,
    gcd_entries,
    mat_mul,
    minors_gcd,
    parse_int_matrix,
    parse_rat_matrix,
)
from .normalform import (
    HermiteForm,
    SmithDecomposition,
    hermite_normal_form,
    invariant_factors,
    smith_normal_form,
)
from .oracle import (
    CapExceeded,
    IntersectionBasis,
    index_by_counting,
    index_by_hnf,
    intersection_hnf,
)
from .spectrum import (
    IndexWitness,
    SquareWitness,
    WitnessNotFound,
    coprime_witness,
    four_square_odd_decompose,
    is_three_square_excluded,
    reflection_spectrum,
    three_square_decompose,
)

__version__ = "0.1.0"

__all__ = [
    "CapExceeded",
    "CoprimalityViolated",
    "HermiteForm",
    "IndexReport",
    "IndexWitness",
    "IntMatrix",
    "IntersectionBasis",
    "NotOrthogonal",
    "RatMatrix",
    "RationalIsometry",
    "ReflectionAxis",
    "SmithDecomposition",
    "SquareWitness",
    "WitnessNotFound",
    "compose",
    "coprime_witness",
    "det",
    "format_int_matrix",
    "format_rat_matrix",
    "four_square_odd_decompose",
    "from_rational_matrix",
    "gcd_entries",
    "hermite_normal_form",
    "identity_isometry",
    "index_by_counting",
    "index_by_hnf",
    "index_closed_form",
    "index_coprime_product",
    "index_fortes",
    "index_reflection",
    "intersection_hnf",
    "invariant_factors",
    "is_three_square_excluded",
    "mat_mul",
    "minors_gcd",
    "palindrome_factors",
    "parse_int_matrix",
    "parse_rat_matrix",
    "random_corpus",
    "random_isometry",
    "reflection",
    "reflection_spectrum",
    "smith_normal_form",
    "three_square_decompose",
    "transpose_inverse",
]
