"""Decision procedures for first-order linear difference equations over C(x).

The operator sigma is the shift x -> x + 1 or the dilation x -> q x.  The
package decides summability f = sigma(g) - g, product forms
a = c x^n sigma(g)/g, additive and multiplicative dependence, and the
differential algebraicity of solutions, always returning certificates
that can be checked by substitution.
"""

from .certificate import Certificate
from .dependence import (
    GroupDescriptor,
    additive_dependence,
    classify_diagonal,
    classify_mixed,
    classify_unipotent,
    galois_rank_one_add,
    galois_rank_one_mult,
    multiplicative_dependence,
    transcendence_degree,
)
from .diffalg import (
    Verdict,
    diff_transcendence_additive,
    diff_transcendence_mult,
    ogawara_classify,
    parametrized_telescoper,
)
from .diffops import DifferenceOperator, SystemMatrix, apply_derivation, apply_sigma, iterate_matrix
from .multiplicative import ProductForm, gp_normal_form, is_ratio, minimal_torsion, product_decompose
from .ratcore import QQ, ConstField, Poly, QQq, RatFun
from .summability import (
    ObstructionBasis,
    ReducedForm,
    is_summable,
    obstruction_vector,
    reduce,
)

__all__ = [
    "QQ", "QQq", "Certificate", "ConstField", "DifferenceOperator", "GroupDescriptor",
    "ObstructionBasis", "Poly", "ProductForm", "RatFun", "ReducedForm", "SystemMatrix",
    "Verdict", "additive_dependence", "apply_derivation", "apply_sigma", "classify_diagonal",
    "classify_mixed", "classify_unipotent", "diff_transcendence_additive",
    "diff_transcendence_mult", "galois_rank_one_add", "galois_rank_one_mult",
    "gp_normal_form", "is_ratio", "is_summable", "iterate_matrix", "minimal_torsion",
    "multiplicative_dependence", "obstruction_vector", "ogawara_classify",
    "parametrized_telescoper", "product_decompose", "reduce", "transcendence_degree",
]
