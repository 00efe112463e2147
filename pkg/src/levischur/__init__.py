"""
Exact-arithmetic Schur superalgebras on the enhanced tensor superspace,
with double-centralizer verification by explicit commutant computation.

The natural entry points:

  * ``Shape(m, n, r, vparity, field)`` fixes all run parameters.
  * ``combinatorics`` holds the sign calculus and orbit enumeration.
  * ``schur_core`` builds the classical action and basis matrices.
  * ``enhanced_core`` builds the enhanced space and the Levi algebra.
  * ``hecke`` builds the layered permutation generators and their image.
  * ``duality`` runs the theorem-level verifications.
  * ``cli`` is the command-line front end (``levischur ...``).
"""

from .combinatorics import Shape
from .linalg import (
    QQ,
    AlgebraSpan,
    ExactMatrix,
    PrimeField,
    SizeCapExceeded,
    algebra_closure,
    commutant,
    in_span,
    span_of,
    spans_equal,
)
from .schur_core import (
    ClassicalDualityReport,
    classical_duality,
    pi_matrix,
    schur_basis,
    structure_constants,
    xi_matrix,
)
from .enhanced_core import (
    BOTTOM,
    LeviBasisElement,
    embed_alpha,
    enh_decode,
    enh_encode,
    levi_basis,
    levi_product,
    rho_bottom,
    rho_levi,
)
from .hecke import (
    LayerGen,
    RelationInstance,
    SwapGen,
    check_relation,
    d_algebra,
    d_layer_algebra,
    eval_word,
    relation_instances,
    xi_gen,
)
from .duality import (
    DualityReport,
    run_duality,
    verify_faithful_layer_action,
    verify_first,
    verify_layer_endos,
    verify_second,
)

__version__ = "0.1.0"

__all__ = [
    "AlgebraSpan",
    "BOTTOM",
    "ClassicalDualityReport",
    "DualityReport",
    "ExactMatrix",
    "LayerGen",
    "LeviBasisElement",
    "PrimeField",
    "QQ",
    "RelationInstance",
    "Shape",
    "SizeCapExceeded",
    "SwapGen",
    "algebra_closure",
    "check_relation",
    "classical_duality",
    "commutant",
    "d_algebra",
    "d_layer_algebra",
    "embed_alpha",
    "enh_decode",
    "enh_encode",
    "eval_word",
    "in_span",
    "levi_basis",
    "levi_product",
    "pi_matrix",
    "relation_instances",
    "rho_bottom",
    "rho_levi",
    "run_duality",
    "schur_basis",
    "span_of",
    "spans_equal",
    "structure_constants",
    "verify_faithful_layer_action",
    "verify_first",
    "verify_layer_endos",
    "verify_second",
    "xi_gen",
    "xi_matrix",
]
