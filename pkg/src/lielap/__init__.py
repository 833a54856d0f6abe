"""Exact Laplace spectra on compact Lie groups with certified verdicts.

Groups are products of SU(2) factors and a torus, possibly divided by a
finite central subgroup.  Left-invariant metrics are rational symmetric
tensors; the induced operators on irreducible representations are built
exactly, and every spectral claim (simplicity, separation, multiplicity)
is backed by an integer resultant certificate rather than floating-point
eigenvalues.  Numerics appear only as a cross-check.
"""

from .algebra_core import (
    CentralElement,
    GroupSpec,
    MetricSpec,
    SymTensor,
    build_group_spec,
    embed_factor_tensor,
    identity_tensor,
    is_positive_definite,
    metric_to_tensor,
    preset,
    square_of_vector,
    symmetric_product,
    tensor_from_json,
    tensor_hash,
    tensor_to_json,
)
from .errors import DomainError, WitnessSearchExhausted
from .irreps import (
    Irrep,
    IrrepLabel,
    build_irrep,
    canonical_dual_rep,
    casimir_eigenvalue,
    classify_type,
    descends_to_quotient,
    dual_label,
    format_label,
    is_self_dual,
    label,
    labels_up_to_level,
    parse_label,
    quaternionic_structure,
)
from .operator import (
    NumericSpectrum,
    OperatorMatrix,
    build_DV,
    casimir_tensor,
    eigen_decompose_numeric,
    kronecker_spectrum_check,
)
from .polycert import (
    Certificate,
    CharPoly,
    MultiplicityProfile,
    cert_a,
    cert_b,
    cert_c,
    char_poly_exact,
    char_poly_of,
    multiplicity_profile,
)
from .spectrum import (
    SpectrumEntry,
    SpectrumTable,
    assemble_spectrum,
    enumerate_irreps,
    table_to_csv,
    table_to_json,
    table_to_text,
    verdict_report,
)
from .witness import (
    MixedWitness,
    PairsPipelineReport,
    Su2EvenWitness,
    WitnessReport,
    epsilon_separation,
    pairs_mixed_witness,
    pairs_pipeline,
    sample_definite_tensor,
    su2_even_b_witness,
    witness_search,
)

__version__ = "0.1.0"

__all__ = [
    "CentralElement",
    "Certificate",
    "CharPoly",
    "DomainError",
    "GroupSpec",
    "Irrep",
    "IrrepLabel",
    "MetricSpec",
    "MixedWitness",
    "MultiplicityProfile",
    "NumericSpectrum",
    "OperatorMatrix",
    "PairsPipelineReport",
    "SpectrumEntry",
    "SpectrumTable",
    "Su2EvenWitness",
    "SymTensor",
    "WitnessReport",
    "WitnessSearchExhausted",
    "assemble_spectrum",
    "build_DV",
    "build_group_spec",
    "build_irrep",
    "canonical_dual_rep",
    "casimir_eigenvalue",
    "casimir_tensor",
    "cert_a",
    "cert_b",
    "cert_c",
    "char_poly_exact",
    "char_poly_of",
    "classify_type",
    "descends_to_quotient",
    "dual_label",
    "eigen_decompose_numeric",
    "embed_factor_tensor",
    "enumerate_irreps",
    "epsilon_separation",
    "format_label",
    "identity_tensor",
    "is_positive_definite",
    "is_self_dual",
    "kronecker_spectrum_check",
    "label",
    "labels_up_to_level",
    "metric_to_tensor",
    "multiplicity_profile",
    "pairs_mixed_witness",
    "pairs_pipeline",
    "parse_label",
    "preset",
    "quaternionic_structure",
    "sample_definite_tensor",
    "square_of_vector",
    "su2_even_b_witness",
    "symmetric_product",
    "table_to_csv",
    "table_to_json",
    "table_to_text",
    "tensor_from_json",
    "tensor_hash",
    "tensor_to_json",
    "verdict_report",
    "witness_search",
]
