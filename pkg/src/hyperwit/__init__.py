"""Exact tools for hypergraph states: construction, geometric entanglement,
measurement-based reductions, and entanglement witnesses."""

from .campaign import (
    CampaignReport,
    CampaignRow,
    ReductionAuditReport,
    ReductionAuditRow,
    lower_bound_campaign,
    random_connected_hypergraph,
    reduction_audit,
)
from .entanglement import (
    EntanglementReport,
    LowerBoundReport,
    ProcedureReport,
    ProcedureRow,
    SchmidtSpectrum,
    StructureReport,
    alpha_bipartite,
    alpha_multipartite,
    closed_form_E,
    closed_form_alpha,
    infinity_norm,
    lower_bound_check,
    predicted_gram,
    procedure_alpha,
    reduced_density_matrix,
    reduced_structure_check,
    schmidt,
)
from .hypergraph import (
    Bipartition,
    Edge,
    Family,
    Hypergraph,
    build_family,
    canonicalize,
    crossing_edges,
    detect_family,
    enumerate_bipartitions,
    format_hypergraph,
    is_connected,
    max_cardinality,
    parse_hypergraph,
    permute_vertices,
    toggle_edges,
)
from .locc import (
    BranchRecord,
    LoccReductionError,
    LoccValidationError,
    ReductionCertificate,
    ReductionStep,
    StepKind,
    bipartition_after_measurement,
    pauli_x_toggle,
    pauli_z_toggle,
    reduce,
    remove_non_crossing,
    z_measure,
)
from .measurement import (
    PauliString,
    SettingMode,
    canonical_settings,
    decompose_stabilizer_product,
    exact_min_settings,
    family_projector_count,
    greedy_min_settings,
    product_setting_count,
    projector_strings,
    stabilizer_strings,
    witness_setting_count,
    witness_settings,
)
from .states import (
    SignState,
    apply_controlled_z,
    apply_stabilizer,
    apply_x,
    apply_z,
    basis_state,
    build_state,
    extract_hypergraph,
    is_permutation_invariant,
    overlap,
    plus_state,
    projector_identity_check,
)
from .witness import (
    NoisyState,
    RobustnessRow,
    WitnessKind,
    WitnessSpec,
    biseparable_audit,
    default_alpha,
    dense_expectation,
    expectation,
    feasibility_check,
    optimal_beta,
    projector_witness,
    robustness_table,
    stabilizer_witness,
)

__version__ = "0.1.0"

__all__ = [
    "Bipartition",
    "BranchRecord",
    "CampaignReport",
    "CampaignRow",
    "Edge",
    "EntanglementReport",
    "Family",
    "Hypergraph",
    "LoccReductionError",
    "LoccValidationError",
    "LowerBoundReport",
    "NoisyState",
    "PauliString",
    "ProcedureReport",
    "ProcedureRow",
    "ReductionAuditReport",
    "ReductionAuditRow",
    "ReductionCertificate",
    "ReductionStep",
    "RobustnessRow",
    "SchmidtSpectrum",
    "SettingMode",
    "SignState",
    "StepKind",
    "StructureReport",
    "WitnessKind",
    "WitnessSpec",
    "alpha_bipartite",
    "alpha_multipartite",
    "apply_controlled_z",
    "apply_stabilizer",
    "apply_x",
    "apply_z",
    "basis_state",
    "bipartition_after_measurement",
    "biseparable_audit",
    "build_family",
    "build_state",
    "canonical_settings",
    "canonicalize",
    "closed_form_E",
    "closed_form_alpha",
    "crossing_edges",
    "decompose_stabilizer_product",
    "default_alpha",
    "dense_expectation",
    "detect_family",
    "enumerate_bipartitions",
    "exact_min_settings",
    "expectation",
    "extract_hypergraph",
    "family_projector_count",
    "feasibility_check",
    "format_hypergraph",
    "greedy_min_settings",
    "infinity_norm",
    "is_connected",
    "is_permutation_invariant",
    "lower_bound_campaign",
    "lower_bound_check",
    "max_cardinality",
    "optimal_beta",
    "overlap",
    "parse_hypergraph",
    "pauli_x_toggle",
    "pauli_z_toggle",
    "permute_vertices",
    "plus_state",
    "predicted_gram",
    "procedure_alpha",
    "product_setting_count",
    "projector_identity_check",
    "projector_strings",
    "projector_witness",
    "random_connected_hypergraph",
    "reduce",
    "reduced_density_matrix",
    "reduced_structure_check",
    "reduction_audit",
    "remove_non_crossing",
    "robustness_table",
    "schmidt",
    "stabilizer_strings",
    "stabilizer_witness",
    "toggle_edges",
    "witness_setting_count",
    "witness_settings",
    "z_measure",
]
