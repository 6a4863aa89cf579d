"""toughgraph: nonhamiltonian graphs of prescribed rational toughness.

For every rational t with 0 < t < 9/4, synthesize() produces a graph
whose toughness is exactly t and which has no Hamilton cycle, along
with a certificate that check_certificate() can confirm independently.
Exact oracles for toughness, Hamiltonicity, and independence number
back everything at small sizes; structural arguments take over beyond
the enumeration limits.
"""

from .blocks import (
    Block,
    BlockKind,
    block,
    complete_bipartite,
    complete_graph,
    f_m,
    g_construct,
    inflate_triangles,
    inflation_cutset,
    matched_layers,
    petersen,
    unit_toughness_graph,
)
from .graphs import (
    Graph,
    GraphFormatError,
    components,
    decode_graph6,
    disjoint_union,
    encode_graph6,
    from_edge_json,
    join,
    make_graph,
    to_dot,
    to_edge_json,
)
from .oracles import (
    CutsetWitness,
    HamiltonResult,
    SizeLimitError,
    ToughnessResult,
    cutset_witness,
    has_hamilton_path,
    independence_number,
    is_hamiltonian,
    toughness_exact,
    toughness_upper_search,
)
from .synth import (
    Certificate,
    CertificateError,
    NonHamiltonicityArgument,
    PlanError,
    SynthesisPlan,
    build,
    certificate_from_json,
    certificate_to_json,
    parse_rational,
    plan,
    plan_order,
    predicted_toughness,
    synthesize,
)
from .verify import (
    FAILED,
    ORACLE_EXACT,
    ORACLE_EXHAUSTIVE,
    STRUCTURAL,
    WITNESS_UPPER_BOUND_ONLY,
    CheckOutcome,
    OracleLimits,
    VerificationReport,
    check_certificate,
    verify_claim_formula,
)

__version__ = "0.1.0"

__all__ = [
    "Block",
    "BlockKind",
    "block",
    "complete_bipartite",
    "complete_graph",
    "f_m",
    "g_construct",
    "inflate_triangles",
    "inflation_cutset",
    "matched_layers",
    "petersen",
    "unit_toughness_graph",
    "Graph",
    "GraphFormatError",
    "components",
    "decode_graph6",
    "disjoint_union",
    "encode_graph6",
    "from_edge_json",
    "join",
    "make_graph",
    "to_dot",
    "to_edge_json",
    "CutsetWitness",
    "HamiltonResult",
    "SizeLimitError",
    "ToughnessResult",
    "cutset_witness",
    "has_hamilton_path",
    "independence_number",
    "is_hamiltonian",
    "toughness_exact",
    "toughness_upper_search",
    "Certificate",
    "CertificateError",
    "NonHamiltonicityArgument",
    "PlanError",
    "SynthesisPlan",
    "build",
    "certificate_from_json",
    "certificate_to_json",
    "parse_rational",
    "plan",
    "plan_order",
    "predicted_toughness",
    "synthesize",
    "FAILED",
    "ORACLE_EXACT",
    "ORACLE_EXHAUSTIVE",
    "STRUCTURAL",
    "WITNESS_UPPER_BOUND_ONLY",
    "CheckOutcome",
    "OracleLimits",
    "VerificationReport",
    "check_certificate",
    "verify_claim_formula",
    "__version__",
]
