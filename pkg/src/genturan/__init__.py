"""Generalized Turán numbers ex(n, H, tK_r^p): constructions, counts and exhaustive oracles."""

__version__ = "0.1.0"

from .blowup import BlowupCertificate, BlowupResult, b_parameter, verify_certificate
from .codecs import from_graph6, from_hjson, parse_graph_text, to_graph6, to_hjson
from .counting import (
    CliqueFamily,
    automorphism_count,
    contains_disjoint_cliques,
    count_cliques,
    count_copies,
    count_embeddings,
    find_disjoint_cliques,
    list_cliques,
)
from .cover import CoverPair, SetFamily, cover_decomposition, matching_number, rainbow_matching, verify_cover
from .exceptions import GuardError, ParseError, PatternTooLarge, PreconditionError, UniformityError
from .formulas import (
    AlphaEntry,
    AlphaTable,
    ConstructionSpec,
    ProblemParams,
    alpha_coefficients,
    construction_spec,
    ex_closed_value,
    extremal_construction,
    lemma_hgt_value,
    reduced_objective,
    x_exponent,
)
from .graphs import (
    Graph,
    Hypergraph,
    disjoint_union,
    hyper_join,
    induced,
    join,
    make_turan,
    partial_blowup,
    turan_part_sizes,
)
from .oracle import (
    OracleResult,
    UniversalVertices,
    brute_force_ex,
    enumerate_hosts,
    search_tail_T,
    verify_theorem1,
    verify_universal_vertices,
)
from .patterns import named_pattern
