"""Exact matroid computations on explicit basis families.

The package answers four families of questions about a matroid given by
its list of bases: which subsets are locked, which inequalities are
facets of the bases polytope and of the independence polytope, what the
maximum-weight basis is, and whether the matroid is uniform.  All
arithmetic is exact (ints and fractions.Fraction); subsets are bitmasks
over an ordered ground set.
"""

from .core import (
    ColoopPresent,
    ElementSubset,
    EmptyBasisFamily,
    EmptyGroundSet,
    ExchangeAxiomViolated,
    ForeignElement,
    GroundSet,
    LoopPresent,
    Matroid,
    MatroidError,
    NotProperSubset,
    UnequalBasisSizes,
)
from .locked import (
    KLockedVerdict,
    LockedNumbers,
    LockedStructure,
    enumerate_locked,
    is_locked,
    k_locked_oracle,
    locked_number_oracle,
    locked_structure,
)
from .polytope import (
    CertificationFailed,
    CertificationReport,
    DegeneratePolytope,
    DimensionMismatch,
    FacetSystem,
    LinearConstraint,
    NotConnected,
    Origin,
    certify,
    independence_tight_set,
    independence_vertices,
    oracle_facets_bases,
    oracle_facets_independence,
    polytope_dimension,
    predicted_facets_bases,
    predicted_facets_independence,
    bases_tight_set,
    separate,
)
from .optimize import (
    OptimizationResult,
    TraceStep,
    WeightFunction,
    brute_force_max_basis,
    greedy_max_basis,
    independent_via_optimization,
    rank_via_optimization,
)
from .uniformity import (
    Not3Connected,
    UniformityVerdict,
    is_uniform_direct,
    test_uniformity,
    uniform_iff_no_locked,
)
from .catalog import (
    BadParameters,
    BasepointDegenerate,
    CatalogEntry,
    DisconnectedGraph,
    LabelCollision,
    NotCircuitHyperplane,
    UnknownName,
    catalog_get,
    catalog_names,
    circuit_hyperplanes,
    direct_sum,
    graphic,
    relax,
    two_sum,
    uniform,
    vamos,
)
from .files import MatroidFile, ParseError, dumps, loads, save, load

__version__ = "0.1.0"

__all__ = [
    "BadParameters",
    "BasepointDegenerate",
    "CatalogEntry",
    "CertificationFailed",
    "CertificationReport",
    "ColoopPresent",
    "DegeneratePolytope",
    "DimensionMismatch",
    "DisconnectedGraph",
    "ElementSubset",
    "EmptyBasisFamily",
    "EmptyGroundSet",
    "ExchangeAxiomViolated",
    "FacetSystem",
    "ForeignElement",
    "GroundSet",
    "KLockedVerdict",
    "LabelCollision",
    "LinearConstraint",
    "LockedNumbers",
    "LockedStructure",
    "LoopPresent",
    "Matroid",
    "MatroidError",
    "MatroidFile",
    "Not3Connected",
    "NotCircuitHyperplane",
    "NotConnected",
    "NotProperSubset",
    "OptimizationResult",
    "Origin",
    "ParseError",
    "TraceStep",
    "UnequalBasisSizes",
    "UniformityVerdict",
    "UnknownName",
    "WeightFunction",
    "bases_tight_set",
    "brute_force_max_basis",
    "catalog_get",
    "catalog_names",
    "certify",
    "circuit_hyperplanes",
    "direct_sum",
    "dumps",
    "enumerate_locked",
    "graphic",
    "greedy_max_basis",
    "independence_tight_set",
    "independence_vertices",
    "independent_via_optimization",
    "is_locked",
    "is_uniform_direct",
    "k_locked_oracle",
    "load",
    "loads",
    "locked_number_oracle",
    "locked_structure",
    "oracle_facets_bases",
    "oracle_facets_independence",
    "polytope_dimension",
    "predicted_facets_bases",
    "predicted_facets_independence",
    "rank_via_optimization",
    "relax",
    "save",
    "separate",
    "test_uniformity",
    "two_sum",
    "uniform",
    "uniform_iff_no_locked",
    "vamos",
]
