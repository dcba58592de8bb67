"""
asym-gauge - Exact Asymmetric Normed Spaces

Finite-dimensional asymmetric normed spaces modelled as polyhedral gauges
||x| = max_i <a_i, x> over the rationals. Computes the index of symmetry,
the T1 / type classification, the flat dual cone and asymmetric operator
norms exactly, and returns a re-checkable certificate with every answer.

Example:
    import asymgauge

    # Index of symmetry of a weighted l-infinity space
    asymgauge.index(asymgauge.weighted_linf(4)).c        # Fraction(1, 4)

    # The upper real line is not T1
    asymgauge.classify(asymgauge.upper_real())           # SpaceType.III

    # Continuous T with -T discontinuous
    asymgauge.nonreversible_witness(asymgauge.upper_real(), asymgauge.upper_real())

Modules:
    - errors: Exception hierarchy
    - rationals: Exact scalars, vectors and certificates
    - polyhedra: Exact LP, recession cones and vertex enumeration
    - gauge: The PolyhedralGauge type and its evaluations
    - spaces: Named example spaces and gauge files
    - symmetry: Index of symmetry and classification
    - dual: The flat dual cone
    - operators: Asymmetric operator norms and witnesses
    - serialization: JSON file and report models
    - campaign: Seeded randomized verification
"""

__version__ = "1.0.0"
__author__ = "land_lmao"
__description__ = "Exact computations on polyhedral asymmetric normed spaces"

from .errors import *
from .rationals import *
from .polyhedra import *
from .gauge import *
from .spaces import *
from .symmetry import *
from .dual import *
from .operators import *
from .serialization import *
from .campaign import RunConfig, run_campaign, render_report

__all__ = [
    # Errors
    'AsymGaugeError', 'InputError', 'AxiomError', 'PreconditionError',
    'CapacityError', 'InvariantViolation',

    # Exact scalars
    'ExtendedRational', 'Certificate', 'to_fraction', 'format_rational',
    'vector', 'format_vector',

    # Polyhedra
    'HPolyhedron', 'LpStatus', 'LpOutcome', 'VRep', 'lp_solve', 'support_value',
    'recession_direction', 'positively_spans', 'enumerate_vrep', 'contains',
    'rank', 'null_space', 'recession_span',

    # Gauges
    'PolyhedralGauge', 'new_gauge', 'eval_norm', 'eval_reverse', 'symmetric_norm',
    'quasi_distance', 'symmetrize', 'sum_with_symmetric', 'unit_ball',
    'canonicalize', 'is_symmetric',

    # Example spaces
    'upper_real', 'referee_plane', 'weighted_linf', 'linf_sym', 'sup_gauge',
    'fixture', 'from_file', 'to_file', 'load_space',

    # Symmetry
    'SpaceType', 'SymmetryIndex', 'SymmetryReport', 'index', 'sup_reverse',
    'check_identity', 'is_t1', 'ball_is_bounded', 'classify', 'symmetry_report',
    'equivalence_constants',

    # Flat dual
    'DualFunctional', 'flat_norm', 'star_norm', 'in_dual_cone',
    'support_functional', 'dual_cone_full', 'nonreversible_functional',
    'dual_equivalence_bounds',

    # Operators
    'LinearOperator', 'OpNormReport', 'BlowupReport', 'new_operator', 'apply',
    'negate', 'scale', 'add', 'lc_supremum', 'lc_norm', 'ls_norm', 'is_continuous',
    'rank_one', 'random_continuous_operator', 'lc_is_vector_space',
    'witness_ingredients', 'nonreversible_witness', 'perturb_nonsymmetric',
    'operator_space_gauge', 'asymmetry_blowup',

    # Files and reports
    'GaugeFile', 'OperatorFile', 'CampaignReport', 'parse_model',

    # Verification campaign
    'RunConfig', 'run_campaign', 'render_report'
]
