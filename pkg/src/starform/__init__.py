"""Stellar calculus on Z2 simplicial complexes.

Chains and their operators, stellar moves with replayable traces, ball
and sphere recognition, normalization of connected manifolds into a cone
over a quotient sphere, and fundamental group presentations read off the
quotient.
"""

from .chains import (
    Complex,
    Simplex,
    Verdict,
    boundary,
    connected_components,
    euler_characteristic,
    is_closed,
    join,
    link,
    residual,
    simplex_boundary,
)
from .moves import (
    MergeVertex,
    Move,
    Relabel,
    SplitVertex,
    Subdivide,
    Weld,
    apply_sequence,
    invert_sequence,
    relabel,
    subdivide,
    weld,
    weldable_pairs,
)
from .normalize import NormalizationState, StarNormalForm, initial_state, normalize, normalize_step, verify_normal_form
from .pi1 import (
    AbelianInvariants,
    GroupPresentation,
    abelianization,
    polygon_word,
    presentation,
    presentation_text,
)
from .quotient import (
    GeneratorPairing,
    QuotientComplex,
    RegularEquivalence,
    cone_euler_characteristic,
    derive_pairing,
    quotient_cells,
    validate_regular,
)
from .recognition import ManifoldReport, RecognitionResult, Shape, is_stellar_manifold, recognize_ball_or_sphere

__version__ = "0.1.0"
