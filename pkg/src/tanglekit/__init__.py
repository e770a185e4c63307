"""Rational tangles through the modular group PSL(2, Z)."""

from .braid import BraidWord, braid_equivalent, from_braid, to_braid
from .enumeration import CensusReport, enumerate_words, run_census
from .errors import (
    BothZero,
    InfinityHasNoCF,
    InternalError,
    InvalidContinuedFraction,
    LimitTooLarge,
    ParseError,
    TanglekitError,
)
from .psl2z import (
    A,
    B,
    E,
    S,
    GenWord,
    Psl2Elem,
    VtForm,
    act_projective,
    compose,
    inverse,
    matrix_to_word,
    vt_normal_form,
    word_to_matrix,
)
from .qext import INF, ZERO, OddCF, ProjRat, cf_eval, cf_to_word, make_projrat, odd_cf
from .tangle import (
    R,
    Base,
    Rotation,
    TangleClass,
    TangleExpr,
    Twist,
    XMove,
    alternating_form,
    canonical,
    equivalent,
    fraction_of,
    reduce_moves,
    stabilizer_contains,
)

__version__ = "0.1.0"
