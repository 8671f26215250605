"""Exact symbolic computation of forced orbit braids.

A braid on n strands acts on the free group of rank n.  Fox calculus turns
that action into a Reidemeister trace whose essential twisted conjugacy
classes, after discarding the degenerate ones carried by fixed strands,
each force a braid on n+1 strands: every homeomorphism inducing the braid
must exhibit it among its iterate orbits.  All computations are exact;
searches that are bounded for decidability report Unknown instead of
guessing.
"""

from .freegroup import (
    FreeEndo,
    FreeWord,
    abelianize,
    apply,
    compose,
    concat,
    conjugator,
    cyclic_reduce,
    endo_eq,
    endo_matrix,
    endo_power,
    format_word,
    gen,
    invert,
    parse_word,
    reduce,
    word_sort_key,
)
from .braid import (
    DEFAULT_MAX_LETTERS,
    BraidWord,
    Permutation,
    WordTooLongError,
    artin,
    artin_apply,
    braid_eq,
    braid_invert,
    braid_mul,
    fixes_last_strand,
    format_braid,
    parse_braid,
    perm,
    power,
    pure_gen,
)
from .foxcalc import (
    GroupRingElem,
    augmentation,
    format_ring,
    fox,
    gr_left_mul,
    gr_right_mul,
    jacobian_diagonal,
    raw_trace,
)
from .nielsen import (
    Decision,
    DegenerateFamily,
    MergedTrace,
    SearchBounds,
    TraceClass,
    TraceSummand,
    TwistContext,
    abelian_invariant,
    canonical_rep,
    degenerate_families,
    essential_nondegenerate,
    format_trace,
    is_degenerate,
    merge,
    reidemeister_trace,
    twisted_conj,
)
from .augbraid import (
    AugBraid,
    act,
    aug_eq,
    aug_invert,
    format_aug,
    from_word,
    parse_aug,
    phi_word,
    section_word,
    to_word,
    u_equiv,
)
from .augbraid import compose as aug_compose
from .forcing import (
    ClassReport,
    ForcingReport,
    forced_set,
    is_forced,
    report_json,
    report_json_text,
    report_text,
)

__version__ = "0.1.0"

__all__ = [
    "FreeWord",
    "FreeEndo",
    "reduce",
    "gen",
    "concat",
    "invert",
    "cyclic_reduce",
    "conjugator",
    "abelianize",
    "word_sort_key",
    "apply",
    "compose",
    "endo_power",
    "endo_eq",
    "endo_matrix",
    "parse_word",
    "format_word",
    "BraidWord",
    "Permutation",
    "WordTooLongError",
    "DEFAULT_MAX_LETTERS",
    "braid_mul",
    "braid_invert",
    "power",
    "perm",
    "fixes_last_strand",
    "pure_gen",
    "artin",
    "artin_apply",
    "braid_eq",
    "parse_braid",
    "format_braid",
    "GroupRingElem",
    "gr_left_mul",
    "gr_right_mul",
    "augmentation",
    "fox",
    "jacobian_diagonal",
    "raw_trace",
    "format_ring",
    "SearchBounds",
    "Decision",
    "TwistContext",
    "abelian_invariant",
    "twisted_conj",
    "canonical_rep",
    "TraceSummand",
    "MergedTrace",
    "merge",
    "format_trace",
    "reidemeister_trace",
    "DegenerateFamily",
    "degenerate_families",
    "is_degenerate",
    "TraceClass",
    "essential_nondegenerate",
    "AugBraid",
    "act",
    "phi_word",
    "section_word",
    "to_word",
    "aug_compose",
    "aug_invert",
    "aug_eq",
    "from_word",
    "u_equiv",
    "parse_aug",
    "format_aug",
    "ClassReport",
    "ForcingReport",
    "forced_set",
    "is_forced",
    "report_text",
    "report_json",
    "report_json_text",
]
