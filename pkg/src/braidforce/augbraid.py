"""Braids on n+1 strands whose last strand returns to its position.

Such braids form a semidirect product: a free normal subgroup generated by
the pure loops of the last strand around each of the first n strands,
extended by the braid group on n strands included as the first n strands.
An element is stored in coordinates (base, tail): the inclusion of ``base``
times the image of the free word ``tail`` under

    phi(x_i) = A_{i,n+1}.

Conjugating phi(u) by an included base braid b gives phi of the image of u
under the Artin action of b^-1; this convention was fixed by exhaustively
checking both orientations of the identity

    section(b) * phi(u)  ==  phi(act(b, u)) * section(b)

on short words for 2 and 3 strands (the test suite keeps that check).
"""

from __future__ import annotations

from dataclasses import dataclass

from .braid import (
    DEFAULT_MAX_LETTERS,
    BraidWord,
    artin,
    braid_eq,
    braid_invert,
    braid_mul,
    fixes_last_strand,
    format_braid,
    parse_braid,
    pure_gen,
)
from .freegroup import FreeWord, apply, concat, cyclic_reduce, format_word, invert, parse_word, reduce
from .nielsen import Decision, SearchBounds, TwistContext, twisted_conj


@dataclass(frozen=True)
class AugBraid:
    """Coordinates (base, tail) for a last-strand-fixing braid on n+1 strands."""

    base: BraidWord
    tail: FreeWord

    def __post_init__(self) -> None:
        if self.tail.rank != self.base.strands:
            raise ValueError(
                f"tail rank {self.tail.rank} must equal base strand count {self.base.strands}"
            )

    @property
    def punctures(self) -> int:
        return self.base.strands

    def __repr__(self) -> str:
        return f"AugBraid({format_aug(self)!r})"


def act(b: BraidWord, u: FreeWord, max_letters: int = DEFAULT_MAX_LETTERS) -> FreeWord:
    """Conjugation action of an included braid on the free normal subgroup.

    act(b, u) is the tail word with section(b) * phi(u) * section(b)^-1
    equal to phi(act(b, u)); it is the Artin action of the inverse braid.
    """
    return apply(artin(braid_invert(b), max_letters), u)


def phi_word(u: FreeWord) -> BraidWord:
    """The braid word on rank+1 strands spelling phi(u)."""
    n = u.rank
    letters: list[int] = []
    for k in u.letters:
        g = pure_gen(abs(k), n + 1, n + 1)
        letters.extend(g.letters if k > 0 else braid_invert(g).letters)
    return BraidWord(n + 1, tuple(letters))


def section_word(b: BraidWord) -> BraidWord:
    """The same letters read on one more strand (the extra strand is idle)."""
    return BraidWord(b.strands + 1, b.letters)


def to_word(a: AugBraid) -> BraidWord:
    return braid_mul(section_word(a.base), phi_word(a.tail))


def compose(a1: AugBraid, a2: AugBraid) -> AugBraid:
    """Product in semidirect coordinates: the second base twists the first tail."""
    if a1.punctures != a2.punctures:
        raise ValueError("puncture count mismatch")
    tail = concat(act(braid_invert(a2.base), a1.tail), a2.tail)
    return AugBraid(braid_mul(a1.base, a2.base), tail)


def aug_invert(a: AugBraid) -> AugBraid:
    return AugBraid(braid_invert(a.base), act(a.base, invert(a.tail)))


def aug_eq(a1: AugBraid, a2: AugBraid) -> bool:
    """Equality of the group elements; coordinates are unique given the base."""
    if a1.punctures != a2.punctures:
        raise ValueError("puncture count mismatch")
    return a1.tail == a2.tail and braid_eq(a1.base, a2.base)


def from_word(w: BraidWord, max_letters: int = DEFAULT_MAX_LETTERS) -> AugBraid:
    """Recover semidirect coordinates from a braid word fixing the last strand.

    The base is read off by deleting the last strand.  The leftover pure
    part acts on x_{n+1} by conjugation; deleting every x_{n+1} letter from
    the conjugating word (the action threads the base point loop through
    it) leaves exactly the tail.  The result is verified against w before
    it is returned.
    """
    if w.strands < 2:
        raise ValueError("need at least 2 strands to split off the last one")
    if len(w.letters) > max_letters:
        raise ValueError(f"input word has {len(w.letters)} letters (cap {max_letters})")
    if not fixes_last_strand(w):
        raise ValueError("braid does not fix the last strand")
    n = w.strands - 1
    base = _delete_last_strand(w)
    rest = braid_mul(braid_invert(section_word(base)), w)
    image = apply(artin(rest, max_letters=max_letters), FreeWord(n + 1, (n + 1,)))
    core, conj = cyclic_reduce(image)
    if core.letters != (n + 1,):
        raise AssertionError("pure part does not conjugate the last-strand generator")
    tail = reduce(n, (k for k in conj.letters if abs(k) != n + 1))
    result = AugBraid(base, tail)
    if not braid_eq(to_word(result), w, max_letters=max_letters):
        raise AssertionError("decomposition failed verification")
    return result


def _delete_last_strand(w: BraidWord) -> BraidWord:
    # walk the distinguished strand: crossings touching it vanish, crossings
    # strictly above its current position shift down one slot
    pos = w.strands
    out: list[int] = []
    for letter in w.letters:
        i = abs(letter)
        if i == pos:
            pos = i + 1
        elif i + 1 == pos:
            pos = i
        elif i > pos:
            out.append(letter - 1 if letter > 0 else letter + 1)
        else:
            out.append(letter)
    assert pos == w.strands
    return BraidWord(w.strands - 1, tuple(out))


def u_equiv(a1: AugBraid, a2: AugBraid, bounds: SearchBounds = SearchBounds()) -> Decision:
    """Are a1, a2 conjugate by an element of the free normal subgroup?

    Equal bases are necessary; the tails are then compared for twisted
    conjugacy with twist the Artin action of the base itself.
    """
    if a1.punctures != a2.punctures:
        raise ValueError("puncture count mismatch")
    if not braid_eq(a1.base, a2.base):
        return Decision.make_no(("base_mismatch",))
    ctx = TwistContext.create(artin(a1.base), bounds)
    return twisted_conj(ctx, a1.tail, a2.tail)


# ---------------------------------------------------------------------------
# text form: `(s1 s2 ; x1 x2^-1)`


def parse_aug(text: str, n: int) -> AugBraid:
    s = text.strip()
    if not (s.startswith("(") and s.endswith(")")):
        raise ValueError("augmented braid literal must be parenthesized")
    body = s[1:-1]
    if body.count(";") != 1:
        raise ValueError("expected exactly one ';' separating base and tail")
    braid_part, word_part = body.split(";")
    return AugBraid(parse_braid(braid_part, n), parse_word(word_part, n))


def format_aug(a: AugBraid) -> str:
    return f"({format_braid(a.base)} ; {format_word(a.tail)})"
