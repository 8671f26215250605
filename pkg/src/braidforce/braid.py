"""Braid words, strand permutations, and the Artin action on the free group.

A braid word on n strands is a sequence of signed generator indices: the
letter ``i`` (1 <= i <= n-1) is the positive crossing of strands i and i+1,
``-i`` its inverse.  Words are kept verbatim; equality of the group elements
they spell is decided through the faithful Artin representation.

The Artin action of a single positive crossing is

    x_i |-> x_i x_{i+1} x_i^-1,    x_{i+1} |-> x_i,

with all other generators fixed, and braid words act diagrammatically
(first letter acts first).
"""

from __future__ import annotations

import functools
from dataclasses import dataclass

from .freegroup import FreeEndo, FreeWord, apply, compose

DEFAULT_MAX_LETTERS = 128


class WordTooLongError(ValueError):
    """Raised when a braid word exceeds the image-blowup safety cap."""


@dataclass(frozen=True)
class BraidWord:
    """A word in the braid group B_strands."""

    strands: int
    letters: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        if not isinstance(self.strands, int) or self.strands < 1:
            raise ValueError(f"strand count must be a positive integer, got {self.strands!r}")
        for k in self.letters:
            if not isinstance(k, int) or k == 0 or abs(k) > self.strands - 1:
                raise ValueError(
                    f"letter {k!r} out of range for {self.strands} strands"
                )

    @classmethod
    def identity(cls, strands: int) -> BraidWord:
        return cls(strands, ())

    def __len__(self) -> int:
        return len(self.letters)

    def __mul__(self, other: BraidWord) -> BraidWord:
        return braid_mul(self, other)

    def __repr__(self) -> str:
        return f"BraidWord({self.strands}, {format_braid(self)!r})"


def braid_mul(b1: BraidWord, b2: BraidWord) -> BraidWord:
    if b1.strands != b2.strands:
        raise ValueError("strand count mismatch")
    return BraidWord(b1.strands, b1.letters + b2.letters)


def braid_invert(b: BraidWord) -> BraidWord:
    return BraidWord(b.strands, tuple(-k for k in reversed(b.letters)))


def power(b: BraidWord, m: int) -> BraidWord:
    """The word b^m; negative m uses the letterwise inverse word."""
    if m >= 0:
        return BraidWord(b.strands, b.letters * m)
    return BraidWord(b.strands, braid_invert(b).letters * (-m))


@dataclass(frozen=True)
class Permutation:
    """A permutation of {1..n}, stored as the tuple of images of 1..n."""

    images: tuple[int, ...]

    def __post_init__(self) -> None:
        n = len(self.images)
        if sorted(self.images) != list(range(1, n + 1)):
            raise ValueError(f"not a permutation of 1..{n}: {self.images}")

    @classmethod
    def identity(cls, n: int) -> Permutation:
        return cls(tuple(range(1, n + 1)))

    def apply(self, k: int) -> int:
        return self.images[k - 1]

    def compose(self, other: Permutation) -> Permutation:
        # diagrammatic: self first, then other
        return Permutation(tuple(other.apply(i) for i in self.images))

    def fixed_points(self) -> tuple[int, ...]:
        return tuple(k for k, img in enumerate(self.images, 1) if img == k)


def perm(b: BraidWord) -> Permutation:
    """Underlying strand permutation: position of strand k after the braid."""
    pos = list(range(b.strands + 1))  # pos[k] = current position of strand k
    for letter in b.letters:
        i = abs(letter)
        for k in range(1, b.strands + 1):
            if pos[k] == i:
                pos[k] = i + 1
            elif pos[k] == i + 1:
                pos[k] = i
    return Permutation(tuple(pos[1:]))


def fixes_last_strand(b: BraidWord) -> bool:
    return perm(b).apply(b.strands) == b.strands


def pure_gen(i: int, j: int, strands: int) -> BraidWord:
    """Standard pure braid generator A_ij, 1 <= i < j <= strands.

    A_ij = s_{j-1} ... s_{i+1} s_i^2 s_{i+1}^-1 ... s_{j-1}^-1, the loop in
    which strand j swings around strand i and returns.
    """
    if not (1 <= i < j <= strands):
        raise ValueError(f"need 1 <= i < j <= strands, got ({i}, {j}, {strands})")
    letters = list(range(j - 1, i, -1)) + [i, i] + [-k for k in range(i + 1, j)]
    return BraidWord(strands, tuple(letters))


@functools.lru_cache(maxsize=None)
def _letter_endo(strands: int, letter: int) -> FreeEndo:
    images = [FreeWord(strands, (k,)) for k in range(1, strands + 1)]
    i = abs(letter)
    if letter > 0:
        images[i - 1] = FreeWord(strands, (i, i + 1, -i))
        images[i] = FreeWord(strands, (i,))
    else:
        images[i - 1] = FreeWord(strands, (i + 1,))
        images[i] = FreeWord(strands, (-(i + 1), i, i + 1))
    return FreeEndo(strands, tuple(images))


def artin(b: BraidWord, max_letters: int = DEFAULT_MAX_LETTERS) -> FreeEndo:
    """The Artin automorphism of F_strands induced by the braid word.

    Image lengths can grow exponentially in the word length, so the fold
    aborts once any generator image exceeds max_letters; raise the cap
    explicitly for long but tame words.
    """
    e = FreeEndo.identity(b.strands)
    for letter in b.letters:
        e = compose(e, _letter_endo(b.strands, letter))
        longest = max(len(w) for w in e.images)
        if longest > max_letters:
            raise WordTooLongError(
                f"generator image grew to {longest} letters (cap {max_letters}); "
                "pass a larger max_letters if this is intentional"
            )
    return e


def braid_eq(b1: BraidWord, b2: BraidWord, max_letters: int = DEFAULT_MAX_LETTERS) -> bool:
    """Word-problem test through faithfulness of the Artin representation."""
    if b1.strands != b2.strands:
        raise ValueError("strand count mismatch")
    return artin(b1, max_letters) == artin(b2, max_letters)


def artin_apply(b: BraidWord, w: FreeWord, max_letters: int = DEFAULT_MAX_LETTERS) -> FreeWord:
    """Image of a free word under the Artin action of b."""
    return apply(artin(b, max_letters), w)


# ---------------------------------------------------------------------------
# text form: `s1 s2^-1` etc., `e` for the trivial braid

def parse_braid(text: str, strands: int) -> BraidWord:
    """Parse a braid word.  Tokens: `s<k>`, `s<k>^-1`, signed integers, `e`."""
    letters: list[int] = []
    for tok in text.split():
        if tok == "e":
            continue
        if tok.startswith("s"):
            body = tok[1:]
            neg = body.endswith("^-1")
            if neg:
                body = body[:-3]
            if not body.isdigit() or int(body) < 1:
                raise ValueError(f"bad braid token {tok!r}")
            letters.append(-int(body) if neg else int(body))
        else:
            try:
                k = int(tok)
            except ValueError:
                raise ValueError(f"bad braid token {tok!r}") from None
            if k == 0:
                raise ValueError("0 is not a valid braid letter")
            letters.append(k)
    return BraidWord(strands, tuple(letters))


def format_braid(b: BraidWord) -> str:
    if not b.letters:
        return "e"
    return " ".join(f"s{k}" if k > 0 else f"s{-k}^-1" for k in b.letters)
