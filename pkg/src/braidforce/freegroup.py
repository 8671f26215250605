"""Free group words and endomorphisms with exact integer-letter arithmetic.

A word in the free group F_n is stored as a tuple of nonzero integers: the
letter ``k`` (1 <= k <= n) denotes the generator x_k and ``-k`` denotes its
inverse.  Every ``FreeWord`` is freely reduced by construction, so tuple
equality is group-element equality.

Endomorphisms are given by their generator images.  Composition is
diagrammatic throughout this package: ``compose(e1, e2)`` applies ``e1``
first, then ``e2``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass


def _reduce_letters(letters) -> tuple[int, ...]:
    out: list[int] = []
    for k in letters:
        if out and out[-1] == -k:
            out.pop()
        else:
            out.append(k)
    return tuple(out)


@dataclass(frozen=True)
class FreeWord:
    """A freely reduced word in F_rank.

    >>> w = reduce(2, [1, 2, -2, -1, 1])
    >>> w.letters
    (1,)
    """

    rank: int
    letters: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        if not isinstance(self.rank, int) or self.rank < 1:
            raise ValueError(f"rank must be a positive integer, got {self.rank!r}")
        for k in self.letters:
            if not isinstance(k, int) or k == 0 or abs(k) > self.rank:
                raise ValueError(f"letter {k!r} out of range for rank {self.rank}")
        for a, b in zip(self.letters, self.letters[1:]):
            if a == -b:
                raise ValueError("word is not freely reduced; use reduce()")

    @classmethod
    def identity(cls, rank: int) -> FreeWord:
        return cls(rank, ())

    def __len__(self) -> int:
        return len(self.letters)

    def __mul__(self, other: FreeWord) -> FreeWord:
        return concat(self, other)

    def __repr__(self) -> str:
        return f"FreeWord({self.rank}, {format_word(self)!r})"


def reduce(rank: int, letters) -> FreeWord:
    """Freely reduce a letter sequence into a FreeWord."""
    return FreeWord(rank, _reduce_letters(letters))


def gen(rank: int, k: int) -> FreeWord:
    """The single-letter word x_k (or its inverse for negative k)."""
    return FreeWord(rank, (k,))


def concat(*words: FreeWord) -> FreeWord:
    """Product of words, freely reduced."""
    if not words:
        raise ValueError("concat needs at least one word")
    rank = words[0].rank
    out: list[int] = []
    for w in words:
        if w.rank != rank:
            raise ValueError(f"rank mismatch: {w.rank} != {rank}")
        for k in w.letters:
            if out and out[-1] == -k:
                out.pop()
            else:
                out.append(k)
    return FreeWord(rank, tuple(out))


def invert(w: FreeWord) -> FreeWord:
    return FreeWord(w.rank, tuple(-k for k in reversed(w.letters)))


def cyclic_reduce(w: FreeWord) -> tuple[FreeWord, FreeWord]:
    """Split w as conj * core * conj^-1 with core cyclically reduced.

    Returns (core, conj).  For a cyclically reduced word the conjugating
    part is empty.
    """
    letters = list(w.letters)
    conj: list[int] = []
    while len(letters) >= 2 and letters[0] == -letters[-1]:
        conj.append(letters[0])
        letters = letters[1:-1]
    return FreeWord(w.rank, tuple(letters)), FreeWord(w.rank, tuple(conj))


def conjugator(w1: FreeWord, w2: FreeWord) -> FreeWord | None:
    """A word c with w2 = c * w1 * c^-1, or None if not conjugate.

    Conjugacy in a free group holds exactly when the cyclically reduced
    cores are cyclic rotations of each other; the witness is assembled
    from the two conjugating parts and the rotation, then checked by
    substitution before being returned.
    """
    if w1.rank != w2.rank:
        raise ValueError("rank mismatch")
    core1, c1 = cyclic_reduce(w1)
    core2, c2 = cyclic_reduce(w2)
    if len(core1) != len(core2):
        return None
    if not core1.letters:
        return FreeWord(w1.rank)
    u = core1.letters
    for r in range(len(u)):
        if u[r:] + u[:r] == core2.letters:
            shift = FreeWord(w1.rank, u[r:]) if r else FreeWord(w1.rank)
            c = concat(c2, shift, invert(c1))
            assert concat(c, w1, invert(c)) == w2
            return c
    return None


def abelianize(w: FreeWord) -> tuple[int, ...]:
    """Exponent-sum vector of w, one slot per generator."""
    sums = [0] * w.rank
    for k in w.letters:
        sums[abs(k) - 1] += 1 if k > 0 else -1
    return tuple(sums)


def word_sort_key(w: FreeWord):
    """Deterministic order: by length, then letter-wise with x_k before x_k^-1."""
    return (len(w.letters), tuple((abs(k), 0 if k > 0 else 1) for k in w.letters))


# ---------------------------------------------------------------------------
# endomorphisms


@dataclass(frozen=True)
class FreeEndo:
    """An endomorphism of F_rank given by its generator images."""

    rank: int
    images: tuple[FreeWord, ...]

    def __post_init__(self) -> None:
        if len(self.images) != self.rank:
            raise ValueError(f"expected {self.rank} images, got {len(self.images)}")
        for img in self.images:
            if img.rank != self.rank:
                raise ValueError("image rank mismatch")

    @classmethod
    def identity(cls, rank: int) -> FreeEndo:
        return cls(rank, tuple(FreeWord(rank, (i,)) for i in range(1, rank + 1)))


def apply(e: FreeEndo, w: FreeWord) -> FreeWord:
    """Image of w under e, freely reduced."""
    if w.rank != e.rank:
        raise ValueError("rank mismatch")
    out: list[int] = []
    for k in w.letters:
        img = e.images[k - 1].letters if k > 0 else tuple(
            -j for j in reversed(e.images[-k - 1].letters)
        )
        for l in img:
            if out and out[-1] == -l:
                out.pop()
            else:
                out.append(l)
    return FreeWord(e.rank, tuple(out))


def compose(e1: FreeEndo, e2: FreeEndo) -> FreeEndo:
    """Diagrammatic composition: e1 acts first, then e2."""
    if e1.rank != e2.rank:
        raise ValueError("rank mismatch")
    return FreeEndo(e1.rank, tuple(apply(e2, img) for img in e1.images))


def endo_power(e: FreeEndo, m: int) -> FreeEndo:
    """m-fold composite of e with itself; m = 0 gives the identity."""
    if m < 0:
        raise ValueError("endomorphisms are not invertible in general; m must be >= 0")
    acc = FreeEndo.identity(e.rank)
    for _ in range(m):
        acc = compose(acc, e)
    return acc


def endo_eq(e1: FreeEndo, e2: FreeEndo) -> bool:
    return e1 == e2


def endo_matrix(e: FreeEndo) -> tuple[tuple[int, ...], ...]:
    """Abelianized matrix M of e, as rows; column j is abelianize(images[j]).

    The convention makes M act on column vectors compatibly with apply:
    abelianize(apply(e, w)) == M @ abelianize(w).
    """
    cols = [abelianize(img) for img in e.images]
    return tuple(tuple(cols[j][i] for j in range(e.rank)) for i in range(e.rank))


# ---------------------------------------------------------------------------
# text form: `x2 x3^-1` etc., `e` for the identity

_TOKEN = re.compile(r"^(?:e|[+-]?\d+|x(\d+)(\^-1)?)$")


def parse_word(text: str, rank: int) -> FreeWord:
    """Parse a free word.  Tokens: `x<k>`, `x<k>^-1`, signed integers, `e`."""
    letters: list[int] = []
    for tok in text.split():
        m = _TOKEN.match(tok)
        if m is None:
            raise ValueError(f"bad free-group token {tok!r}")
        if tok == "e":
            continue
        if tok.startswith("x"):
            k = int(m.group(1))
            if k < 1:
                raise ValueError(f"bad generator index in {tok!r}")
            letters.append(-k if m.group(2) else k)
        else:
            k = int(tok)
            if k == 0:
                raise ValueError("0 is not a valid letter")
            letters.append(k)
    return reduce(rank, letters)


def format_word(w: FreeWord) -> str:
    if not w.letters:
        return "e"
    return " ".join(f"x{k}" if k > 0 else f"x{-k}^-1" for k in w.letters)
