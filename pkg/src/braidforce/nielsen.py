"""Twisted conjugacy classes and Reidemeister traces for free-group endomorphisms.

Two words u, v are theta-twisted conjugate when v = theta(a) * u * a^-1 for
some word a.  The relation is undecidable to bound in general, so decisions
come in three kinds: Yes with an explicit witness, No with an abelianized
certificate, or Unknown when a bounded breadth-first search is exhausted.

The raw Fox trace of theta is a formal sum of words; grouping its summands
by twisted conjugacy and adding coefficients yields the merged trace whose
nonzero classes are the essential ones.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass, field

from .braid import BraidWord, artin, perm, power
from .foxcalc import GroupRingElem, raw_trace
from .freegroup import (
    FreeEndo,
    FreeWord,
    abelianize,
    apply,
    concat,
    conjugator,
    endo_matrix,
    endo_power,
    format_word,
    invert,
    word_sort_key,
)


@dataclass(frozen=True)
class SearchBounds:
    """Caps for the bounded searches: conjugator length and strand-loop power."""

    radius: int = 5
    k_max: int = 6

    def __post_init__(self) -> None:
        if self.radius < 0 or self.k_max < 0:
            raise ValueError("bounds must be nonnegative")


@dataclass(frozen=True)
class Decision:
    """Outcome of a bounded decision procedure.

    kind is "yes", "no" or "unknown".  Yes decisions carry a witness word,
    No decisions a certificate tuple, Unknown decisions the exhausted bound.
    """

    kind: str
    witness: FreeWord | None = None
    certificate: tuple = ()

    def __post_init__(self) -> None:
        if self.kind not in ("yes", "no", "unknown"):
            raise ValueError(f"bad decision kind {self.kind!r}")

    @classmethod
    def make_yes(cls, witness: FreeWord, certificate: tuple = ()) -> Decision:
        return cls("yes", witness, certificate)

    @classmethod
    def make_no(cls, certificate: tuple = ()) -> Decision:
        return cls("no", None, certificate)

    @classmethod
    def make_unknown(cls, certificate: tuple = ()) -> Decision:
        return cls("unknown", None, certificate)

    @property
    def is_yes(self) -> bool:
        return self.kind == "yes"

    @property
    def is_no(self) -> bool:
        return self.kind == "no"

    @property
    def is_unknown(self) -> bool:
        return self.kind == "unknown"


@dataclass(frozen=True)
class TwistContext:
    """A twisting endomorphism with its abelianization and search bounds."""

    theta: FreeEndo
    matrix: tuple[tuple[int, ...], ...]
    radius: int = 5
    k_max: int = 6

    @classmethod
    def create(cls, theta: FreeEndo, bounds: SearchBounds = SearchBounds()) -> TwistContext:
        return cls(theta, endo_matrix(theta), bounds.radius, bounds.k_max)

    @property
    def rank(self) -> int:
        return self.theta.rank


# ---------------------------------------------------------------------------
# abelianized invariant: coset of the exponent vector modulo im(M - I)


@functools.lru_cache(maxsize=None)
def _column_echelon(matrix: tuple[tuple[int, ...], ...]) -> tuple[tuple[int, ...], ...]:
    """Integer column echelon basis of the lattice spanned by columns of M - I."""
    n = len(matrix)
    work = []
    for j in range(n):
        col = [matrix[i][j] - (1 if i == j else 0) for i in range(n)]
        if any(col):
            work.append(col)
    basis: list[list[int]] = []
    for r in range(n):
        live = [c for c in work if c[r] != 0]
        while len(live) > 1:
            live.sort(key=lambda c: abs(c[r]))
            a = live[0]
            for b in live[1:]:
                q = b[r] // a[r]
                for i in range(r, n):
                    b[i] -= q * a[i]
            live = [c for c in work if c[r] != 0]
        if live:
            p = live[0]
            if p[r] < 0:
                p = [-x for x in p]
            basis.append(p)
            work = [c for c in work if c[r] == 0]
    return tuple(tuple(c) for c in basis)


def abelian_invariant(ctx: TwistContext, w: FreeWord) -> tuple[int, ...]:
    """Canonical representative of abelianize(w) modulo the column lattice of M - I.

    Twisted conjugation changes the exponent vector by (M - I) * abelianize(a),
    so this coset is a computable invariant of the twisted class.
    """
    v = list(abelianize(w))
    n = len(v)
    for col in _column_echelon(ctx.matrix):
        r = next(i for i in range(n) if col[i] != 0)
        q = v[r] // col[r]
        if q:
            for i in range(r, n):
                v[i] -= q * col[i]
    return tuple(v)


# ---------------------------------------------------------------------------
# bounded orbit search


def _cat(*parts) -> tuple[int, ...]:
    out: list[int] = []
    for p in parts:
        for k in p:
            if out and out[-1] == -k:
                out.pop()
            else:
                out.append(k)
    return tuple(out)


def _key(letters: tuple[int, ...]):
    return (len(letters), tuple((abs(k), 0 if k > 0 else 1) for k in letters))


def _orbit(ctx: TwistContext, u: FreeWord, radius: int):
    """Yield (alpha, theta(alpha) * u * alpha^-1) as raw letter tuples.

    Enumeration is deterministic: alpha by length first, then lexicographic
    with x_k before x_k^-1.  Iterative deepening keeps memory flat while
    preserving that order; theta images and inverses grow incrementally
    along the search path.
    """
    n = ctx.rank
    letters = [k for i in range(1, n + 1) for k in (i, -i)]
    timg = {}
    for k in letters:
        img = ctx.theta.images[abs(k) - 1].letters
        timg[k] = img if k > 0 else tuple(-j for j in reversed(img))
    u_letters = u.letters
    yield (), u_letters
    for depth in range(1, radius + 1):
        # stack entries: (alpha, theta(alpha), alpha^-1)
        stack = [((), (), ())]
        while stack:
            alpha, th, inv_a = stack.pop()
            children = []
            for k in letters:
                if alpha and alpha[-1] == -k:
                    continue
                child = (alpha + (k,), _cat(th, timg[k]), (-k,) + inv_a)
                if len(child[0]) == depth:
                    yield child[0], _cat(child[1], u_letters, child[2])
                else:
                    children.append(child)
            stack.extend(reversed(children))


def twisted_conj(ctx: TwistContext, u: FreeWord, v: FreeWord) -> Decision:
    """Decide whether v = theta(a) * u * a^-1 for some word a.

    Yes returns the first witness in enumeration order (shortest, then
    lexicographically first).  No is certified by differing abelianized
    invariants.  Unknown means the search radius was exhausted.
    """
    if u.rank != ctx.rank or v.rank != ctx.rank:
        raise ValueError("rank mismatch")
    iu = abelian_invariant(ctx, u)
    iv = abelian_invariant(ctx, v)
    if iu != iv:
        return Decision.make_no(("abelian", iu, iv))
    target = v.letters
    for alpha, cand in _orbit(ctx, u, ctx.radius):
        if cand == target:
            witness = FreeWord(ctx.rank, alpha)
            assert concat(apply(ctx.theta, witness), u, invert(witness)) == v
            return Decision.make_yes(witness)
    return Decision.make_unknown(("radius", ctx.radius))


@functools.lru_cache(maxsize=8192)
def _canonical_cached(ctx: TwistContext, w: FreeWord) -> FreeWord:
    best = w.letters
    for _, cand in _orbit(ctx, w, ctx.radius):
        if _key(cand) < _key(best):
            best = cand
    return FreeWord(ctx.rank, best)


def canonical_rep(ctx: TwistContext, w: FreeWord) -> FreeWord:
    """Least word found in the bounded twisted-conjugacy orbit of w.

    This is a display normal form, not a complete invariant: words of the
    same class always canonicalize consistently only when the search radius
    reaches the connecting conjugator.
    """
    if w.rank != ctx.rank:
        raise ValueError("rank mismatch")
    return _canonical_cached(ctx, w)


# ---------------------------------------------------------------------------
# merged traces


@dataclass(frozen=True)
class TraceSummand:
    """One twisted conjugacy class in a merged trace."""

    coefficient: int
    representative: FreeWord
    members: tuple[FreeWord, ...]


@dataclass(frozen=True)
class MergedTrace:
    rank: int
    summands: tuple[TraceSummand, ...]
    unresolved: tuple[tuple[FreeWord, FreeWord], ...] = ()


def merge(ctx: TwistContext, raw: GroupRingElem) -> MergedTrace:
    """Group the summands of a raw trace into twisted conjugacy classes.

    Classes whose coefficients cancel are dropped.  Pairs of summands whose
    comparison came back Unknown are left unmerged and reported, so the
    result is only exact when unresolved is empty.
    """
    if raw.rank != ctx.rank:
        raise ValueError("rank mismatch")
    classes: list[dict] = []
    unresolved: set[tuple[FreeWord, FreeWord]] = set()
    for w, c in raw.terms:
        hits: list[int] = []
        maybes: list[int] = []
        for idx, cl in enumerate(classes):
            verdicts = [twisted_conj(ctx, member, w) for member in cl["members"]]
            if any(d.is_yes for d in verdicts):
                hits.append(idx)
            elif any(d.is_unknown for d in verdicts):
                maybes.append(idx)
        if hits:
            target = classes[hits[0]]
            # a summand matching several previously unmergeable classes
            # bridges them; union everything into the first
            for idx in reversed(hits[1:]):
                other = classes.pop(idx)
                target["members"].extend(other["members"])
                target["coeff"] += other["coeff"]
            target["members"].append(w)
            target["coeff"] += c
        else:
            for idx in maybes:
                unresolved.add((classes[idx]["members"][0], w))
            classes.append({"members": [w], "coeff": c})
    summands = []
    for cl in classes:
        if cl["coeff"] == 0:
            continue
        members = tuple(sorted(cl["members"], key=word_sort_key))
        rep = min((canonical_rep(ctx, m) for m in members), key=word_sort_key)
        summands.append(TraceSummand(cl["coeff"], rep, members))
    summands.sort(key=lambda s: (0 if s.coefficient > 0 else 1, word_sort_key(s.representative)))
    pairs = tuple(sorted(unresolved, key=lambda p: (word_sort_key(p[0]), word_sort_key(p[1]))))
    return MergedTrace(ctx.rank, tuple(summands), pairs)


def format_trace(mt: MergedTrace) -> str:
    """Render as e.g. `+[x1] +[x5^-1] -[e]`; an empty trace is `0`."""
    if not mt.summands:
        return "0"
    parts = []
    for s in mt.summands:
        sign = "+" if s.coefficient > 0 else "-"
        mag = abs(s.coefficient)
        body = f"[{format_word(s.representative)}]"
        parts.append(f"{sign}{body}" if mag == 1 else f"{sign}{mag}*{body}")
    return " ".join(parts)


def reidemeister_trace(beta: BraidWord, m: int, bounds: SearchBounds = SearchBounds()) -> MergedTrace:
    """Merged trace of the m-th iterate of the Artin action of beta."""
    if m < 1:
        raise ValueError("iteration count m must be >= 1")
    theta = endo_power(artin(beta), m)
    ctx = TwistContext.create(theta, bounds)
    return merge(ctx, raw_trace(theta))


# ---------------------------------------------------------------------------
# degenerate classes: twisted classes carried by fixed strands


@dataclass(frozen=True)
class DegenerateFamily:
    """Fixed strand i with theta(x_i) = conj * x_i * conj^-1."""

    strand: int
    conj: FreeWord


def degenerate_families(beta: BraidWord, m: int) -> tuple[DegenerateFamily, ...]:
    """One family per strand fixed by the permutation of beta^m."""
    if m < 1:
        raise ValueError("iteration count m must be >= 1")
    theta = endo_power(artin(beta), m)
    fams = []
    for i in perm(power(beta, m)).fixed_points():
        x_i = FreeWord(beta.strands, (i,))
        lam = conjugator(x_i, apply(theta, x_i))
        if lam is None:  # braid images are conjugates of generators
            raise AssertionError(f"image of x{i} is not a conjugate of x{i}")
        fams.append(DegenerateFamily(i, lam))
    return tuple(fams)


def is_degenerate(ctx: TwistContext, gamma: FreeWord, families: tuple[DegenerateFamily, ...]) -> Decision:
    """Is gamma twisted conjugate to conj_i * x_i^k for some family and |k| <= k_max?

    The conjugating word of a fixed strand is only determined up to powers
    of that strand's generator, hence the bounded sweep over k.
    """
    saw_unknown = False
    ks = [0]
    for k in range(1, ctx.k_max + 1):
        ks.extend((k, -k))
    for fam in families:
        for k in ks:
            probe = concat(fam.conj, FreeWord(ctx.rank, (fam.strand if k > 0 else -fam.strand,) * abs(k)))
            d = twisted_conj(ctx, probe, gamma)
            if d.is_yes:
                return Decision.make_yes(d.witness, ("family", fam.strand, k))
            if d.is_unknown:
                saw_unknown = True
    if saw_unknown:
        return Decision.make_unknown(("families", ctx.k_max))
    return Decision.make_no(("families", ctx.k_max))


@dataclass(frozen=True)
class TraceClass:
    """A merged trace class annotated with its degeneracy decision."""

    coefficient: int
    representative: FreeWord
    degeneracy: Decision
    members: tuple[FreeWord, ...] = field(default=(), compare=False)


def essential_nondegenerate(beta: BraidWord, m: int, bounds: SearchBounds = SearchBounds()) -> tuple[TraceClass, ...]:
    """All essential classes of the m-th iterate, each with a degeneracy verdict.

    Callers keep the classes with degeneracy No (strict) or not Yes
    (permissive) depending on how they treat Unknown.
    """
    theta = endo_power(artin(beta), m)
    ctx = TwistContext.create(theta, bounds)
    trace = merge(ctx, raw_trace(theta))
    fams = degenerate_families(beta, m)
    return tuple(
        TraceClass(s.coefficient, s.representative, is_degenerate(ctx, s.representative, fams), s.members)
        for s in trace.summands
    )
