"""
The classical side: signed symmetric group action on the natural tensor
space, the Schur superalgebra basis matrices, structure constants, and
the classical double-centralizer check.

The tensor basis of degree l is indexed by words over 1..m+n in
lexicographic order, fixing row/column numbering for every matrix in
the package.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from . import combinatorics as comb
from .combinatorics import (
    DoubleIndex,
    MultiIndex,
    Permutation,
    Shape,
    add_parities,
    alpha,
    gamma,
)
from .linalg import (
    DEFAULT_SIZE_CAP,
    AlgebraSpan,
    ExactMatrix,
    check_size_cap,
    commutant,
    span_of,
    spans_equal,
)


def natural_basis(shape: Shape, l: int) -> tuple[MultiIndex, ...]:
    """Ordered basis words of the degree-l natural tensor space."""
    return comb.natural_words(shape, l)


def word_position(word: MultiIndex, shape: Shape) -> int:
    """Mixed-radix position of a word in the lexicographic basis."""
    base = shape.m + shape.n
    pos = 0
    for x in word:
        if not 1 <= x <= base:
            raise ValueError(f"letter {x} out of range")
        pos = pos * base + (x - 1)
    return pos


def pi_matrix(w: Permutation, shape: Shape, l: int) -> ExactMatrix:
    """Signed permutation matrix of the right action of ``w``.

    The basis word ``i`` is sent to ``gamma(eps_i, w)`` times the word
    ``act(i, w)``.  Matrix products compose contravariantly, as always
    when a right action is written with matrices acting on the left:
    ``pi_matrix(compose(s, t)) == pi_matrix(t) @ pi_matrix(s)``.
    """
    if len(w) != l:
        raise ValueError("degree mismatch")
    d = (shape.m + shape.n) ** l
    entries = {}
    for word in natural_basis(shape, l):
        eps = comb.parity_vector(word, shape)
        tgt = comb.act(word, w)
        entries[(word_position(tgt, shape), word_position(word, shape))] = (
            gamma(eps, w)
        )
    return ExactMatrix(shape.field, d, d, entries)


def schur_basis(shape: Shape, l: int) -> tuple[DoubleIndex, ...]:
    """Orbit representatives labelling the degree-l basis."""
    return comb.orbit_reps(shape, l)


def normalize_pair(pair: DoubleIndex, shape: Shape) -> tuple[DoubleIndex, int]:
    """Express a strict pair as (orbit representative, transport sign).

    The basis element labelled by ``pair`` equals ``sign`` times the one
    labelled by the representative.
    """
    rep = comb.canonical_pair(pair, shape)
    if rep is None:
        raise ValueError(f"pair {pair} is not strict")
    return rep, comb.sigma_sign(rep, pair, shape)


def xi_matrix(pair: DoubleIndex, shape: Shape) -> ExactMatrix:
    """Matrix of the basis element labelled by a strict pair.

    Basis word t is sent to the sum of sigma(pair; k, t) *
    alpha(eps_k + eps_t, eps_t) * (word k) over all orbit elements
    (k, t) of ``pair`` whose column matches t.
    """
    if not comb.is_strict(pair, shape):
        raise ValueError(f"pair {pair} is not strict")
    l = len(pair[0])
    d = (shape.m + shape.n) ** l
    entries = {}
    for k, t in comb.orbit_elements(pair):
        sgn = comb.sigma_sign(pair, (k, t), shape)
        ek = comb.parity_vector(k, shape)
        et = comb.parity_vector(t, shape)
        val = sgn * alpha(add_parities(ek, et), et)
        entries[(word_position(k, shape), word_position(t, shape))] = val
    return ExactMatrix(shape.field, d, d, entries)


def structure_constants(
    a: DoubleIndex, b: DoubleIndex, shape: Shape
) -> dict[DoubleIndex, int]:
    """Coefficients of the product of two basis elements.

    Returns a map from orbit representatives to integer coefficients;
    the coefficient at (s, t) sums sigma(a; s, h) * sigma(b; h, t) *
    alpha(eps_s + eps_h, eps_h + eps_t) over the connecting words h.
    """
    l = len(a[0])
    if len(b[0]) != l:
        raise ValueError("degree mismatch")
    canon_a = comb.canonical_pair(a, shape)
    canon_b = comb.canonical_pair(b, shape)
    if canon_a is None or canon_b is None:
        raise ValueError("pairs must be strict")
    out: dict[DoubleIndex, int] = {}
    for s, t in schur_basis(shape, l):
        es = comb.parity_vector(s, shape)
        et = comb.parity_vector(t, shape)
        total = 0
        for h in comb.natural_words(shape, l):
            if comb.canonical_pair((s, h), shape) != canon_a:
                continue
            if comb.canonical_pair((h, t), shape) != canon_b:
                continue
            eh = comb.parity_vector(h, shape)
            total += (
                comb.sigma_sign(a, (s, h), shape)
                * comb.sigma_sign(b, (h, t), shape)
                * alpha(add_parities(es, eh), add_parities(eh, et))
            )
        if total:
            out[(s, t)] = total
    return out


@lru_cache(maxsize=None)
def schur_span(shape: Shape, l: int) -> AlgebraSpan:
    """Span of all basis matrices of degree l."""
    mats = [xi_matrix(p, shape) for p in schur_basis(shape, l)]
    d = (shape.m + shape.n) ** l
    return span_of(mats, d=d, field=shape.field)


@dataclass(frozen=True)
class ClassicalDualityReport:
    dim_commutant_of_symmetric_group: int
    dim_schur: int
    spans_equal: bool
    r_le_mplusn: bool
    converse_checked: bool
    dim_commutant_of_schur: int | None
    converse_spans_equal: bool | None


def classical_duality(
    shape: Shape, size_cap: int = DEFAULT_SIZE_CAP
) -> ClassicalDualityReport:
    """Check both directions of the classical double centralizer.

    The commutant of the signed symmetric group action always equals
    the span of the basis matrices; the converse (the commutant of that
    span is the image of the group algebra, of dimension r!) is gated
    on r <= m+n and merely reported otherwise.
    """
    r = shape.r
    d = (shape.m + shape.n) ** r
    check_size_cap(d, size_cap)
    swaps = [
        pi_matrix(comb.adjacent_transposition(r, i), shape, r)
        for i in range(1, r)
    ]
    schur = schur_span(shape, r)
    comm = commutant(swaps, d, field=shape.field, size_cap=size_cap)
    forward = spans_equal(comm, schur)

    r_small = r <= shape.m + shape.n
    comm2 = commutant(schur.basis, d, field=shape.field, size_cap=size_cap)
    group_span = span_of(
        [pi_matrix(w, shape, r) for w in comb.perms(r)], d=d, field=shape.field
    )
    converse = spans_equal(comm2, group_span)
    return ClassicalDualityReport(
        dim_commutant_of_symmetric_group=comm.dimension,
        dim_schur=schur.dimension,
        spans_equal=forward,
        r_le_mplusn=r_small,
        converse_checked=True,
        dim_commutant_of_schur=comm2.dimension,
        converse_spans_equal=converse,
    )
