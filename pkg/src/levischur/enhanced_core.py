"""
The enhanced tensor space and the Levi Schur superalgebra acting on it.

The degree-r enhanced space has basis words over the alphabet
``1..m+n+1``: letter ``m+1`` is the extra enhanced vector, letters
``<= m`` keep their meaning and letters ``> m+1`` stand for the odd
natural letters shifted up by one.  The layer of a word is the number
of natural (non-enhanced) letters; the support is the 0-based set of
positions carrying them.

Basis elements of the Levi algebra are a rank-one bottom element (layer
0) together with one element per layer l >= 1 and per orbit
representative of degree l.  Their matrices preserve every fixed
support subspace and annihilate all other layers; the enhanced letters
contribute the configured ``vparity`` to every parity vector, so entries
may genuinely depend on it (the two parities are conjugate by an
explicit diagonal sign matrix, see ``parity_flip_conjugator``).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache

from . import combinatorics as comb
from .combinatorics import (
    DoubleIndex,
    MultiIndex,
    Shape,
    add_parities,
    alpha,
)
from .linalg import AlgebraSpan, ExactMatrix, span_of
from .schur_core import structure_constants

EnhWord = tuple[int, ...]
Support = tuple[int, ...]


def enhanced_letter(shape: Shape) -> int:
    return shape.m + 1


def natural_to_letter(idx: int, shape: Shape) -> int:
    """Relabel a natural letter 1..m+n into the enhanced alphabet."""
    if not 1 <= idx <= shape.m + shape.n:
        raise ValueError(f"letter {idx} out of range")
    return idx if idx <= shape.m else idx + 1


def letter_to_natural(letter: int, shape: Shape) -> int | None:
    """Inverse relabelling; None for the enhanced letter."""
    if not 1 <= letter <= shape.m + shape.n + 1:
        raise ValueError(f"letter {letter} out of range")
    if letter == shape.m + 1:
        return None
    return letter if letter <= shape.m else letter - 1


def letter_parity(letter: int, shape: Shape) -> int:
    nat = letter_to_natural(letter, shape)
    if nat is None:
        return shape.vparity
    return comb.parity_of_index(nat, shape)


@lru_cache(maxsize=None)
def _enh_words(num_letters: int, r: int) -> tuple[EnhWord, ...]:
    return tuple(itertools.product(range(1, num_letters + 1), repeat=r))


def enhanced_basis(shape: Shape) -> tuple[EnhWord, ...]:
    """All enhanced words of degree r, lexicographically ordered."""
    return _enh_words(shape.m + shape.n + 1, shape.r)


def enh_position(word: EnhWord, shape: Shape) -> int:
    base = shape.m + shape.n + 1
    pos = 0
    for x in word:
        pos = pos * base + (x - 1)
    return pos


def enh_encode(core: MultiIndex, support: Support, shape: Shape) -> EnhWord:
    """Word with the k-th core letter at the k-th smallest support slot.

    ``support`` is a set of 0-based positions; all other slots hold the
    enhanced letter.
    """
    supp = tuple(sorted(support))
    if len(supp) != len(core):
        raise ValueError("support size does not match core length")
    if supp and not (0 <= supp[0] and supp[-1] < shape.r):
        raise ValueError("support positions out of range")
    word = [enhanced_letter(shape)] * shape.r
    for k, p in enumerate(supp):
        word[p] = natural_to_letter(core[k], shape)
    return tuple(word)


def enh_decode(word: EnhWord, shape: Shape) -> tuple[MultiIndex, Support]:
    """Recover (core word, support) from an enhanced word."""
    core = []
    supp = []
    for p, letter in enumerate(word):
        nat = letter_to_natural(letter, shape)
        if nat is not None:
            core.append(nat)
            supp.append(p)
    return tuple(core), tuple(supp)


def word_layer(word: EnhWord, shape: Shape) -> int:
    enh = enhanced_letter(shape)
    return sum(1 for x in word if x != enh)


def enh_parity_vector(word: EnhWord, shape: Shape) -> tuple[int, ...]:
    return tuple(letter_parity(x, shape) for x in word)


def layer_positions(shape: Shape, l: int) -> tuple[int, ...]:
    """Basis positions of the words of layer l."""
    return tuple(
        p
        for p, w in enumerate(enhanced_basis(shape))
        if word_layer(w, shape) == l
    )


@dataclass(frozen=True)
class LeviBasisElement:
    """Either the bottom projector (layer 0, empty pair) or an orbit
    representative of degree ``layer``."""

    pair: DoubleIndex
    layer: int

    def __post_init__(self):
        if self.layer != len(self.pair[0]) or self.layer != len(self.pair[1]):
            raise ValueError("layer must equal the pair degree")

    @property
    def is_bottom(self) -> bool:
        return self.layer == 0

    def parity(self, shape: Shape) -> int:
        return comb.pair_parity(self.pair, shape)


BOTTOM = LeviBasisElement(((), ()), 0)


def levi_basis(shape: Shape) -> tuple[LeviBasisElement, ...]:
    """Bottom element first, then layers 1..r in representative order."""
    out = [BOTTOM]
    for l in range(1, shape.r + 1):
        out.extend(
            LeviBasisElement(p, l) for p in comb.orbit_reps(shape, l)
        )
    return tuple(out)


def embed_alpha(l: int, pair: DoubleIndex, shape: Shape) -> LeviBasisElement:
    """Embed a degree-l basis label at layer l."""
    if len(pair[0]) != l:
        raise ValueError("degree mismatch")
    if not comb.is_strict(pair, shape):
        raise ValueError(f"pair {pair} is not strict")
    return LeviBasisElement(pair, l)


@lru_cache(maxsize=None)
def rho_levi(b: LeviBasisElement, shape: Shape) -> ExactMatrix:
    """Matrix of a Levi basis element on the enhanced tensor space.

    On a basis word of layer equal to ``b.layer`` with support I and
    core t, the image is the sum over orbit elements (k, t) of
    sigma(b.pair; k, t) * alpha(eps_{k,I} + eps_{t,I}, eps_{t,I}) times
    the word with core k on the same support; all other layers are
    annihilated.  The parity vectors have full length r, with enhanced
    slots contributing ``vparity``.
    """
    l = b.layer
    r = shape.r
    d = shape.dim_enhanced
    entries = {}
    orbit = comb.orbit_elements(b.pair)
    signs = {kt: comb.sigma_sign(b.pair, kt, shape) for kt in orbit}
    for supp in itertools.combinations(range(r), l):
        for k, t in orbit:
            wk = enh_encode(k, supp, shape)
            wt = enh_encode(t, supp, shape)
            ek = enh_parity_vector(wk, shape)
            et = enh_parity_vector(wt, shape)
            val = signs[(k, t)] * alpha(add_parities(ek, et), et)
            entries[(enh_position(wk, shape), enh_position(wt, shape))] = val
    return ExactMatrix(shape.field, d, d, entries)


def rho_bottom(shape: Shape) -> ExactMatrix:
    """Rank-one projector fixing the all-enhanced word."""
    return rho_levi(BOTTOM, shape)


def levi_product(
    a: LeviBasisElement, b: LeviBasisElement, shape: Shape
) -> dict[LeviBasisElement, int]:
    """Product of two basis elements expanded in the basis.

    Zero whenever the layers differ; within a layer the classical
    structure constants apply (degenerating at layer 0 to the bottom
    element being idempotent).
    """
    if a.layer != b.layer:
        return {}
    coeffs = structure_constants(a.pair, b.pair, shape)
    return {
        LeviBasisElement(rep, a.layer): c for rep, c in coeffs.items()
    }


@lru_cache(maxsize=None)
def levi_span(shape: Shape) -> AlgebraSpan:
    """Canonical span of all Levi basis matrices."""
    mats = [rho_levi(b, shape) for b in levi_basis(shape)]
    return span_of(mats, d=shape.dim_enhanced, field=shape.field)


def levi_dimension(shape: Shape) -> int:
    """Basis count: one bottom element plus all orbit representatives."""
    return 1 + sum(
        len(comb.orbit_reps(shape, l)) for l in range(1, shape.r + 1)
    )


def parity_flip_conjugator(shape: Shape) -> ExactMatrix:
    """Diagonal sign matrix relating the two enhanced-vector parities.

    The entry at a word is -1 raised to the number of inversions between
    enhanced slots and later odd natural letters.  Conjugating any Levi
    basis matrix built with vparity 1 by this matrix yields its vparity
    0 counterpart; the same holds for the layer permutation generators
    (which live on leading supports where the count vanishes), but not
    for the signed swaps, whose action on two adjacent enhanced slots
    genuinely changes sign with the parity.  The matrix is its own
    inverse.
    """
    d = shape.dim_enhanced
    enh = enhanced_letter(shape)
    entries = {}
    for pos, word in enumerate(enhanced_basis(shape)):
        count = 0
        enh_seen = 0
        for letter in word:
            if letter == enh:
                enh_seen += 1
            else:
                nat = letter_to_natural(letter, shape)
                if comb.parity_of_index(nat, shape):
                    count += enh_seen
        entries[(pos, pos)] = -1 if count % 2 else 1
    return ExactMatrix(shape.field, d, d, entries)
