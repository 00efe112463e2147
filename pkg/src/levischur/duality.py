"""
Theorem-level verifications: both directions of the double centralizer
on the enhanced tensor space, per-layer endomorphism decomposition, and
faithfulness of the layer actions.

Every check is an explicit commutant computation over the exact field,
compared against an independently constructed span.  The first
direction carries no restriction on the degree; the second is only
asserted when r <= m+n and otherwise reported as an observation
(containment of the generator image in the commutant holds regardless
and is always checked).
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from functools import lru_cache

from . import combinatorics as comb
from . import enhanced_core as enh
from . import hecke
from .combinatorics import Shape
from .linalg import (
    DEFAULT_SIZE_CAP,
    AlgebraSpan,
    Echelon,
    ExactMatrix,
    check_size_cap,
    commutant,
    span_of,
    spans_equal,
)


@lru_cache(maxsize=None)
def _commutant_of_d(shape: Shape, size_cap: int) -> AlgebraSpan:
    d = shape.dim_enhanced
    gens = hecke.d_algebra(shape, size_cap).basis
    return commutant(gens, d, field=shape.field, size_cap=size_cap)


@lru_cache(maxsize=None)
def _commutant_of_levi(shape: Shape, size_cap: int) -> AlgebraSpan:
    d = shape.dim_enhanced
    gens = enh.levi_span(shape).basis
    return commutant(gens, d, field=shape.field, size_cap=size_cap)


@dataclass(frozen=True)
class FirstDualityResult:
    dim_levi: int
    dim_commutant_D: int
    holds: bool


def verify_first(
    shape: Shape, size_cap: int = DEFAULT_SIZE_CAP
) -> FirstDualityResult:
    """Commutant of the generator image equals the Levi span.

    This direction has no degree restriction and must hold at every
    shape.  Commutant inputs are canonical span bases, so the outcome
    is independent of generator enumeration order.
    """
    check_size_cap(shape.dim_enhanced, size_cap)
    levi = enh.levi_span(shape)
    comm = _commutant_of_d(shape, size_cap)
    return FirstDualityResult(
        dim_levi=levi.dimension,
        dim_commutant_D=comm.dimension,
        holds=spans_equal(comm, levi),
    )


@dataclass(frozen=True)
class SecondDualityResult:
    dim_D: int
    dim_commutant_levi: int
    containment_holds: bool
    spans_equal: bool
    gated: bool

    @property
    def holds(self) -> bool:
        """True when the gated assertion is satisfied."""
        return self.spans_equal if self.gated else self.containment_holds


def verify_second(
    shape: Shape, size_cap: int = DEFAULT_SIZE_CAP
) -> SecondDualityResult:
    """Commutant of the Levi span against the generator image.

    Containment of the image in the commutant is unconditional.  Span
    equality is asserted only for r <= m+n; beyond that it is computed
    and reported without gating.
    """
    check_size_cap(shape.dim_enhanced, size_cap)
    dmat = hecke.d_algebra(shape, size_cap)
    comm = _commutant_of_levi(shape, size_cap)
    contained = all(comm.contains(m) for m in dmat.basis)
    return SecondDualityResult(
        dim_D=dmat.dimension,
        dim_commutant_levi=comm.dimension,
        containment_holds=contained,
        spans_equal=spans_equal(comm, dmat),
        gated=shape.r <= shape.m + shape.n,
    )


@dataclass(frozen=True)
class LayerEndoReport:
    per_layer_dims: tuple[int, ...]
    per_layer_equal: tuple[bool, ...]
    sum_matches_commutant: bool

    @property
    def holds(self) -> bool:
        return all(self.per_layer_equal) and self.sum_matches_commutant


def _restrict(mat: ExactMatrix, positions: list[int]) -> ExactMatrix:
    index = {p: k for k, p in enumerate(positions)}
    entries = {}
    for (r, c), v in mat.entries.items():
        if r in index and c in index:
            entries[(index[r], index[c])] = v
    return ExactMatrix(mat.field, len(positions), len(positions), entries)


def _extend(mat: ExactMatrix, positions: list[int], d: int) -> ExactMatrix:
    entries = {
        (positions[r], positions[c]): v for (r, c), v in mat.entries.items()
    }
    return ExactMatrix(mat.field, d, d, entries)


def verify_layer_endos(
    shape: Shape, size_cap: int = DEFAULT_SIZE_CAP
) -> LayerEndoReport:
    """Per-layer commutants against the layer algebras.

    For each layer the commutant of the restricted Levi action is
    computed inside the endomorphisms of that layer, zero-extended, and
    compared with the closed layer algebra; the direct sum over layers
    is compared with the full commutant.
    """
    d = shape.dim_enhanced
    check_size_cap(d, size_cap)
    levi_mats = [enh.rho_levi(b, shape) for b in enh.levi_basis(shape)]
    dims: list[int] = []
    equal: list[bool] = []
    extended: list[ExactMatrix] = []
    for l in range(shape.r + 1):
        positions = list(enh.layer_positions(shape, l))
        gens = [_restrict(m, positions) for m in levi_mats]
        gens = [g for g in gens if not g.is_zero()]
        comm_l = commutant(
            gens, len(positions), field=shape.field, size_cap=size_cap
        )
        ext = [_extend(m, positions, d) for m in comm_l.basis]
        extended.extend(ext)
        layer_alg = hecke.d_layer_algebra(l, shape, size_cap)
        dims.append(comm_l.dimension)
        equal.append(
            spans_equal(
                span_of(ext, d=d, field=shape.field), layer_alg
            )
        )
    full = _commutant_of_levi(shape, size_cap)
    direct_sum = span_of(extended, d=d, field=shape.field)
    return LayerEndoReport(
        per_layer_dims=tuple(dims),
        per_layer_equal=tuple(equal),
        sum_matches_commutant=spans_equal(direct_sum, full),
    )


def verify_faithful_layer_action(
    shape: Shape, l: int, size_cap: int = DEFAULT_SIZE_CAP
) -> bool:
    """No nonzero layer-l vector is killed by every degree-l element.

    Stacks the layer-restricted columns of every degree-l basis matrix
    and checks the kernel is trivial.
    """
    if not 1 <= l <= shape.r:
        raise ValueError(f"layer {l} out of range 1..{shape.r}")
    check_size_cap(shape.dim_enhanced, size_cap)
    positions = list(enh.layer_positions(shape, l))
    index = {p: k for k, p in enumerate(positions)}
    ech = Echelon(shape.field)
    for pair in comb.orbit_reps(shape, l):
        mat = enh.rho_levi(enh.LeviBasisElement(pair, l), shape)
        rows: dict[int, dict] = {}
        for (r, c), v in mat.entries.items():
            if c in index:
                rows.setdefault(r, {})[index[c]] = v
        for row in rows.values():
            ech.add(row)
    return ech.rank == len(positions)


@dataclass(frozen=True)
class DualityReport:
    """Everything the theorem-level verification produces for a shape."""

    m: int
    n: int
    r: int
    vparity: int
    field_name: str
    dim_ambient: int
    dim_levi: int
    dim_D: int
    dim_commutant_D: int
    dim_commutant_levi: int
    first_isomorphism_holds: bool
    second_isomorphism_holds: bool
    second_containment_holds: bool
    r_le_mplusn: bool
    per_layer_orbits: tuple[int, ...]
    per_layer_endo_dims: tuple[int, ...]
    per_layer_endo_equal: tuple[bool, ...]
    layer_sum_matches: bool
    faithful_layers: tuple[bool, ...]
    levi_rank_matches_basis: bool
    seconds: float = field(compare=False, default=0.0)

    @property
    def all_gated_hold(self) -> bool:
        checks = [
            self.first_isomorphism_holds,
            self.second_containment_holds,
            all(self.per_layer_endo_equal),
            self.layer_sum_matches,
            all(self.faithful_layers),
            self.levi_rank_matches_basis,
        ]
        if self.r_le_mplusn:
            checks.append(self.second_isomorphism_holds)
        return all(checks)


def run_duality(shape: Shape, size_cap: int = DEFAULT_SIZE_CAP) -> DualityReport:
    """Run every verification for one shape and collect a report."""
    t0 = time.perf_counter()
    first = verify_first(shape, size_cap)
    second = verify_second(shape, size_cap)
    layers = verify_layer_endos(shape, size_cap)
    faithful = tuple(
        verify_faithful_layer_action(shape, l, size_cap)
        for l in range(1, shape.r + 1)
    )
    rank_ok = enh.levi_span(shape).dimension == enh.levi_dimension(shape)
    return DualityReport(
        m=shape.m,
        n=shape.n,
        r=shape.r,
        vparity=shape.vparity,
        field_name=shape.field.name,
        dim_ambient=shape.dim_enhanced,
        dim_levi=first.dim_levi,
        dim_D=second.dim_D,
        dim_commutant_D=first.dim_commutant_D,
        dim_commutant_levi=second.dim_commutant_levi,
        first_isomorphism_holds=first.holds,
        second_isomorphism_holds=second.spans_equal,
        second_containment_holds=second.containment_holds,
        r_le_mplusn=shape.r <= shape.m + shape.n,
        per_layer_orbits=tuple(
            len(comb.orbit_reps(shape, l)) for l in range(shape.r + 1)
        ),
        per_layer_endo_dims=layers.per_layer_dims,
        per_layer_endo_equal=layers.per_layer_equal,
        layer_sum_matches=layers.sum_matches_commutant,
        faithful_layers=faithful,
        levi_rank_matches_basis=rank_ok,
        seconds=time.perf_counter() - t0,
    )
