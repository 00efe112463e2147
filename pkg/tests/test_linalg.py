"""Exact matrices, spans, commutants and closures.

The commutant implementation skips generators whose constraints are
already implied; ``naive_commutant`` below stacks every equation with
no shortcuts and serves as the independent oracle for it.
"""

import random
from fractions import Fraction

import pytest

from levischur.linalg import (
    QQ,
    AlgebraSpan,
    Echelon,
    ExactMatrix,
    PrimeField,
    SizeCapExceeded,
    algebra_closure,
    commutant,
    in_span,
    parse_field,
    rank_of_rows,
    span_of,
    spans_equal,
)
from levischur.linalg import _commutation_rows


def units(field, d):
    """All matrix units of size d."""
    return [
        ExactMatrix(field, d, d, {(i, j): 1})
        for i in range(d)
        for j in range(d)
    ]


def naive_commutant(gens, d, field):
    """Oracle: stack every commutation equation, then extract."""
    ech = Echelon(field)
    for g in gens:
        for row in _commutation_rows(g, d):
            ech.add(row)
    out = Echelon(field)
    for vec in ech.null_space(d * d):
        out.add(vec)
    return AlgebraSpan(field, d, out)


def random_sign_matrix(rng, field, d, nnz):
    entries = {}
    for _ in range(nnz):
        entries[(rng.randrange(d), rng.randrange(d))] = rng.choice((1, -1))
    return ExactMatrix(field, d, d, entries)


# ---------------------------------------------------------------------------
# fields


def test_parse_field():
    assert parse_field("q") == QQ
    assert parse_field("p:7") == PrimeField(7)
    with pytest.raises(ValueError):
        parse_field("p:2")
    with pytest.raises(ValueError):
        parse_field("p:9")
    with pytest.raises(ValueError):
        parse_field("r")


def test_prime_field_ops():
    f = PrimeField(5)
    assert f.add(3, 4) == 2
    assert f.mul(3, 4) == 2
    assert f.inv(2) == 3
    assert f.coerce(Fraction(1, 2)) == 3
    with pytest.raises(ZeroDivisionError):
        f.inv(0)


# ---------------------------------------------------------------------------
# matrices


def test_matrix_basics():
    a = ExactMatrix(QQ, 2, 2, {(0, 1): 1})
    b = ExactMatrix(QQ, 2, 2, {(1, 0): 1})
    assert (a @ b).entries == {(0, 0): Fraction(1)}
    assert (b @ a).entries == {(1, 1): Fraction(1)}
    assert (a + a.scale(-1)).is_zero()
    assert a.scale(2).entries == {(0, 1): Fraction(2)}
    eye = ExactMatrix.identity(QQ, 2)
    assert eye @ a == a and a @ eye == a
    assert eye.trace() == 2
    assert not a.commutes_with(b)
    assert eye.commutes_with(a)
    with pytest.raises(ValueError):
        a @ ExactMatrix(QQ, 3, 3, {})
    with pytest.raises(ValueError):
        a + ExactMatrix(QQ, 2, 3, {})


def test_matrix_drops_zeros_and_flattens():
    a = ExactMatrix(QQ, 2, 3, {(0, 0): 0, (1, 2): 5})
    assert a.entries == {(1, 2): Fraction(5)}
    assert a.flatten() == {5: Fraction(5)}
    back = ExactMatrix.unflatten(QQ, 2, {3: Fraction(7)})
    assert back.entries == {(1, 1): Fraction(7)}


# ---------------------------------------------------------------------------
# spans


def test_span_examples():
    assert span_of([], d=3, field=QQ).dimension == 0
    a = ExactMatrix(QQ, 2, 2, {(0, 0): 1, (1, 1): 2})
    assert span_of([a, a.scale(2)]).dimension == 1
    assert span_of(units(QQ, 2)).dimension == 4


def test_in_span_examples():
    a = ExactMatrix(QQ, 2, 2, {(0, 1): 3})
    s = span_of([a])
    assert in_span(ExactMatrix.zero(QQ, 2, 2), s)
    assert in_span(a, s)
    assert in_span(a.scale(Fraction(2, 7)), s)
    assert not in_span(ExactMatrix.identity(QQ, 2), s)
    with pytest.raises(ValueError):
        in_span(ExactMatrix.identity(QQ, 3), s)


def test_spans_equal_examples():
    a = ExactMatrix(QQ, 2, 2, {(0, 1): 1, (1, 0): 2})
    s1 = span_of([a])
    assert spans_equal(s1, s1)
    assert spans_equal(span_of([a]), span_of([a.scale(2)]))
    assert not spans_equal(s1, span_of([a, ExactMatrix.identity(QQ, 2)]))
    with pytest.raises(ValueError):
        spans_equal(s1, span_of([], d=3, field=QQ))


def test_span_canonical_across_generating_sets():
    rng = random.Random(3)
    mats = [random_sign_matrix(rng, QQ, 4, 5) for _ in range(6)]
    s1 = span_of(mats)
    s2 = span_of(list(reversed(mats)) + [mats[0] + mats[1]])
    assert spans_equal(s1, s2)
    assert [m.entries for m in s1.basis] == [m.entries for m in s2.basis]


# ---------------------------------------------------------------------------
# commutant


def test_commutant_of_identity_is_everything():
    c = commutant([ExactMatrix.identity(QQ, 3)], 3)
    assert c.dimension == 9


def test_commutant_of_full_algebra_is_scalars():
    c = commutant(units(QQ, 3), 3)
    assert c.dimension == 1
    assert c.contains(ExactMatrix.identity(QQ, 3))


def test_commutant_contains_identity_and_closes():
    rng = random.Random(7)
    gens = [random_sign_matrix(rng, QQ, 4, 4) for _ in range(3)]
    c = commutant(gens, 4)
    assert c.contains(ExactMatrix.identity(QQ, 4))
    closed = algebra_closure(c.basis, include_identity=False)
    assert spans_equal(closed, c)


def test_double_commutant_sanity():
    for d in (2, 3, 6):
        full = commutant(commutant(units(QQ, d), d).basis, d)
        assert full.dimension == d * d


def test_commutant_matches_naive_oracle():
    rng = random.Random(17)
    for d in (3, 5):
        for _ in range(4):
            gens = [
                random_sign_matrix(rng, QQ, d, rng.randint(1, d))
                for _ in range(rng.randint(1, 4))
            ]
            fast = commutant(gens, d)
            slow = naive_commutant(gens, d, QQ)
            assert spans_equal(fast, slow)


def test_commutant_spanning_set_invariance():
    rng = random.Random(29)
    gens = [random_sign_matrix(rng, QQ, 4, 4) for _ in range(3)]
    base = commutant(gens, 4)
    doubled = commutant(gens + [g.scale(3) for g in gens], 4)
    summed = commutant(gens + [gens[0] + gens[1]], 4)
    spanned = commutant(span_of(gens).basis, 4)
    assert spans_equal(base, doubled)
    assert spans_equal(base, summed)
    assert spans_equal(base, spanned)


def test_commutant_errors():
    with pytest.raises(ValueError):
        commutant([ExactMatrix(QQ, 2, 3, {})])
    with pytest.raises(SizeCapExceeded):
        commutant([ExactMatrix.identity(QQ, 300)], 300)
    with pytest.raises(SizeCapExceeded):
        commutant([ExactMatrix.identity(QQ, 20)], 20, size_cap=10)


# ---------------------------------------------------------------------------
# closure


def test_closure_examples():
    e12 = ExactMatrix(QQ, 2, 2, {(0, 1): 1})
    e21 = ExactMatrix(QQ, 2, 2, {(1, 0): 1})
    assert algebra_closure([e12, e21], include_identity=True).dimension == 4
    assert algebra_closure([], include_identity=True, d=5, field=QQ).dimension == 1
    nil = ExactMatrix(QQ, 3, 3, {(0, 1): 1, (1, 2): 1})
    assert algebra_closure([nil], include_identity=True).dimension == 3
    assert algebra_closure([nil], include_identity=False).dimension == 2


def test_closure_idempotent_and_product_closed():
    rng = random.Random(41)
    gens = [random_sign_matrix(rng, QQ, 3, 3) for _ in range(2)]
    alg = algebra_closure(gens, include_identity=True)
    again = algebra_closure(alg.basis, include_identity=True)
    assert spans_equal(alg, again)
    for a in alg.basis:
        for b in alg.basis:
            assert alg.contains(a @ b)


# ---------------------------------------------------------------------------
# prime fields agree on sign matrices


def test_prime_field_ranks_agree():
    rng = random.Random(53)
    f = PrimeField(7)
    for _ in range(5):
        coords = [
            ((rng.randrange(4), rng.randrange(4)), rng.choice((1, -1)))
            for _ in range(6)
        ]
        mq = ExactMatrix(QQ, 4, 4, dict(coords))
        mp = ExactMatrix(f, 4, 4, dict(coords))
        assert rank_of_rows([mq.flatten()], QQ) == rank_of_rows(
            [mp.flatten()], f
        )
        cq = commutant([mq], 4)
        cp = commutant([mp], 4, field=f)
        assert cq.dimension == cp.dimension


def test_echelon_canonical_rows():
    ech = Echelon(QQ)
    ech.add({0: Fraction(2), 1: Fraction(4)})
    ech.add({1: Fraction(3)})
    rows = ech.canonical_rows()
    assert rows == [{0: Fraction(1)}, {1: Fraction(1)}]
    assert ech.contains({0: Fraction(5), 1: Fraction(-1)})
    assert not ech.contains({2: Fraction(1)})
