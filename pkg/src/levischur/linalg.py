"""
Exact sparse linear algebra over the rationals or an odd prime field.

Everything downstream (representation matrices, commutants, algebra
closures) is built on three pieces:

  * a tiny field abstraction (``QQ`` and ``PrimeField(p)``),
  * ``ExactMatrix``, a sparse coordinate matrix with exact entries,
  * ``Echelon``, an incrementally maintained *reduced* row echelon form.

The echelon form is canonical (monic pivots, pivot columns eliminated
everywhere, rows ordered by pivot column), so two subspaces are equal
iff their canonical bases are identical.  ``AlgebraSpan`` wraps an
echelon of flattened d x d matrices and supports membership, equality,
commutant and closure computations.

All values are immutable after construction; nothing here ever touches
floating point.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

DEFAULT_SIZE_CAP = 256

# Commutant solving switches from equation stacking to explicit
# commutation tests once the remaining null space is this small.
_NULL_TEST_MAX = 128


class SizeCapExceeded(ValueError):
    """Ambient dimension larger than the configured size cap."""


def check_size_cap(d: int, size_cap: int) -> None:
    if d > size_cap:
        raise SizeCapExceeded(
            f"ambient dimension {d} exceeds size cap {size_cap}"
        )


# ---------------------------------------------------------------------------
# fields


class RationalField:
    """Arbitrary-precision rationals; the authoritative field."""

    name = "q"

    def __init__(self):
        self.zero = Fraction(0)
        self.one = Fraction(1)

    def coerce(self, x) -> Fraction:
        return Fraction(x)

    @staticmethod
    def add(a, b):
        return a + b

    @staticmethod
    def sub(a, b):
        return a - b

    @staticmethod
    def mul(a, b):
        return a * b

    @staticmethod
    def neg(a):
        return -a

    @staticmethod
    def inv(a):
        return 1 / a

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash("RationalField")

    def __repr__(self):
        return "QQ"


def _is_odd_prime(p: int) -> bool:
    if p < 3 or p % 2 == 0:
        return False
    f = 3
    while f * f <= p:
        if p % f == 0:
            return False
        f += 2
    return True


class PrimeField:
    """Integers mod an odd prime.  Characteristic 2 is rejected."""

    def __init__(self, p: int):
        if not _is_odd_prime(p):
            raise ValueError(f"field order must be an odd prime, got {p}")
        self.p = p
        self.name = f"p:{p}"
        self.zero = 0
        self.one = 1

    def coerce(self, x):
        if isinstance(x, Fraction):
            num, den = x.numerator, x.denominator
            return (num % self.p) * self.inv(den % self.p) % self.p
        return int(x) % self.p

    def add(self, a, b):
        return (a + b) % self.p

    def sub(self, a, b):
        return (a - b) % self.p

    def mul(self, a, b):
        return (a * b) % self.p

    def neg(self, a):
        return (-a) % self.p

    def inv(self, a):
        a %= self.p
        if a == 0:
            raise ZeroDivisionError("inverse of zero in prime field")
        return pow(a, self.p - 2, self.p)

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("PrimeField", self.p))

    def __repr__(self):
        return f"GF({self.p})"


QQ = RationalField()


def parse_field(spec: str):
    """Parse a field flag: ``"q"`` or ``"p:<odd prime>"``."""
    if spec == "q":
        return QQ
    if spec.startswith("p:"):
        return PrimeField(int(spec[2:]))
    raise ValueError(f"unknown field spec {spec!r}")


# ---------------------------------------------------------------------------
# sparse matrices


class ExactMatrix:
    """Immutable sparse matrix over an exact field.

    ``entries`` maps ``(row, col)`` to a nonzero field scalar.  The
    constructor drops explicit zeros and coerces values into the field,
    so matrices can be built from plain ints.
    """

    __slots__ = ("field", "nrows", "ncols", "entries", "_rows")

    def __init__(self, field, nrows: int, ncols: int, entries=None):
        self.field = field
        self.nrows = nrows
        self.ncols = ncols
        clean = {}
        if entries:
            for pos, val in entries.items():
                v = field.coerce(val)
                if v != field.zero:
                    r, c = pos
                    if not (0 <= r < nrows and 0 <= c < ncols):
                        raise ValueError(f"entry {pos} outside {nrows}x{ncols}")
                    clean[pos] = v
        self.entries = clean
        self._rows = None

    @classmethod
    def identity(cls, field, d: int) -> "ExactMatrix":
        return cls(field, d, d, {(i, i): field.one for i in range(d)})

    @classmethod
    def zero(cls, field, nrows: int, ncols: int) -> "ExactMatrix":
        return cls(field, nrows, ncols, {})

    def _row_adj(self):
        if self._rows is None:
            rows: dict[int, list] = {}
            for (r, c), v in self.entries.items():
                rows.setdefault(r, []).append((c, v))
            self._rows = rows
        return self._rows

    def row_support(self):
        return set(r for (r, _c) in self.entries)

    def col_support(self):
        return set(c for (_r, c) in self.entries)

    def row_entries(self, r: int):
        return self._row_adj().get(r, [])

    def __add__(self, other: "ExactMatrix") -> "ExactMatrix":
        self._check_same_shape(other)
        f = self.field
        out = dict(self.entries)
        for pos, v in other.entries.items():
            s = f.add(out.get(pos, f.zero), v)
            if s == f.zero:
                out.pop(pos, None)
            else:
                out[pos] = s
        return ExactMatrix(f, self.nrows, self.ncols, out)

    def __sub__(self, other: "ExactMatrix") -> "ExactMatrix":
        return self + other.scale(-1)

    def scale(self, c) -> "ExactMatrix":
        f = self.field
        c = f.coerce(c)
        if c == f.zero:
            return ExactMatrix.zero(f, self.nrows, self.ncols)
        return ExactMatrix(
            f, self.nrows, self.ncols,
            {pos: f.mul(v, c) for pos, v in self.entries.items()},
        )

    def __matmul__(self, other: "ExactMatrix") -> "ExactMatrix":
        if self.field != other.field:
            raise ValueError("field mismatch")
        if self.ncols != other.nrows:
            raise ValueError(
                f"cannot multiply {self.nrows}x{self.ncols} by "
                f"{other.nrows}x{other.ncols}"
            )
        f = self.field
        zero = f.zero
        mul, add = f.mul, f.add
        badj = other._row_adj()
        out: dict = {}
        for (r, k), va in self.entries.items():
            for c, vb in badj.get(k, ()):
                pos = (r, c)
                s = add(out.get(pos, zero), mul(va, vb))
                if s == zero:
                    out.pop(pos, None)
                else:
                    out[pos] = s
        return ExactMatrix(f, self.nrows, other.ncols, out)

    def commutes_with(self, other: "ExactMatrix") -> bool:
        return (self @ other).entries == (other @ self).entries

    def is_zero(self) -> bool:
        return not self.entries

    def trace(self):
        f = self.field
        t = f.zero
        for (r, c), v in self.entries.items():
            if r == c:
                t = f.add(t, v)
        return t

    def flatten(self) -> dict:
        """Row vector of length nrows*ncols, row-major, as a sparse dict."""
        n = self.ncols
        return {r * n + c: v for (r, c), v in self.entries.items()}

    @classmethod
    def unflatten(cls, field, d: int, row: dict) -> "ExactMatrix":
        return cls(field, d, d, {divmod(k, d): v for k, v in row.items()})

    def _check_same_shape(self, other: "ExactMatrix"):
        if self.field != other.field:
            raise ValueError("field mismatch")
        if (self.nrows, self.ncols) != (other.nrows, other.ncols):
            raise ValueError("dimension mismatch")

    def __eq__(self, other):
        return (
            isinstance(other, ExactMatrix)
            and self.field == other.field
            and self.nrows == other.nrows
            and self.ncols == other.ncols
            and self.entries == other.entries
        )

    def __hash__(self):
        return hash(
            (self.nrows, self.ncols, frozenset(self.entries.items()))
        )

    def __repr__(self):
        return (
            f"ExactMatrix({self.nrows}x{self.ncols}, "
            f"nnz={len(self.entries)})"
        )


# ---------------------------------------------------------------------------
# reduced row echelon form


class Echelon:
    """Incrementally maintained reduced row echelon form.

    Rows are sparse dicts ``col -> scalar``.  Invariants: every stored
    row is monic at its pivot column, and pivot columns appear in no
    other stored row.  This keeps single-pass reduction valid and makes
    the basis canonical.
    """

    def __init__(self, field):
        self.field = field
        self.rows: dict[int, dict] = {}        # pivot col -> row
        self._colindex: dict[int, set] = {}    # col -> pivot cols touching it

    @property
    def rank(self) -> int:
        return len(self.rows)

    def reduce(self, row: dict) -> dict:
        """Fully reduce a copy of ``row`` against the current basis."""
        f = self.field
        zero, sub, mul = f.zero, f.sub, f.mul
        row = dict(row)
        # pivot rows only carry non-pivot columns besides their own pivot,
        # so one pass over the initial pivot hits is a complete reduction
        hits = [c for c in row if c in self.rows]
        for c in hits:
            coeff = row.pop(c)
            for col, v in self.rows[c].items():
                if col == c:
                    continue
                s = sub(row.get(col, zero), mul(coeff, v))
                if s == zero:
                    row.pop(col, None)
                else:
                    row[col] = s
        return row

    def add(self, row: dict) -> bool:
        """Insert a row; returns True if it enlarged the span."""
        f = self.field
        red = self.reduce(row)
        if not red:
            return False
        p = min(red)
        inv = f.inv(red[p])
        if inv != f.one:
            red = {c: f.mul(v, inv) for c, v in red.items()}
        # eliminate the new pivot column from every existing row
        zero, sub, mul = f.zero, f.sub, f.mul
        touch = self._colindex.pop(p, set())
        for q in touch:
            r = self.rows[q]
            coeff = r.pop(p)
            for col, v in red.items():
                if col == p:
                    continue
                s = sub(r.get(col, zero), mul(coeff, v))
                if s == zero:
                    if col in r:
                        del r[col]
                        self._colindex[col].discard(q)
                else:
                    if col not in r:
                        self._colindex.setdefault(col, set()).add(q)
                    r[col] = s
        self.rows[p] = red
        for col in red:
            self._colindex.setdefault(col, set()).add(p)
        return True

    def contains(self, row: dict) -> bool:
        return not self.reduce(row)

    def canonical_rows(self) -> list:
        return [self.rows[p] for p in sorted(self.rows)]

    def null_space(self, ncols: int) -> list[dict]:
        """Basis of the solution space of (this row space) . x = 0."""
        f = self.field
        out = []
        for c in range(ncols):
            if c in self.rows:
                continue
            vec = {c: f.one}
            for p in self._colindex.get(c, ()):
                vec[p] = f.neg(self.rows[p][c])
            out.append(vec)
        return out


def rank_of_rows(rows: Iterable[dict], field) -> int:
    ech = Echelon(field)
    for row in rows:
        ech.add(row)
    return ech.rank


# ---------------------------------------------------------------------------
# spans of square matrices


class AlgebraSpan:
    """Canonically echelonized span of d x d matrices."""

    __slots__ = ("field", "ambient_dim", "_ech", "_basis")

    def __init__(self, field, ambient_dim: int, echelon: Echelon):
        self.field = field
        self.ambient_dim = ambient_dim
        self._ech = echelon
        self._basis = None

    @property
    def dimension(self) -> int:
        return self._ech.rank

    @property
    def basis(self) -> list[ExactMatrix]:
        """Canonical basis, ordered by pivot position."""
        if self._basis is None:
            d = self.ambient_dim
            self._basis = [
                ExactMatrix.unflatten(self.field, d, row)
                for row in self._ech.canonical_rows()
            ]
        return self._basis

    def contains(self, mat: ExactMatrix) -> bool:
        self._check_compatible(mat)
        return self._ech.contains(mat.flatten())

    def _check_compatible(self, mat: ExactMatrix):
        if mat.field != self.field:
            raise ValueError("field mismatch")
        if (mat.nrows, mat.ncols) != (self.ambient_dim, self.ambient_dim):
            raise ValueError("dimension mismatch")

    def __eq__(self, other):
        if not isinstance(other, AlgebraSpan):
            return NotImplemented
        if self.field != other.field:
            return False
        if self.ambient_dim != other.ambient_dim:
            raise ValueError("dimension mismatch")
        return self._ech.rows == other._ech.rows

    def __hash__(self):
        return hash((self.ambient_dim, self.dimension))

    def __repr__(self):
        return (
            f"AlgebraSpan(d={self.ambient_dim}, dim={self.dimension})"
        )


def _ambient(mats: Sequence[ExactMatrix], d, field):
    if mats:
        m0 = mats[0]
        if m0.nrows != m0.ncols:
            raise ValueError("matrices must be square")
        d = m0.nrows if d is None else d
        field = m0.field if field is None else field
        for m in mats:
            if (m.nrows, m.ncols) != (d, d):
                raise ValueError("dimension mismatch")
            if m.field != field:
                raise ValueError("field mismatch")
    if d is None or field is None:
        raise ValueError("empty input needs explicit d= and field=")
    return d, field


def span_of(mats: Sequence[ExactMatrix], *, d=None, field=None) -> AlgebraSpan:
    """Reduced-echelon span of the given square matrices."""
    d, field = _ambient(mats, d, field)
    ech = Echelon(field)
    for m in mats:
        ech.add(m.flatten())
    return AlgebraSpan(field, d, ech)


def in_span(mat: ExactMatrix, span: AlgebraSpan) -> bool:
    return span.contains(mat)


def spans_equal(a: AlgebraSpan, b: AlgebraSpan) -> bool:
    return a == b


def _commutation_rows(g: ExactMatrix, d: int):
    """Nonzero rows of the linear system X @ g - g @ X = 0.

    The unknown X is flattened row-major; the equation indexed by
    (a, b) reads  sum_k X[a,k] g[k,b] - g[a,k] X[k,b] = 0.
    """
    f = g.field
    zero, add, sub = f.zero, f.add, f.sub
    cols: dict[int, list] = {}
    for (r, c), v in g.entries.items():
        cols.setdefault(c, []).append((r, v))
    rows_adj = g._row_adj()
    csup = sorted(cols)
    for a in range(d):
        bs = range(d) if a in rows_adj else csup
        ga = rows_adj.get(a, ())
        for b in bs:
            row: dict = {}
            for k, v in cols.get(b, ()):
                key = a * d + k
                s = add(row.get(key, zero), v)
                if s == zero:
                    row.pop(key, None)
                else:
                    row[key] = s
            for k, v in ga:
                key = k * d + b
                s = sub(row.get(key, zero), v)
                if s == zero:
                    row.pop(key, None)
                else:
                    row[key] = s
            if row:
                yield row


def commutant(
    gens: Sequence[ExactMatrix],
    d: int | None = None,
    *,
    field=None,
    size_cap: int = DEFAULT_SIZE_CAP,
) -> AlgebraSpan:
    """All X with X G = G X for every G in ``gens``.

    Computed as the null space of the stacked maps X -> XG - GX.  Once
    the running null space is small it is cheaper to test the remaining
    generators by explicit commutation and only stack equations for the
    ones that actually cut it down; the result is identical because a
    generator whose commutation test passes contributes no constraints.
    The output is independent of which spanning set of the same algebra
    is supplied.
    """
    d, field = _ambient(gens, d, field)
    check_size_cap(d, size_cap)
    ech = Echelon(field)
    null_mats: list[ExactMatrix] | None = None
    extracted_rank = -1

    def extract():
        nonlocal null_mats, extracted_rank
        if extracted_rank != ech.rank:
            null_mats = [
                ExactMatrix.unflatten(field, d, v)
                for v in ech.null_space(d * d)
            ]
            extracted_rank = ech.rank

    for g in gens:
        nullity = d * d - ech.rank
        if nullity <= _NULL_TEST_MAX:
            extract()
            if all(x.commutes_with(g) for x in null_mats):
                continue
        for row in _commutation_rows(g, d):
            ech.add(row)
    out = Echelon(field)
    for vec in ech.null_space(d * d):
        out.add(vec)
    return AlgebraSpan(field, d, out)


def algebra_closure(
    gens: Sequence[ExactMatrix],
    include_identity: bool,
    *,
    d: int | None = None,
    field=None,
    size_cap: int = DEFAULT_SIZE_CAP,
) -> AlgebraSpan:
    """Smallest span containing ``gens`` that is closed under products.

    Iterates left and right multiplication of the current basis by the
    generators until the dimension stabilizes; terminates since the
    dimension is bounded by d*d.
    """
    d, field = _ambient(gens, d, field)
    check_size_cap(d, size_cap)
    ech = Echelon(field)
    frontier: list[ExactMatrix] = []
    seed = list(gens)
    if include_identity:
        seed = [ExactMatrix.identity(field, d)] + seed
    for m in seed:
        if ech.add(m.flatten()):
            frontier.append(m)
    while frontier:
        fresh: list[ExactMatrix] = []
        for b in frontier:
            for g in gens:
                for prod in (b @ g, g @ b):
                    if ech.add(prod.flatten()):
                        fresh.append(prod)
        frontier = fresh
    return AlgebraSpan(field, d, ech)
