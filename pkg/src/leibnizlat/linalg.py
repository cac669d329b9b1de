"""Exact linear algebra over prime fields F_p and the rationals.

Scalars are plain Python ints in [0, p) for the prime case and
``fractions.Fraction`` for the rational case; a ``Field`` object carries the
arithmetic.  Subspaces are kept in reduced row echelon form, so equality of
subspaces is equality of their basis matrices.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field as dc_field
from fractions import Fraction
from typing import Iterator, Optional, Sequence, Union

Scalar = Union[int, Fraction]
Vector = tuple  # tuple of Scalar
Matrix = tuple  # tuple of Vector


class LinalgError(ValueError):
    """Shape, field or argument mismatch in an exact linear algebra operation."""


class BudgetExceeded(RuntimeError):
    """An exhaustive enumeration would exceed the configured budget."""


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


@dataclass(frozen=True)
class Field:
    """F_p for a prime 2 <= p <= 31, or the rationals (p is None)."""

    p: Optional[int] = None

    def __post_init__(self):
        if self.p is not None:
            if not isinstance(self.p, int) or not _is_prime(self.p):
                raise LinalgError("field characteristic must be prime, got %r" % (self.p,))
            if not 2 <= self.p <= 31:
                raise LinalgError("prime fields are supported for 2 <= p <= 31, got %d" % self.p)

    @classmethod
    def prime(cls, p: int) -> "Field":
        return cls(p)

    @classmethod
    def rational(cls) -> "Field":
        return cls(None)

    @property
    def is_prime_field(self) -> bool:
        return self.p is not None

    @property
    def characteristic(self) -> int:
        return self.p if self.p is not None else 0

    def normalize(self, x) -> Scalar:
        if self.p is not None:
            if isinstance(x, Fraction):
                if x.denominator % self.p == 0:
                    raise LinalgError("denominator not invertible mod %d" % self.p)
                return (x.numerator * pow(x.denominator, -1, self.p)) % self.p
            return int(x) % self.p
        if isinstance(x, Fraction):
            return x
        return Fraction(x)

    def zero(self) -> Scalar:
        return 0 if self.p is not None else Fraction(0)

    def one(self) -> Scalar:
        return 1 if self.p is not None else Fraction(1)

    def add(self, a: Scalar, b: Scalar) -> Scalar:
        return (a + b) % self.p if self.p is not None else a + b

    def sub(self, a: Scalar, b: Scalar) -> Scalar:
        return (a - b) % self.p if self.p is not None else a - b

    def neg(self, a: Scalar) -> Scalar:
        return (-a) % self.p if self.p is not None else -a

    def mul(self, a: Scalar, b: Scalar) -> Scalar:
        return (a * b) % self.p if self.p is not None else a * b

    def inv(self, a: Scalar) -> Scalar:
        if not a:
            raise ZeroDivisionError("inverse of zero")
        return pow(a, -1, self.p) if self.p is not None else 1 / a

    def div(self, a: Scalar, b: Scalar) -> Scalar:
        return self.mul(a, self.inv(b))

    def is_zero(self, a: Scalar) -> bool:
        return not a

    def elements(self) -> Iterator[Scalar]:
        if self.p is None:
            raise LinalgError("cannot enumerate the rationals")
        return iter(range(self.p))

    def parse_scalar(self, text: str) -> Scalar:
        if "/" in text:
            num, den = text.split("/", 1)
            return self.normalize(Fraction(int(num), int(den)))
        return self.normalize(int(text))

    def format_scalar(self, x: Scalar) -> str:
        if isinstance(x, Fraction) and x.denominator != 1:
            return "%d/%d" % (x.numerator, x.denominator)
        return str(int(x))

    def __repr__(self):
        return "Field(F_%d)" % self.p if self.p is not None else "Field(Q)"


def zero_vector(f: Field, n: int) -> Vector:
    return (f.zero(),) * n


def vec_add(f: Field, u: Vector, v: Vector) -> Vector:
    return tuple(f.add(a, b) for a, b in zip(u, v))


def vec_sub(f: Field, u: Vector, v: Vector) -> Vector:
    return tuple(f.sub(a, b) for a, b in zip(u, v))


def vec_scale(f: Field, c: Scalar, u: Vector) -> Vector:
    return tuple(f.mul(c, a) for a in u)


def vec_is_zero(u: Vector) -> bool:
    return all(not a for a in u)


def scalar_sort_key(x: Scalar):
    if isinstance(x, Fraction):
        return (x.numerator, x.denominator)
    return (x, 1)


def rref(f: Field, rows: Sequence[Sequence[Scalar]]):
    """Reduced row echelon form.  Returns (rref_rows, rank); zero rows dropped."""
    work = [list(f.normalize(x) for x in row) for row in rows]
    if work:
        ncols = len(work[0])
        if any(len(r) != ncols for r in work):
            raise LinalgError("ragged matrix")
    nrows = len(work)
    ncols = len(work[0]) if work else 0
    rank = 0
    for col in range(ncols):
        pivot_row = None
        for r in range(rank, nrows):
            if work[r][col]:
                pivot_row = r
                break
        if pivot_row is None:
            continue
        work[rank], work[pivot_row] = work[pivot_row], work[rank]
        inv = f.inv(work[rank][col])
        work[rank] = [f.mul(inv, x) for x in work[rank]]
        for r in range(nrows):
            if r != rank and work[r][col]:
                c = work[r][col]
                work[r] = [f.sub(x, f.mul(c, y)) for x, y in zip(work[r], work[rank])]
        rank += 1
        if rank == nrows:
            break
    result = tuple(tuple(row) for row in work[:rank] if any(row))
    return result, len(result)


def _pivots_of(rows: Matrix) -> tuple:
    piv = []
    for row in rows:
        for j, x in enumerate(row):
            if x:
                piv.append(j)
                break
    return tuple(piv)


@dataclass(frozen=True)
class Subspace:
    """A subspace of F^n, stored by its canonical RREF basis (rows)."""

    field: Field
    ambient_dim: int
    basis: Matrix = dc_field(default=())

    @classmethod
    def span(cls, f: Field, n: int, vectors: Sequence[Sequence[Scalar]]) -> "Subspace":
        for v in vectors:
            if len(v) != n:
                raise LinalgError("vector length %d != ambient dimension %d" % (len(v), n))
        basis, _ = rref(f, vectors)
        return cls(f, n, basis)

    @classmethod
    def zero(cls, f: Field, n: int) -> "Subspace":
        return cls(f, n, ())

    @classmethod
    def full(cls, f: Field, n: int) -> "Subspace":
        one, z = f.one(), f.zero()
        rows = tuple(tuple(one if i == j else z for j in range(n)) for i in range(n))
        return cls(f, n, rows)

    @property
    def dim(self) -> int:
        return len(self.basis)

    @property
    def pivots(self) -> tuple:
        return _pivots_of(self.basis)

    def _check_ambient(self, other: "Subspace"):
        if self.field != other.field or self.ambient_dim != other.ambient_dim:
            raise LinalgError("ambient space mismatch")

    def reduce(self, v: Vector) -> Vector:
        """Residual of v after subtracting its projection onto this subspace."""
        if len(v) != self.ambient_dim:
            raise LinalgError("vector length mismatch")
        f = self.field
        w = list(f.normalize(x) for x in v)
        for row, piv in zip(self.basis, self.pivots):
            c = w[piv]
            if c:
                w = [f.sub(x, f.mul(c, y)) for x, y in zip(w, row)]
        return tuple(w)

    def contains(self, v: Vector) -> bool:
        return vec_is_zero(self.reduce(v))

    def leq(self, other: "Subspace") -> bool:
        self._check_ambient(other)
        return all(other.contains(row) for row in self.basis)

    def sum(self, other: "Subspace") -> "Subspace":
        self._check_ambient(other)
        return Subspace.span(self.field, self.ambient_dim, self.basis + other.basis)

    def intersection(self, other: "Subspace") -> "Subspace":
        self._check_ambient(other)
        f, n = self.field, self.ambient_dim
        ka, kb = self.dim, other.dim
        if ka == 0 or kb == 0:
            return Subspace.zero(f, n)
        if self.leq(other):
            return self
        if other.leq(self):
            return other
        # Columns are the basis vectors of self and -other; a nullspace vector
        # (a | b) encodes an element sum(a_i u_i) = sum(b_j v_j) of the intersection.
        rows = []
        for coord in range(n):
            row = [self.basis[i][coord] for i in range(ka)]
            row += [f.neg(other.basis[j][coord]) for j in range(kb)]
            rows.append(row)
        vectors = []
        for coeffs in nullspace(f, rows):
            v = zero_vector(f, n)
            for i in range(ka):
                if coeffs[i]:
                    v = vec_add(f, v, vec_scale(f, coeffs[i], self.basis[i]))
            vectors.append(v)
        return Subspace.span(f, n, vectors)

    def sort_key(self):
        return (self.dim, tuple(tuple(scalar_sort_key(x) for x in row) for row in self.basis))

    def vectors(self) -> Iterator[Vector]:
        """All elements of the subspace (prime fields only)."""
        f = self.field
        if not f.is_prime_field:
            raise LinalgError("cannot enumerate a rational subspace")
        for coeffs in itertools.product(range(f.p), repeat=self.dim):
            v = zero_vector(f, self.ambient_dim)
            for c, row in zip(coeffs, self.basis):
                if c:
                    v = vec_add(f, v, vec_scale(f, c, row))
            yield v

    def __repr__(self):
        return "Subspace(dim=%d/%d, basis=%r)" % (self.dim, self.ambient_dim, self.basis)


def subspace_from_vectors(f: Field, n: int, vectors: Sequence[Sequence[Scalar]]) -> Subspace:
    return Subspace.span(f, n, vectors)


def subspace_sum(u: Subspace, v: Subspace) -> Subspace:
    return u.sum(v)


def subspace_intersection(u: Subspace, v: Subspace) -> Subspace:
    return u.intersection(v)


def subspace_leq(u: Subspace, v: Subspace) -> bool:
    return u.leq(v)


def nullspace(f: Field, rows: Sequence[Sequence[Scalar]]):
    """Basis of the kernel of the matrix (as row vectors of coefficient space)."""
    if not rows:
        return []
    ncols = len(rows[0])
    reduced, _ = rref(f, rows)
    piv = _pivots_of(reduced)
    free = [j for j in range(ncols) if j not in piv]
    basis = []
    for j in free:
        v = [f.zero()] * ncols
        v[j] = f.one()
        for row, p in zip(reduced, piv):
            v[p] = f.neg(row[j])
        basis.append(tuple(v))
    return basis


def solve_linear(f: Field, a: Sequence[Sequence[Scalar]], b: Sequence[Scalar]):
    """Solve A x = b.  Returns (solution or None, kernel basis of A)."""
    nrows = len(a)
    if len(b) != nrows:
        raise LinalgError("rhs length %d != row count %d" % (len(b), nrows))
    ncols = len(a[0]) if nrows else 0
    augmented = [list(row) + [bi] for row, bi in zip(a, b)]
    if nrows == 0:
        return (), []
    reduced, _ = rref(f, augmented)
    piv = _pivots_of(reduced)
    kernel = nullspace(f, a)
    if ncols in piv:
        return None, kernel
    x = [f.zero()] * ncols
    for row, p in zip(reduced, piv):
        x[p] = row[ncols]
    return tuple(x), kernel


def enumerate_subspaces(f: Field, n: int, budget: int = 10 ** 6) -> Iterator[Subspace]:
    """All subspaces of F_p^n, by dimension then lexicographic RREF key.

    Iterates RREF shapes directly: choose pivot columns, then fill the free
    entries, so every subspace appears exactly once without deduplication.
    """
    if not f.is_prime_field:
        raise LinalgError("subspace enumeration needs a finite prime field")
    if f.p ** n > budget:
        raise BudgetExceeded("p^n = %d exceeds budget %d" % (f.p ** n, budget))
    elems = list(f.elements())
    for k in range(n + 1):
        batch = []
        for pivots in itertools.combinations(range(n), k):
            free_positions = [
                (r, c)
                for r in range(k)
                for c in range(pivots[r] + 1, n)
                if c not in pivots
            ]
            for values in itertools.product(elems, repeat=len(free_positions)):
                rows = [[f.zero()] * n for _ in range(k)]
                for r, p in enumerate(pivots):
                    rows[r][p] = f.one()
                for (r, c), val in zip(free_positions, values):
                    rows[r][c] = val
                batch.append(Subspace(f, n, tuple(tuple(row) for row in rows)))
        batch.sort(key=Subspace.sort_key)
        yield from batch


def identity_matrix(f: Field, n: int) -> Matrix:
    one, z = f.one(), f.zero()
    return tuple(tuple(one if i == j else z for j in range(n)) for i in range(n))


def matrix_rank(f: Field, rows: Sequence[Sequence[Scalar]]) -> int:
    return rref(f, rows)[1]


def invert_matrix(f: Field, rows: Sequence[Sequence[Scalar]]) -> Matrix:
    n = len(rows)
    augmented = [list(row) + list(identity_matrix(f, n)[i]) for i, row in enumerate(rows)]
    reduced, rank = rref(f, augmented)
    if rank < n or _pivots_of(reduced)[:n] != tuple(range(n)):
        raise LinalgError("matrix is singular")
    return tuple(tuple(row[n:]) for row in reduced)
