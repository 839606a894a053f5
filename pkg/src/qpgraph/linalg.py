"""Exact rational matrices and polynomials.

Everything here works over :class:`fractions.Fraction`; there is no floating
point anywhere.  Matrices are small and dense (n <= ~200), stored row-major
as immutable tuples.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import zip_longest
from math import gcd
from operator import mul
from typing import Iterable, Sequence

Rational = Fraction

_SUPERSCRIPT = str.maketrans("0123456789", "⁰¹²³⁴⁵⁶⁷⁸⁹")


class ShapeError(ValueError):
    """Raised when matrix dimensions do not fit the operation."""


def _frac(x) -> Fraction:
    return x if type(x) is Fraction else Fraction(x)


@dataclass(frozen=True, eq=False)
class RationalMatrix:
    rows: int
    cols: int
    entries: tuple

    def __post_init__(self):
        if len(self.entries) != self.rows * self.cols:
            raise ShapeError(
                f"{len(self.entries)} entries for a {self.rows}x{self.cols} matrix"
            )

    # construction -------------------------------------------------------
    @classmethod
    def from_rows(cls, rows: Sequence[Sequence]) -> "RationalMatrix":
        rows = [list(r) for r in rows]
        ncols = len(rows[0]) if rows else 0
        if any(len(r) != ncols for r in rows):
            raise ShapeError("ragged rows")
        return cls(len(rows), ncols, tuple(_frac(x) for r in rows for x in r))

    @classmethod
    def zeros(cls, rows: int, cols: int | None = None) -> "RationalMatrix":
        cols = rows if cols is None else cols
        return cls(rows, cols, (Fraction(0),) * (rows * cols))

    @classmethod
    def identity(cls, n: int) -> "RationalMatrix":
        one, zero = Fraction(1), Fraction(0)
        return cls(n, n, tuple(one if i == j else zero for i in range(n) for j in range(n)))

    @classmethod
    def ones(cls, rows: int, cols: int | None = None) -> "RationalMatrix":
        cols = rows if cols is None else cols
        return cls(rows, cols, (Fraction(1),) * (rows * cols))

    # access -------------------------------------------------------------
    @property
    def shape(self) -> tuple[int, int]:
        return (self.rows, self.cols)

    def __getitem__(self, ij: tuple[int, int]) -> Fraction:
        i, j = ij
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> tuple:
        return self.entries[i * self.cols:(i + 1) * self.cols]

    def column(self, j: int) -> tuple:
        return self.entries[j::self.cols]

    def tolist(self) -> list[list[Fraction]]:
        return [list(self.row(i)) for i in range(self.rows)]

    def vec(self) -> tuple:
        """Row-major vectorization."""
        return self.entries

    @property
    def is_integral(self) -> bool:
        return all(e.denominator == 1 for e in self.entries)

    # predicates ---------------------------------------------------------
    def is_square(self) -> bool:
        return self.rows == self.cols

    def is_zero(self) -> bool:
        return not any(self.entries)

    def is_binary(self) -> bool:
        return all(e == 0 or e == 1 for e in self.entries)

    def is_symmetric(self) -> bool:
        if not self.is_square():
            return False
        n = self.rows
        e = self.entries
        return all(e[i * n + j] == e[j * n + i] for i in range(n) for j in range(i + 1, n))

    def distinct_entries(self) -> set:
        return set(self.entries)

    def support(self) -> frozenset:
        """Positions (i, j) holding a nonzero entry."""
        c = self.cols
        return frozenset(divmod(k, c) for k, e in enumerate(self.entries) if e)

    # arithmetic ---------------------------------------------------------
    def _check_same_shape(self, other: "RationalMatrix"):
        if self.shape != other.shape:
            raise ShapeError(f"shape mismatch {self.shape} vs {other.shape}")

    def __add__(self, other: "RationalMatrix") -> "RationalMatrix":
        self._check_same_shape(other)
        return RationalMatrix(self.rows, self.cols,
                              tuple(a + b for a, b in zip(self.entries, other.entries)))

    def __sub__(self, other: "RationalMatrix") -> "RationalMatrix":
        self._check_same_shape(other)
        return RationalMatrix(self.rows, self.cols,
                              tuple(a - b for a, b in zip(self.entries, other.entries)))

    def __neg__(self) -> "RationalMatrix":
        return RationalMatrix(self.rows, self.cols, tuple(-a for a in self.entries))

    def scale(self, c) -> "RationalMatrix":
        c = _frac(c)
        return RationalMatrix(self.rows, self.cols, tuple(c * a for a in self.entries))

    def __matmul__(self, other: "RationalMatrix") -> "RationalMatrix":
        return mat_mul(self, other)

    def transpose(self) -> "RationalMatrix":
        return RationalMatrix(self.cols, self.rows,
                              tuple(self.entries[i * self.cols + j]
                                    for j in range(self.cols) for i in range(self.rows)))

    @property
    def T(self) -> "RationalMatrix":
        return self.transpose()

    def trace(self) -> Fraction:
        if not self.is_square():
            raise ShapeError("trace of a non-square matrix")
        return sum((self.entries[i * self.cols + i] for i in range(self.rows)), Fraction(0))

    def entry_sum(self) -> Fraction:
        return sum(self.entries, Fraction(0))

    def __eq__(self, other) -> bool:
        if not isinstance(other, RationalMatrix):
            return NotImplemented
        return self.shape == other.shape and self.entries == other.entries

    def __hash__(self) -> int:
        return hash((self.rows, self.cols, self.entries))

    def __repr__(self) -> str:
        body = "; ".join(" ".join(str(x) for x in self.row(i)) for i in range(self.rows))
        return f"RationalMatrix({self.rows}x{self.cols}: [{body}])"


def _integer_form(m: RationalMatrix) -> tuple[list[int], int]:
    """Entries scaled to integers by the lcm of their denominators."""
    den = 1
    for e in m.entries:
        q = e.denominator
        if q != 1 and den % q:
            den = den * q // gcd(den, q)
    if den == 1:
        return [e.numerator for e in m.entries], 1
    return [e.numerator * (den // e.denominator) for e in m.entries], den


def mat_mul(a: RationalMatrix, b: RationalMatrix) -> RationalMatrix:
    if a.cols != b.rows:
        raise ShapeError(f"cannot multiply {a.shape} by {b.shape}")
    # multiply integer numerators over a common denominator; far faster than Fraction sums
    ai, da = _integer_form(a)
    bi, db = _integer_form(b)
    den = da * db
    bcols = [bi[j::b.cols] for j in range(b.cols)]
    out = []
    for i in range(a.rows):
        r = ai[i * a.cols:(i + 1) * a.cols]
        if den == 1:
            out.extend(Fraction(sum(map(mul, r, c))) for c in bcols)
        else:
            out.extend(Fraction(sum(map(mul, r, c)), den) for c in bcols)
    return RationalMatrix(a.rows, b.cols, tuple(out))


def hadamard(a: RationalMatrix, b: RationalMatrix) -> RationalMatrix:
    if a.shape != b.shape:
        raise ShapeError(f"Hadamard product needs equal shapes, got {a.shape} and {b.shape}")
    return RationalMatrix(a.rows, a.cols, tuple(map(mul, a.entries, b.entries)))


def trace_inner(a: RationalMatrix, b: RationalMatrix, n: int | None = None) -> Fraction:
    """Normalized trace product ``trace(a b) / n``.

    Evaluated as ``sum_ij a_ij b_ji`` (O(n^2), no full product); for symmetric
    inputs that is the entry sum of ``a o b``.  ``n`` defaults to the matrix
    order, so that ``<I, I> = 1``.
    """
    if not (a.is_square() and a.shape == b.shape):
        raise ShapeError(f"trace inner product needs equal square shapes, got {a.shape}, {b.shape}")
    if n is None:
        n = a.rows
    elif n != a.rows:
        raise ShapeError(f"order {n} does not match {a.shape}")
    return Fraction(sum(map(mul, a.entries, b.transpose().entries)), n)


def trace_product(a: RationalMatrix, b: RationalMatrix) -> Fraction:
    """Un-normalized ``trace(a b)`` (integer-only variant of the inner product)."""
    if not (a.is_square() and a.shape == b.shape):
        raise ShapeError(f"trace product needs equal square shapes, got {a.shape}, {b.shape}")
    return sum(map(mul, a.entries, b.transpose().entries), Fraction(0))


def kron(a: RationalMatrix, b: RationalMatrix) -> RationalMatrix:
    """Kronecker (tensor) product; row (i, k) of the result is ``i * b.rows + k``."""
    out = []
    for i in range(a.rows):
        for k in range(b.rows):
            brow = b.row(k)
            for j in range(a.cols):
                x = a[i, j]
                out.extend(x * y for y in brow)
    return RationalMatrix(a.rows * b.rows, a.cols * b.cols, tuple(out))


def matrix_power_sequence(a: RationalMatrix, k: int) -> list[RationalMatrix]:
    """``[I, a, a^2, ..., a^k]``."""
    if not a.is_square():
        raise ShapeError("powers of a non-square matrix")
    out = [RationalMatrix.identity(a.rows)]
    for _ in range(k):
        out.append(out[-1] @ a)
    return out


# --------------------------------------------------------------------------
# Row reduction
# --------------------------------------------------------------------------

@dataclass(frozen=True)
class RrefResult:
    R: RationalMatrix
    T: RationalMatrix
    rank: int
    pivots: tuple

    def __iter__(self):
        # allows ``R, T, rank = rref_with_transform(m)``
        return iter((self.R, self.T, self.rank))


def rref_with_transform(m: RationalMatrix) -> RrefResult:
    """Reduced row echelon form ``R`` of ``m`` and an invertible ``T`` with ``R = T m``.

    Pivoting takes the leftmost column with a nonzero entry at or below the
    current row and, within it, the topmost such entry; every pivot is scaled
    to 1 and cleared above and below.  The procedure is deterministic, which
    keeps downstream matrices bit-reproducible.
    """
    nr, nc = m.rows, m.cols
    a = [list(m.row(i)) for i in range(nr)]
    t = [[Fraction(int(i == j)) for j in range(nr)] for i in range(nr)]
    pivots = []
    r = 0
    for c in range(nc):
        if r == nr:
            break
        p = next((i for i in range(r, nr) if a[i][c]), None)
        if p is None:
            continue
        if p != r:
            a[r], a[p] = a[p], a[r]
            t[r], t[p] = t[p], t[r]
        piv = a[r][c]
        if piv != 1:
            inv = 1 / piv
            a[r] = [x * inv for x in a[r]]
            t[r] = [x * inv for x in t[r]]
        ar, tr = a[r], t[r]
        for i in range(nr):
            f = a[i][c]
            if i == r or not f:
                continue
            ai, ti = a[i], t[i]
            for j in range(c, nc):
                if ar[j]:
                    ai[j] -= f * ar[j]
            for j in range(nr):
                if tr[j]:
                    ti[j] -= f * tr[j]
        pivots.append(c)
        r += 1
    R = RationalMatrix(nr, nc, tuple(x for row in a for x in row))
    T = RationalMatrix(nr, nr, tuple(x for row in t for x in row))
    return RrefResult(R, T, len(pivots), tuple(pivots))


def rank(m: RationalMatrix) -> int:
    return rref_with_transform(m).rank


def stack_rows(vectors: Iterable[Sequence]) -> RationalMatrix:
    return RationalMatrix.from_rows(vectors)


def row_space_coordinates(red: RrefResult, v: Sequence) -> list[Fraction] | None:
    """Coordinates ``c`` with ``v = sum_i c_i (original row i)``, or None if ``v``
    lies outside the row space.

    Uses the echelon form: a row-space vector is the combination of the pivot
    rows weighted by its own entries at the pivot columns.
    """
    R = red.R
    if len(v) != R.cols:
        raise ShapeError(f"vector of length {len(v)} against {R.cols} columns")
    coeffs = [_frac(v[c]) for c in red.pivots]
    rebuilt = [Fraction(0)] * R.cols
    for k, ck in enumerate(coeffs):
        if ck:
            for j, x in enumerate(R.row(k)):
                if x:
                    rebuilt[j] += ck * x
    if any(a != b for a, b in zip(rebuilt, v)):
        return None
    out = [Fraction(0)] * red.T.cols
    for k, ck in enumerate(coeffs):
        if ck:
            for j, x in enumerate(red.T.row(k)):
                out[j] += ck * x
    return out


# --------------------------------------------------------------------------
# Polynomials
# --------------------------------------------------------------------------

class Polynomial:
    """Univariate polynomial with rational coefficients; ``coeffs[i]`` multiplies ``t**i``."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        c = [_frac(x) for x in coeffs]
        while c and c[-1] == 0:
            c.pop()
        self.coeffs = tuple(c) if c else (Fraction(0),)

    @classmethod
    def monomial(cls, k: int, c=1) -> "Polynomial":
        return cls([0] * k + [c])

    @classmethod
    def t(cls) -> "Polynomial":
        return cls([0, 1])

    @property
    def degree(self) -> int:
        """Degree; the zero polynomial has degree -1 here."""
        return -1 if self.is_zero() else len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return self.coeffs == (Fraction(0),)

    def lead(self) -> Fraction:
        return self.coeffs[-1]

    def __call__(self, x):
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __add__(self, other):
        other = other if isinstance(other, Polynomial) else Polynomial([other])
        return Polynomial(a + b for a, b in
                          zip_longest(self.coeffs, other.coeffs, fillvalue=Fraction(0)))

    __radd__ = __add__

    def __neg__(self):
        return Polynomial(-a for a in self.coeffs)

    def __sub__(self, other):
        other = other if isinstance(other, Polynomial) else Polynomial([other])
        return self + (-other)

    def __mul__(self, other):
        if not isinstance(other, Polynomial):
            return Polynomial(_frac(other) * a for a in self.coeffs)
        if self.is_zero() or other.is_zero():
            return Polynomial()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return Polynomial(out)

    __rmul__ = __mul__

    def derivative(self) -> "Polynomial":
        return Polynomial(i * c for i, c in enumerate(self.coeffs) if i)

    def divmod(self, other: "Polynomial") -> tuple["Polynomial", "Polynomial"]:
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dq = len(rem) - len(other.coeffs)
        if dq < 0 or self.is_zero():
            return Polynomial(), Polynomial(rem)
        quot = [Fraction(0)] * (dq + 1)
        lead = other.lead()
        for k in range(dq, -1, -1):
            c = rem[k + len(other.coeffs) - 1] / lead
            quot[k] = c
            if c:
                for j, b in enumerate(other.coeffs):
                    rem[k + j] -= c * b
        return Polynomial(quot), Polynomial(rem[:len(other.coeffs) - 1])

    def monic(self) -> "Polynomial":
        return self if self.is_zero() else self * (1 / self.lead())

    def __eq__(self, other) -> bool:
        if isinstance(other, Polynomial):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self.coeffs == Polynomial([other]).coeffs
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __repr__(self) -> str:
        return f"Polynomial({[str(c) for c in self.coeffs]})"

    def __str__(self) -> str:
        return format_polynomial(self)


def poly_gcd(p: Polynomial, q: Polynomial) -> Polynomial:
    """Monic gcd by the Euclidean algorithm."""
    while not q.is_zero():
        p, q = q, p.divmod(q)[1]
    return p.monic()


def format_polynomial(p: Polynomial, var: str = "t") -> str:
    """Human-readable form, highest degree first: ``−1/32·t⁴ + 5/8·t² − 1``."""
    if p.is_zero():
        return "0"
    parts = []
    for k in range(len(p.coeffs) - 1, -1, -1):
        c = p.coeffs[k]
        if not c:
            continue
        sign = "−" if c < 0 else "+"
        a = abs(c)
        if k == 0:
            body = str(a)
        else:
            mono = var if k == 1 else var + str(k).translate(_SUPERSCRIPT)
            body = mono if a == 1 else f"{a}·{mono}"
        parts.append((sign, body))
    first_sign, first = parts[0]
    out = ("−" if first_sign == "−" else "") + first
    for sign, body in parts[1:]:
        out += f" {sign} {body}"
    return out


def poly_eval_matrix(p: Polynomial, a: RationalMatrix) -> RationalMatrix:
    """Horner evaluation of ``p`` at the square matrix ``a``."""
    if not a.is_square():
        raise ShapeError("polynomial of a non-square matrix")
    n = a.rows
    eye = RationalMatrix.identity(n)
    acc = RationalMatrix.zeros(n)
    for c in reversed(p.coeffs):
        acc = acc @ a
        if c:
            acc = acc + eye.scale(c)
    return acc


def combine(coeffs: Sequence, mats: Sequence[RationalMatrix]) -> RationalMatrix:
    """``sum_i coeffs[i] * mats[i]``."""
    if not mats:
        raise ValueError("empty combination")
    r, c = mats[0].shape
    out = [Fraction(0)] * (r * c)
    for k, m in zip(coeffs, mats):
        if k:
            for idx, x in enumerate(m.entries):
                if x:
                    out[idx] += k * x
    return RationalMatrix(r, c, tuple(out))


# --------------------------------------------------------------------------
# Characteristic polynomial (independent eigenvalue-count oracle)
# --------------------------------------------------------------------------

def charpoly(a: RationalMatrix) -> Polynomial:
    """Characteristic polynomial ``det(tI - a)`` by Faddeev-LeVerrier.

    M_0 = 0, c_n = 1;  M_k = a M_{k-1} + c_{n-k+1} I,  c_{n-k} = -trace(a M_k) / k.
    """
    if not a.is_square():
        raise ShapeError("characteristic polynomial of a non-square matrix")
    n = a.rows
    coeffs = [Fraction(0)] * (n + 1)
    coeffs[n] = Fraction(1)
    eye = RationalMatrix.identity(n)
    m = RationalMatrix.zeros(n)
    for k in range(1, n + 1):
        m = a @ m + eye.scale(coeffs[n - k + 1])
        am = a @ m
        coeffs[n - k] = -am.trace() / k
    return Polynomial(coeffs)


def distinct_root_count(p: Polynomial) -> int:
    """Number of distinct complex roots: ``deg p - deg gcd(p, p')``."""
    if p.degree <= 0:
        return 0
    return p.degree - poly_gcd(p, p.derivative()).degree


def integer_content(m: RationalMatrix) -> int:
    """gcd of the entries of an integral matrix (0 for the zero matrix)."""
    g = 0
    for e in m.entries:
        g = gcd(g, e.numerator)
    return g
