"""Exact dense linear algebra over prime fields GF(p) and over the rationals.

Matrices over GF(p) are numpy integer arrays kept reduced to ``[0, p)``;
rational matrices are tuples of :class:`fractions.Fraction`.  Nothing in this
module touches floating point.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterable, Sequence

import numpy as np

from .errors import NotPrime

# Above this modulus entries are stored as Python ints (object arrays) so
# that matrix products cannot overflow int64.
_INT64_MODULUS_LIMIT = 1 << 24


def is_prime(n: int) -> bool:
    """Deterministic trial-division primality test."""
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def prime_factors(n: int) -> list[int]:
    """Distinct prime divisors of ``|n|`` in ascending order."""
    n = abs(n)
    out = []
    f = 2
    while f * f <= n:
        if n % f == 0:
            out.append(f)
            while n % f == 0:
                n //= f
        f += 1 if f == 2 else 2
    if n > 1:
        out.append(n)
    return out


class PrimeModulus(int):
    """An ``int`` that is guaranteed prime."""

    def __new__(cls, p: int):
        if isinstance(p, PrimeModulus):
            return p
        if isinstance(p, bool) or int(p) != p or not is_prime(int(p)):
            raise NotPrime(p)
        return super().__new__(cls, int(p))


def _dtype(p: int):
    return np.int64 if p < _INT64_MODULUS_LIMIT else object


def as_mod_array(entries, p: int) -> np.ndarray:
    """Integer array reduced mod ``p`` (writable copy)."""
    arr = np.array(entries, dtype=object if _dtype(p) is object else np.int64)
    if arr.dtype == object:
        arr = np.vectorize(lambda x: int(x) % p, otypes=[object])(arr)
    else:
        arr %= p
    return arr


def rref_array(a: np.ndarray, p: int) -> tuple[np.ndarray, list[int]]:
    """Reduced row-echelon form of a 2-D array over GF(p).

    Returns the reduced array (same shape, zero rows at the bottom) and the
    pivot columns.
    """
    a = as_mod_array(a, p)
    if a.ndim != 2:
        raise ValueError("rref_array expects a 2-D array")
    m, n = a.shape
    pivots: list[int] = []
    r = 0
    for c in range(n):
        if r == m:
            break
        nz = np.nonzero(a[r:, c])[0]
        if nz.size == 0:
            continue
        i = r + int(nz[0])
        if i != r:
            a[[r, i]] = a[[i, r]]
        inv = pow(int(a[r, c]), -1, p)
        a[r] = (a[r] * inv) % p
        col = a[:, c].copy()
        col[r] = 0
        rows = np.nonzero(col)[0]
        if rows.size:
            a[rows] = (a[rows] - np.outer(col[rows], a[r])) % p
        pivots.append(c)
        r += 1
    return a, pivots


def batched_rref(stack: np.ndarray, p: int) -> tuple[np.ndarray, np.ndarray]:
    """Row-reduce a stack of matrices ``(B, m, n)`` over a small prime field.

    Every slice ends in canonical reduced row-echelon form; the second result
    holds the per-slice ranks.  Requires ``p`` small enough for an inverse
    lookup table.
    """
    if p > 1 << 20:
        raise ValueError("batched_rref is meant for small primes")
    a = np.asarray(stack, dtype=np.int64) % p
    nb, m, n = a.shape
    rank = np.zeros(nb, dtype=np.int64)
    inv = np.zeros(p, dtype=np.int64)
    for x in range(1, p):
        inv[x] = pow(x, -1, p)
    row_ids = np.arange(m)
    for c in range(n):
        cand = (a[:, :, c] != 0) & (row_ids[None, :] >= rank[:, None])
        has = cand.any(axis=1)
        if not has.any():
            continue
        b = np.nonzero(has)[0]
        piv = cand[b].argmax(axis=1)
        r = rank[b]
        prow = a[b, piv].copy()
        a[b, piv] = a[b, r]
        a[b, r] = prow
        a[b, r] = (a[b, r] * inv[a[b, r, c]][:, None]) % p
        factors = a[b, :, c].copy()
        factors[np.arange(b.size), r] = 0
        a[b] = (a[b] - factors[:, :, None] * a[b, r][:, None, :]) % p
        rank[b] += 1
    return a, rank


class MatF:
    """Immutable dense matrix over GF(p)."""

    __slots__ = ("_a", "p")

    def __init__(self, entries, p: int):
        p = PrimeModulus(p)
        a = as_mod_array(entries, p)
        if a.ndim != 2 or a.shape[0] < 1 or a.shape[1] < 1:
            raise ValueError(f"MatF needs a non-empty 2-D array, got shape {a.shape}")
        a.setflags(write=False)
        self._a = a
        self.p = p

    @classmethod
    def identity(cls, n: int, p: int) -> MatF:
        return cls(np.eye(n, dtype=np.int64), p)

    @classmethod
    def zeros(cls, rows: int, cols: int, p: int) -> MatF:
        return cls(np.zeros((rows, cols), dtype=np.int64), p)

    @classmethod
    def ones(cls, rows: int, cols: int, p: int) -> MatF:
        return cls(np.ones((rows, cols), dtype=np.int64), p)

    @property
    def array(self) -> np.ndarray:
        return self._a

    @property
    def rows(self) -> int:
        return self._a.shape[0]

    @property
    def cols(self) -> int:
        return self._a.shape[1]

    @property
    def shape(self) -> tuple[int, int]:
        return self._a.shape

    def _check(self, other: MatF):
        if not isinstance(other, MatF) or other.p != self.p:
            raise TypeError("operands must be MatF over the same field")

    def __add__(self, other: MatF) -> MatF:
        self._check(other)
        return MatF(self._a + other._a, self.p)

    def __sub__(self, other: MatF) -> MatF:
        self._check(other)
        return MatF(self._a - other._a, self.p)

    def __neg__(self) -> MatF:
        return MatF(-self._a, self.p)

    def __matmul__(self, other: MatF) -> MatF:
        self._check(other)
        return MatF(self._a @ other._a, self.p)

    def scale(self, c: int) -> MatF:
        return MatF(self._a * (c % self.p), self.p)

    @property
    def T(self) -> MatF:
        return MatF(self._a.T, self.p)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, MatF)
            and other.p == self.p
            and other.shape == self.shape
            and bool(np.array_equal(self._a, other._a))
        )

    def __hash__(self):
        return hash((self.p, self.shape, self._a.tobytes()))

    def is_zero(self) -> bool:
        return not self._a.any()

    def tolist(self) -> list[list[int]]:
        return [[int(x) for x in row] for row in self._a]

    def rank(self) -> int:
        return rref(self).rank

    def __repr__(self):
        return f"MatF(p={self.p}, {self.tolist()})"


class MatQ:
    """Immutable dense matrix of exact rationals (entries in lowest terms)."""

    __slots__ = ("_e",)

    def __init__(self, entries):
        rows = tuple(tuple(Fraction(x) for x in row) for row in entries)
        if not rows or not rows[0] or any(len(r) != len(rows[0]) for r in rows):
            raise ValueError("MatQ needs a non-empty rectangular array")
        self._e = rows

    @classmethod
    def identity(cls, n: int) -> MatQ:
        return cls([[int(i == j) for j in range(n)] for i in range(n)])

    @property
    def entries(self) -> tuple[tuple[Fraction, ...], ...]:
        return self._e

    @property
    def rows(self) -> int:
        return len(self._e)

    @property
    def cols(self) -> int:
        return len(self._e[0])

    @property
    def shape(self) -> tuple[int, int]:
        return (self.rows, self.cols)

    def __add__(self, other: MatQ) -> MatQ:
        return MatQ([[x + y for x, y in zip(r, s)] for r, s in zip(self._e, other._e)])

    def __sub__(self, other: MatQ) -> MatQ:
        return MatQ([[x - y for x, y in zip(r, s)] for r, s in zip(self._e, other._e)])

    def __matmul__(self, other: MatQ) -> MatQ:
        if self.cols != other.rows:
            raise ValueError("shape mismatch")
        cols = list(zip(*other._e))
        return MatQ([[sum((x * y for x, y in zip(r, c)), Fraction(0)) for c in cols] for r in self._e])

    def scale(self, c) -> MatQ:
        c = Fraction(c)
        return MatQ([[c * x for x in r] for r in self._e])

    @property
    def T(self) -> MatQ:
        return MatQ(list(zip(*self._e)))

    def __eq__(self, other) -> bool:
        return isinstance(other, MatQ) and self._e == other._e

    def __hash__(self):
        return hash(self._e)

    def is_zero(self) -> bool:
        return all(x == 0 for r in self._e for x in r)

    def rank(self) -> int:
        return rank_rational(self)

    def __repr__(self):
        return f"MatQ({[[str(x) for x in r] for r in self._e]})"


# ---------------------------------------------------------------------------
# Polynomials


@dataclass(frozen=True)
class Poly:
    """Univariate polynomial over GF(p) (``modulus=p``) or over Q (``modulus=None``).

    ``coeffs`` runs from the constant term upwards and carries no trailing
    zeros; the zero polynomial has ``coeffs == ()`` and degree -1.
    """

    coeffs: tuple
    modulus: int | None = None

    def __post_init__(self):
        c = [self._norm(x) for x in self.coeffs]
        while c and c[-1] == 0:
            c.pop()
        object.__setattr__(self, "coeffs", tuple(c))

    def _norm(self, x):
        return int(x) % self.modulus if self.modulus is not None else Fraction(x)

    def _inv(self, x):
        return pow(int(x), -1, self.modulus) if self.modulus is not None else 1 / Fraction(x)

    @classmethod
    def x(cls, modulus: int | None = None) -> Poly:
        return cls((0, 1), modulus)

    @classmethod
    def from_roots(cls, roots: Iterable, modulus: int | None = None) -> Poly:
        out = cls((1,), modulus)
        for r in roots:
            out = out * cls((-r, 1), modulus)
        return out

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def leading(self):
        return self.coeffs[-1] if self.coeffs else 0

    def _like(self, coeffs) -> Poly:
        return Poly(tuple(coeffs), self.modulus)

    def __add__(self, other: Poly) -> Poly:
        n = max(len(self.coeffs), len(other.coeffs))
        a = self.coeffs + (0,) * (n - len(self.coeffs))
        b = other.coeffs + (0,) * (n - len(other.coeffs))
        return self._like(x + y for x, y in zip(a, b))

    def __neg__(self) -> Poly:
        return self._like(-x for x in self.coeffs)

    def __sub__(self, other: Poly) -> Poly:
        return self + (-other)

    def __mul__(self, other: Poly) -> Poly:
        if not self.coeffs or not other.coeffs:
            return self._like(())
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, x in enumerate(self.coeffs):
            for j, y in enumerate(other.coeffs):
                out[i + j] += x * y
        return self._like(out)

    def monic(self) -> Poly:
        if not self.coeffs:
            return self
        inv = self._inv(self.leading)
        return self._like(x * inv for x in self.coeffs)

    def __divmod__(self, other: Poly) -> tuple[Poly, Poly]:
        if not other.coeffs:
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        q = [0] * max(len(rem) - len(other.coeffs) + 1, 0)
        inv = self._inv(other.leading)
        dd = other.degree
        for k in range(len(rem) - 1, dd - 1, -1):
            c = self._norm(rem[k] * inv)
            if c == 0:
                continue
            q[k - dd] = c
            for j, y in enumerate(other.coeffs):
                rem[k - dd + j] = self._norm(rem[k - dd + j] - c * y)
        return self._like(q), self._like(rem)

    def __mod__(self, other: Poly) -> Poly:
        return divmod(self, other)[1]

    def __floordiv__(self, other: Poly) -> Poly:
        return divmod(self, other)[0]

    def gcd(self, other: Poly) -> Poly:
        a, b = self, other
        while b.coeffs:
            a, b = b, a % b
        return a.monic()

    def lcm(self, other: Poly) -> Poly:
        if not self.coeffs or not other.coeffs:
            return self._like(())
        return ((self * other) // self.gcd(other)).monic()

    def __call__(self, value):
        """Evaluate at a scalar, a :class:`MatF` or a :class:`MatQ` (Horner)."""
        if isinstance(value, (MatF, MatQ)):
            n = value.rows
            ident = MatF.identity(n, value.p) if isinstance(value, MatF) else MatQ.identity(n)
            acc = ident.scale(0)
            for c in reversed(self.coeffs):
                acc = acc @ value + ident.scale(c)
            return acc
        acc = 0
        for c in reversed(self.coeffs):
            acc = self._norm(acc * value + c)
        return acc

    def __str__(self):
        if not self.coeffs:
            return "0"
        terms = []
        for k in range(self.degree, -1, -1):
            c = self.coeffs[k]
            if c == 0:
                continue
            mono = "" if k == 0 else ("x" if k == 1 else f"x^{k}")
            if c == 1 and mono:
                terms.append(mono)
            else:
                terms.append(f"{c}{'*' if mono else ''}{mono}")
        return " + ".join(terms)


# ---------------------------------------------------------------------------
# Subspaces of GF(p)^n


class Subspace:
    """Subspace of GF(p)^n held by its canonical reduced echelon basis.

    Two spans of the same vectors produce identical ``basis`` arrays, so
    equality is a plain array comparison.
    """

    __slots__ = ("ambient", "p", "basis", "pivots")

    def __init__(self, ambient: int, p: int, basis: np.ndarray, pivots: Sequence[int]):
        basis = np.asarray(basis, dtype=np.int64).reshape(-1, ambient)
        basis.setflags(write=False)
        self.ambient = ambient
        self.p = p
        self.basis = basis
        self.pivots = tuple(pivots)

    @classmethod
    def span(cls, vectors, p: int, ambient: int) -> Subspace:
        vecs = np.asarray(vectors, dtype=np.int64).reshape(-1, ambient) if len(vectors) else np.zeros((0, ambient), dtype=np.int64)
        if vecs.shape[0] == 0:
            return cls.zero(ambient, p)
        red, piv = rref_array(vecs, p)
        return cls(ambient, p, red[: len(piv)], piv)

    @classmethod
    def zero(cls, ambient: int, p: int) -> Subspace:
        return cls(ambient, p, np.zeros((0, ambient), dtype=np.int64), ())

    @classmethod
    def full(cls, ambient: int, p: int) -> Subspace:
        return cls(ambient, p, np.eye(ambient, dtype=np.int64), range(ambient))

    @property
    def dim(self) -> int:
        return self.basis.shape[0]

    def reduce(self, v) -> np.ndarray:
        """Canonical representative of ``v`` modulo this subspace."""
        v = np.asarray(v, dtype=np.int64) % self.p
        for row, c in zip(self.basis, self.pivots):
            if v[c]:
                v = (v - v[c] * row) % self.p
        return v

    def contains(self, v) -> bool:
        return not self.reduce(v).any()

    def __contains__(self, v) -> bool:
        return self.contains(v)

    def issubspace(self, other: Subspace) -> bool:
        return all(other.contains(b) for b in self.basis)

    def join(self, other: Subspace) -> Subspace:
        return Subspace.span(np.vstack([self.basis, other.basis]), self.p, self.ambient)

    def intersect(self, other: Subspace) -> Subspace:
        if self.dim == 0 or other.dim == 0:
            return Subspace.zero(self.ambient, self.p)
        stacked = np.vstack([self.basis, other.basis])
        # Combinations c with c . stacked = 0 pair an element of self with one of other.
        left = nullspace(MatF(stacked.T, self.p))
        if left.dim == 0:
            return Subspace.zero(self.ambient, self.p)
        vecs = (left.basis[:, : self.dim] @ self.basis) % self.p
        return Subspace.span(vecs, self.p, self.ambient)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Subspace)
            and self.p == other.p
            and self.ambient == other.ambient
            and bool(np.array_equal(self.basis, other.basis))
        )

    def __hash__(self):
        return hash((self.p, self.ambient, self.basis.tobytes()))

    def tolist(self) -> list[list[int]]:
        return [[int(x) for x in row] for row in self.basis]

    def __repr__(self):
        return f"Subspace(p={self.p}, dim={self.dim}/{self.ambient}, basis={self.tolist()})"


# ---------------------------------------------------------------------------
# Operations


@dataclass(frozen=True)
class RrefResult:
    matrix: MatF
    rank: int
    pivots: tuple[int, ...]


def rref(M: MatF) -> RrefResult:
    red, piv = rref_array(M.array, M.p)
    return RrefResult(MatF(red, M.p), len(piv), tuple(piv))


def nullspace(M: MatF) -> Subspace:
    """Right kernel ``{x : M x = 0}`` as a canonical subspace of GF(p)^cols."""
    p = M.p
    red, piv = rref_array(M.array, p)
    free = [c for c in range(M.cols) if c not in piv]
    vecs = []
    for f in free:
        x = np.zeros(M.cols, dtype=np.int64)
        x[f] = 1
        for i, c in enumerate(piv):
            x[c] = (-int(red[i, f])) % p
        vecs.append(x)
    return Subspace.span(vecs, p, M.cols) if vecs else Subspace.zero(M.cols, p)


def _field_ops(M):
    if isinstance(M, MatF):
        p = M.p
        return (lambda x: int(x) % p), (lambda x: pow(int(x), -1, p)), p
    return Fraction, (lambda x: 1 / x), None


def _rows(M) -> list[list]:
    return M.tolist() if isinstance(M, MatF) else [list(r) for r in M.entries]


def minpoly(M: MatF | MatQ) -> Poly:
    """Minimal polynomial of a square matrix.

    For each standard basis vector the Krylov sequence ``v, Mv, M^2 v, ...`` is
    extended until it becomes dependent; the dependency gives the local
    minimal polynomial of ``v``, and the answer is the lcm over all of them.
    """
    if M.rows != M.cols:
        raise ValueError("minpoly needs a square matrix")
    norm, inv, modulus = _field_ops(M)
    rows = [[norm(x) for x in r] for r in _rows(M)]
    n = len(rows)

    def apply(v):
        return [norm(sum(rows[i][j] * v[j] for j in range(n))) for i in range(n)]

    result = Poly((1,), modulus)
    for e in range(n):
        v = [norm(int(i == e)) for i in range(n)]
        echelon: list[tuple[int, list, list]] = []  # (pivot, vector, combination)
        k = 0
        while True:
            w = list(v)
            combo = [norm(0)] * (k + 1)
            combo[k] = norm(1)
            for piv, vec, comb in echelon:
                c = w[piv]
                if c != 0:
                    w = [norm(a - c * b) for a, b in zip(w, vec)]
                    for t, y in enumerate(comb):
                        combo[t] = norm(combo[t] - c * y)
            nz = next((i for i, a in enumerate(w) if a != 0), None)
            if nz is None:
                result = result.lcm(Poly(tuple(combo), modulus))
                break
            s = inv(w[nz])
            echelon.append((nz, [norm(a * s) for a in w], [norm(a * s) for a in combo]))
            v = apply(v)
            k += 1
    return result


def subspace_product(S: Subspace, T: Subspace, mul: Callable[[np.ndarray, np.ndarray], np.ndarray]) -> Subspace:
    """Canonical span of all products ``s * t`` of basis vectors."""
    if S.dim == 0 or T.dim == 0:
        return Subspace.zero(S.ambient, S.p)
    prods = [mul(s, t) for s in S.basis for t in T.basis]
    return Subspace.span(prods, S.p, S.ambient)


def rank_rational(M: MatQ) -> int:
    """Rank over Q by fraction-free (Bareiss) elimination on integer rows."""
    rows = []
    for r in M.entries:
        den = math.lcm(*(x.denominator for x in r))
        rows.append([int(x * den) for x in r])
    m, n = len(rows), len(rows[0])
    prev = 1
    rank = 0
    for c in range(n):
        if rank == m:
            break
        piv = next((i for i in range(rank, m) if rows[i][c] != 0), None)
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        pr = rows[rank]
        for i in range(rank + 1, m):
            ri = rows[i]
            f = ri[c]
            for j in range(c + 1, n):
                ri[j] = (pr[c] * ri[j] - f * pr[j]) // prev
            ri[c] = 0
        prev = pr[c]
        rank += 1
    return rank
