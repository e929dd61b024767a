"""Finite-dimensional algebras over GF(p) given by a multiplication table."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

import numpy as np

from ..exactla import MatF, MatQ, PrimeModulus, Subspace, rank_rational, rref_array
from ..incidence import Graph, srg_params_of
from .config import CoherentConfig, StructureConstants, rank3_structure_constants


@dataclass(frozen=True, eq=False)
class FpAlgebra:
    """Associative unital algebra over GF(p) on basis ``b_0..b_{d-1}``.

    ``table[i, j, k]`` is the coefficient of ``b_k`` in ``b_i b_j``.  Elements
    are coordinate vectors.  Associativity and the unit law are verified at
    construction.
    """

    p: int
    table: np.ndarray
    labels: tuple[str, ...]
    unit: np.ndarray
    matrices: tuple[MatF, ...] | None = None

    def __post_init__(self):
        p = PrimeModulus(self.p)
        t = np.array(self.table, dtype=np.int64) % p
        d = t.shape[0]
        if t.shape != (d, d, d) or len(self.labels) != d:
            raise ValueError("table must be (d, d, d) with d labels")
        # (b_i b_j) b_k == b_i (b_j b_k) for all basis triples
        left = np.einsum("ijm,mkn->ijkn", t, t) % p
        right = np.einsum("jkm,imn->ijkn", t, t) % p
        if not np.array_equal(left, right):
            bad = tuple(int(x) for x in np.argwhere(left != right)[0][:3])
            raise ValueError(f"multiplication table is not associative at basis triple {bad}")
        u = np.array(self.unit, dtype=np.int64) % p
        ut = np.einsum("i,ijk->jk", u, t) % p
        tu = np.einsum("j,ijk->ik", u, t) % p
        eye = np.eye(d, dtype=np.int64)
        if not (np.array_equal(ut, eye) and np.array_equal(tu, eye)):
            raise ValueError("unit law fails")
        t.setflags(write=False)
        u.setflags(write=False)
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "table", t)
        object.__setattr__(self, "unit", u)
        object.__setattr__(self, "labels", tuple(self.labels))

    @property
    def dim(self) -> int:
        return self.table.shape[0]

    def basis_vector(self, i: int) -> np.ndarray:
        e = np.zeros(self.dim, dtype=np.int64)
        e[i] = 1
        return e

    def element(self, **coeffs: int) -> np.ndarray:
        """Element from label keywords, e.g. ``alg.element(s2=1, s7=1)``."""
        x = np.zeros(self.dim, dtype=np.int64)
        for name, c in coeffs.items():
            x[self.labels.index(name)] = c
        return x % self.p

    def zero(self) -> np.ndarray:
        return np.zeros(self.dim, dtype=np.int64)

    def mul(self, x, y) -> np.ndarray:
        d = self.dim
        x = np.asarray(x, dtype=np.int64)
        y = np.asarray(y, dtype=np.int64)
        return (y @ ((x @ self.table.reshape(d, d * d)).reshape(d, d) % self.p)) % self.p

    def power(self, x, n: int) -> np.ndarray:
        result = self.unit.copy()
        base = np.asarray(x, dtype=np.int64) % self.p
        while n:
            if n & 1:
                result = self.mul(result, base)
            n >>= 1
            if n:
                base = self.mul(base, base)
        return result

    def left_matrix(self, x) -> np.ndarray:
        """Matrix of ``y -> x y`` acting on coordinate columns."""
        d = self.dim
        return ((np.asarray(x, dtype=np.int64) @ self.table.reshape(d, d * d)).reshape(d, d).T) % self.p

    def right_matrix(self, y) -> np.ndarray:
        """Matrix of ``x -> x y`` acting on coordinate columns."""
        return np.einsum("j,ijk->ki", np.asarray(y, dtype=np.int64), self.table) % self.p

    def is_commutative(self) -> bool:
        return bool(np.array_equal(self.table, self.table.transpose(1, 0, 2)))

    def span(self, vectors) -> Subspace:
        return Subspace.span(vectors, self.p, self.dim)

    def sandwich(self, e, S: Subspace, f) -> Subspace:
        """The subspace ``e S f``."""
        return self.span([self.mul(self.mul(e, s), f) for s in S.basis]) if S.dim else Subspace.zero(self.dim, self.p)

    def is_two_sided_ideal(self, S: Subspace) -> bool:
        for s in S.basis:
            for i in range(self.dim):
                b = self.basis_vector(i)
                if not (S.contains(self.mul(s, b)) and S.contains(self.mul(b, s))):
                    return False
        return True

    def center(self) -> Subspace:
        """Solve ``x b_j = b_j x`` for all basis elements."""
        d = self.dim
        blocks = []
        for j in range(d):
            b = self.basis_vector(j)
            # x -> x b - b x as a matrix in x
            blocks.append((self.right_matrix(b) - self.left_matrix(b)) % self.p)
        from ..exactla import nullspace

        return nullspace(MatF(np.vstack(blocks), self.p))

    def quotient(self, ideal: Subspace) -> FpAlgebra:
        """``A / ideal`` on the basis vectors at the non-pivot coordinates of ``ideal``."""
        keep = [c for c in range(self.dim) if c not in ideal.pivots]
        k = len(keep)
        t = np.zeros((k, k, k), dtype=np.int64)
        for a, i in enumerate(keep):
            for b, j in enumerate(keep):
                t[a, b] = ideal.reduce(self.table[i, j])[keep]
        unit = ideal.reduce(self.unit)[keep]
        return FpAlgebra(self.p, t, tuple(self.labels[i] for i in keep), unit)

    def quotient_keep(self, ideal: Subspace) -> list[int]:
        return [c for c in range(self.dim) if c not in ideal.pivots]

    def subalgebra(self, vectors: Sequence, labels: Sequence[str], unit_index: int) -> FpAlgebra:
        """Algebra on the given independent, product-closed vectors.

        ``unit_index`` selects which of them is the unit of the subalgebra
        (it need not be the unit of the ambient algebra, as for corners).
        """
        vecs = np.asarray(vectors, dtype=np.int64) % self.p
        k = vecs.shape[0]
        # Coordinates w.r.t. vecs: solve c . vecs = target via the echelon of [vecs | I].
        aug = np.hstack([vecs, np.eye(k, dtype=np.int64)])
        red, piv = rref_array(aug, self.p)
        if len([c for c in piv if c < self.dim]) != k:
            raise ValueError("subalgebra vectors are linearly dependent")
        span = Subspace.span(vecs, self.p, self.dim)

        def coords(target):
            if not span.contains(target):
                raise ValueError("subalgebra basis is not closed under multiplication")
            # target = sum_r c_r vecs_r; rows of red give (echelon row) = combination of vecs.
            c = np.zeros(k, dtype=np.int64)
            for row, pc in zip(red[:k], piv[:k]):
                c = (c + target[pc] * row[self.dim :]) % self.p
            return c

        t = np.zeros((k, k, k), dtype=np.int64)
        for a in range(k):
            for b in range(k):
                t[a, b] = coords(self.mul(vecs[a], vecs[b]))
        unit = np.zeros(k, dtype=np.int64)
        unit[unit_index] = 1
        return FpAlgebra(self.p, t, tuple(labels), unit)


def fp_algebra_from_sc(sc: StructureConstants, p: int, matrices=None) -> FpAlgebra:
    """Reduce an integral multiplication table modulo ``p``."""
    p = PrimeModulus(p)
    mats = tuple(MatF(m, p) for m in matrices) if matrices is not None else None
    return FpAlgebra(p, sc.table % p, sc.labels, sc.unit % p, mats)


def cc_algebra(cc: CoherentConfig, sc: StructureConstants, p: int) -> FpAlgebra:
    return fp_algebra_from_sc(sc, p, cc.sigma)


def rank3_algebra(G: Graph, p: int) -> FpAlgebra:
    """Adjacency algebra of the rank-3 scheme ``{I, A, J - I - A}`` of a strongly regular graph."""
    srg = srg_params_of(G)
    A = G.adjacency
    n = G.order
    mats = (np.eye(n, dtype=np.int64), A, np.ones((n, n), dtype=np.int64) - np.eye(n, dtype=np.int64) - A)
    return fp_algebra_from_sc(rank3_structure_constants(srg), p, mats)


FIBER_INDICES = {"point": (0, 1, 2), "block": (3, 4, 5)}


def corner_algebra(alg: FpAlgebra, fiber: str) -> FpAlgebra:
    """``e A e`` for the fiber idempotent ``e = sigma_1`` (points) or ``sigma_4`` (blocks)."""
    idx = FIBER_INDICES[fiber]
    vecs = [alg.basis_vector(i) for i in idx]
    return alg.subalgebra(vecs, [alg.labels[i] for i in idx], 0)


def special_element_u(sc: StructureConstants, p: int = 2) -> np.ndarray:
    """Coordinates of ``sigma_2 sigma_7`` reduced mod ``p``."""
    return sc.product(2, 7) % PrimeModulus(p)


def _commutator_rows(table: np.ndarray) -> np.ndarray:
    d = table.shape[0]
    return np.array([table[i, j] - table[j, i] for i in range(d) for j in range(d) if i != j], dtype=np.int64)


def commutator_quotient_dim(sc: StructureConstants | FpAlgebra, mode: str | int = "rational") -> int:
    """``d - rank span{b_i b_j - b_j b_i}`` over Q (``mode="rational"``) or GF(p) (``mode=p``)."""
    table = sc.table
    d = table.shape[0]
    rows = _commutator_rows(table)
    if mode == "rational":
        if isinstance(sc, FpAlgebra):
            raise ValueError("rational mode needs an integral table")
        return d - rank_rational(MatQ([[Fraction(int(x)) for x in r] for r in rows]))
    p = PrimeModulus(sc.p if isinstance(sc, FpAlgebra) and mode == "mod" else mode)
    _, piv = rref_array(rows, p)
    return d - len(piv)
