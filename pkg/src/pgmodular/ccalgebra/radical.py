"""Jacobson radical over GF(p): a trace-form algorithm and an enumeration oracle."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ..exactla import MatF, Subspace, batched_rref, nullspace, subspace_product
from .algebra import FIBER_INDICES, FpAlgebra, corner_algebra

BRUTEFORCE_LIMIT = 10**6


@dataclass(frozen=True)
class RadicalReport:
    """Radical of an algebra together with its power filtration.

    Attributes:
        basis: canonical subspace ``Rad``.
        powers: ``Rad, Rad^2, ...`` ending with the zero subspace.
        is_ideal, is_nilpotent, quotient_semisimple: certificate flags.
    """

    basis: Subspace
    powers: tuple[Subspace, ...]
    is_ideal: bool
    is_nilpotent: bool
    quotient_semisimple: bool

    @property
    def dim(self) -> int:
        return self.basis.dim

    @property
    def power_dims(self) -> list[int]:
        return [S.dim for S in self.powers]

    @property
    def loewy_length(self) -> int:
        """Least ``L`` with ``Rad^L = 0`` (1 for a semisimple algebra)."""
        return len(self.powers)

    @property
    def certified(self) -> bool:
        return self.is_ideal and self.is_nilpotent and self.quotient_semisimple


def _int_matpow_trace(M: np.ndarray, e: int, mod: int) -> int:
    """``Tr(M^e) mod mod`` for an integer matrix, by repeated squaring."""
    obj = mod > 3_000_000_000 or M.shape[0] * mod * mod >= 2**62
    a = M.astype(object) if obj else M.astype(np.int64)
    result = None
    while e:
        if e & 1:
            result = a if result is None else (result @ a) % mod
        e >>= 1
        if e:
            a = (a @ a) % mod
    return int(np.trace(result)) % mod


def _radical_basis(alg: FpAlgebra) -> Subspace:
    """Layered trace-form kernels on the left regular representation.

    ``I_{-1} = A`` and ``I_i`` consists of ``a`` in ``I_{i-1}`` with
    ``g_i(a b) = 0`` for every basis element ``b``, where
    ``g_i(a) = (Tr(L(a)^(p^i)) mod p^(i+1)) / p^i`` on an integer lift.
    The radical is ``I_l`` with ``l = floor(log_p d)``.
    """
    p, d = alg.p, alg.dim
    levels = 0
    while p ** (levels + 1) <= d:
        levels += 1
    current = Subspace.full(d, p)
    for i in range(levels + 1):
        if current.dim == 0:
            break
        q = p**i
        mod = p * q
        G = np.zeros((current.dim, d), dtype=np.int64)
        for k, c in enumerate(current.basis):
            for j in range(d):
                L = alg.left_matrix(alg.mul(c, alg.basis_vector(j)))
                G[k, j] = (_int_matpow_trace(L, q, mod) // q) % p
        # a = sum_k x_k c_k lies in I_i iff x G = 0
        coeffs = nullspace(MatF(G.T, p)) if G.any() else Subspace.full(current.dim, p)
        if coeffs.dim == 0:
            current = Subspace.zero(d, p)
        else:
            current = Subspace.span(coeffs.basis @ current.basis % p, p, d)
    return current


def _powers(alg: FpAlgebra, R: Subspace) -> tuple[tuple[Subspace, ...], bool]:
    chain = [R]
    while chain[-1].dim:
        nxt = subspace_product(chain[-1], R, alg.mul)
        if nxt == chain[-1]:
            return tuple(chain), False
        chain.append(nxt)
    return tuple(chain), True


def radical(alg: FpAlgebra) -> RadicalReport:
    R = _radical_basis(alg)
    powers, nilpotent = _powers(alg, R)
    ideal = alg.is_two_sided_ideal(R)
    quotient_ok = R.dim == alg.dim or _radical_basis(alg.quotient(R)).dim == 0
    return RadicalReport(R, powers, ideal, nilpotent, quotient_ok)


def _is_nilpotent(alg: FpAlgebra, S: Subspace) -> bool:
    return _powers(alg, S)[1]


def radical_bruteforce(alg: FpAlgebra, chunk: int = 8192) -> Subspace:
    """Enumerate every element ``x`` and keep those whose left ideal ``A x`` is nilpotent.

    Raises:
        ValueError: if ``p^d`` exceeds the enumeration limit.
    """
    p, d = alg.p, alg.dim
    total = p**d
    if total > BRUTEFORCE_LIMIT:
        raise ValueError(f"p^d = {total} exceeds the enumeration limit {BRUTEFORCE_LIMIT}")
    digits = p ** np.arange(d, dtype=np.int64)
    verdict: dict[bytes, bool] = {}
    members = []
    for start in range(0, total, chunk):
        idx = np.arange(start, min(start + chunk, total), dtype=np.int64)
        X = (idx[:, None] // digits[None, :]) % p
        # rows of the stacked matrix are b_i x
        gens = np.einsum("nj,ijk->nik", X, alg.table) % p
        reduced, _ = batched_rref(gens, p)
        # one opaque byte string per echelon form makes np.unique cheap
        flat = np.ascontiguousarray(reduced.reshape(len(idx), -1).astype(np.uint8 if p < 256 else np.int64))
        keys = flat.view(np.dtype((np.void, flat.dtype.itemsize * flat.shape[1]))).ravel()
        uniq, first, inverse = np.unique(keys, return_index=True, return_inverse=True)
        ok = np.zeros(len(uniq), dtype=bool)
        for u, key in enumerate(uniq):
            key = key.tobytes()
            if key not in verdict:
                basis = reduced[first[u]]
                basis = basis[np.any(basis != 0, axis=1)]
                verdict[key] = _is_nilpotent(alg, Subspace.span(basis, p, d))
            ok[u] = verdict[key]
        members.extend(X[ok[inverse]])
    R = Subspace.span(members, p, d) if members else Subspace.zero(d, p)
    if len(members) != p**R.dim:
        raise AssertionError("nilpotent left-ideal generators do not form a subspace")
    return R


@dataclass(frozen=True)
class CornerCheck:
    """``Rad(e A e)`` against ``e Rad(A) e`` for a fiber idempotent ``e``."""

    fiber: str
    corner_radical: Subspace
    sandwiched: Subspace

    @property
    def holds(self) -> bool:
        return self.corner_radical == self.sandwiched


def corner_radical_identity(alg: FpAlgebra, rad: RadicalReport, fiber: str) -> CornerCheck:
    """Compare both sides inside the ambient coordinates of a design algebra."""
    idx = list(FIBER_INDICES[fiber])
    inner = radical(corner_algebra(alg, fiber)).basis
    embedded = np.zeros((inner.dim, alg.dim), dtype=np.int64)
    embedded[:, idx] = inner.basis
    e = alg.basis_vector(idx[0])
    return CornerCheck(fiber, alg.span(embedded), alg.sandwich(e, rad.basis, e))
