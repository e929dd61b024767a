"""The type-[3,2;3] coherent configuration of a strongly regular design."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ..errors import NotCoherent
from ..incidence import IncidenceStructure, SrdParams, SrgParams, block_graph, point_graph

SIGMA_LABELS = tuple(f"s{i}" for i in range(1, 11))


@dataclass(frozen=True, eq=False)
class CoherentConfig:
    """Ten 0/1 relation matrices on ``X = P + B`` (points first, then blocks).

    ``sigma[0]`` is sigma_1 and so on; the order is fixed: identity, point
    adjacency and non-adjacency on ``P``; the same three on ``B``; then
    flags ``P x B``, non-flags ``P x B``, and their transposes.
    """

    n1: int
    n2: int
    sigma: tuple[np.ndarray, ...]

    def __post_init__(self):
        mats = tuple(np.array(m, dtype=np.int64) for m in self.sigma)
        n = self.n1 + self.n2
        if len(mats) != 10 or any(m.shape != (n, n) for m in mats):
            raise ValueError("need ten square relation matrices of size n1 + n2")
        for m in mats:
            m.setflags(write=False)
        total = sum(mats)
        if not np.array_equal(total, np.ones((n, n), dtype=np.int64)):
            raise ValueError("relations must partition X x X")
        if not np.array_equal(mats[0] + mats[3], np.eye(n, dtype=np.int64)):
            raise ValueError("sigma_1 + sigma_4 must be the identity")
        for i in range(6):
            if not np.array_equal(mats[i], mats[i].T):
                raise ValueError(f"sigma_{i + 1} must be symmetric")
        if not (np.array_equal(mats[6].T, mats[8]) and np.array_equal(mats[7].T, mats[9])):
            raise ValueError("sigma_7/sigma_9 and sigma_8/sigma_10 must be transposes")
        object.__setattr__(self, "sigma", mats)

    @property
    def order(self) -> int:
        return self.n1 + self.n2


def build_cc(D: IncidenceStructure, params: SrdParams) -> CoherentConfig:
    n1, n2 = D.n1, D.n2
    N = D.N
    A1 = point_graph(D, params).adjacency
    A2 = block_graph(D, params).adjacency
    I1, I2 = np.eye(n1, dtype=np.int64), np.eye(n2, dtype=np.int64)
    J1, J2 = np.ones((n1, n1), dtype=np.int64), np.ones((n2, n2), dtype=np.int64)
    J12 = np.ones((n1, n2), dtype=np.int64)
    Z11, Z12 = np.zeros((n1, n1), dtype=np.int64), np.zeros((n1, n2), dtype=np.int64)
    Z21, Z22 = Z12.T, np.zeros((n2, n2), dtype=np.int64)

    def pp(m):
        return np.block([[m, Z12], [Z21, Z22]])

    def bb(m):
        return np.block([[Z11, Z12], [Z21, m]])

    def pb(m):
        return np.block([[Z11, m], [Z21, Z22]])

    def bp(m):
        return np.block([[Z11, Z12], [m, Z22]])

    sigma = (
        pp(I1), pp(A1), pp(J1 - I1 - A1),
        bb(I2), bb(A2), bb(J2 - I2 - A2),
        pb(N), pb(J12 - N), bp(N.T), bp(J12.T - N.T),
    )  # fmt: skip
    return CoherentConfig(n1, n2, sigma)


@dataclass(frozen=True, eq=False)
class StructureConstants:
    """Integer multiplication table ``b_i b_j = sum_k table[i, j, k] b_k`` (0-based).

    ``product(i, j)`` takes 1-based relation indices, matching sigma_1..sigma_d.
    """

    table: np.ndarray
    labels: tuple[str, ...]
    unit: np.ndarray

    def __post_init__(self):
        t = np.array(self.table, dtype=np.int64)
        d = len(self.labels)
        if t.shape != (d, d, d):
            raise ValueError("table shape must be (d, d, d)")
        u = np.array(self.unit, dtype=np.int64)
        t.setflags(write=False)
        u.setflags(write=False)
        object.__setattr__(self, "table", t)
        object.__setattr__(self, "unit", u)

    @property
    def dim(self) -> int:
        return len(self.labels)

    def product(self, i: int, j: int) -> np.ndarray:
        return self.table[i - 1, j - 1]


def structure_constants(cc: CoherentConfig) -> StructureConstants:
    """Read each ``p_ij^k`` from one representative entry of relation ``k``, then verify.

    Raises:
        NotCoherent: for the first ``(i, j)`` whose product is not the claimed
            integer combination of the relation matrices.
    """
    mats = cc.sigma
    d = len(mats)
    reps = [tuple(int(c) for c in np.argwhere(m)[0]) for m in mats]
    table = np.zeros((d, d, d), dtype=np.int64)
    for i in range(d):
        for j in range(d):
            prod = mats[i] @ mats[j]
            coeffs = [int(prod[u, v]) for (u, v) in reps]
            claimed = sum(c * m for c, m in zip(coeffs, mats))
            if not np.array_equal(claimed, prod):
                bad = tuple(int(c) for c in np.argwhere(claimed != prod)[0])
                raise NotCoherent(i + 1, j + 1, bad)
            table[i, j] = coeffs
    unit = np.zeros(d, dtype=np.int64)
    unit[[0, 3]] = 1
    return StructureConstants(table, SIGMA_LABELS, unit)


def rank3_structure_constants(srg: SrgParams) -> StructureConstants:
    """Integer table of the rank-3 scheme on basis ``(I, A, J - I - A)``.

    Uses ``A^2 = kI + lam A + mu A2`` and the consequences of ``J = I + A + A2``.
    """
    v, k, lam, mu = srg.as_tuple()
    n = v - k - 1
    t = np.zeros((3, 3, 3), dtype=np.int64)
    for i in range(3):
        t[0, i, i] = t[i, 0, i] = 1
    t[1, 1] = (k, lam, mu)
    t[1, 2] = t[2, 1] = (0, k - lam - 1, k - mu)
    t[2, 2] = (n, n - k + lam + 1, n - 1 - k + mu)
    return StructureConstants(t, ("A0", "A1", "A2"), np.array([1, 0, 0]))
