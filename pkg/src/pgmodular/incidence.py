"""Incidence structures, the strongly-regular-design checker, point/block graphs.

The flag matrix ``N`` (points x blocks, 0/1) is the only stored data; flag
sets are derived on demand.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

import numpy as np

from .errors import IncidenceParseError, NotStronglyRegular, SrdViolation


@dataclass(frozen=True, eq=False)
class IncidenceStructure:
    """Points ``0..n1-1``, blocks ``0..n2-1`` and a 0/1 flag matrix ``N``."""

    N: np.ndarray

    def __post_init__(self):
        N = np.array(self.N, dtype=np.int64)
        if N.ndim != 2 or N.shape[0] < 1 or N.shape[1] < 1:
            raise ValueError("flag matrix must be a non-empty 2-D array")
        if not np.isin(N, (0, 1)).all():
            raise ValueError("flag matrix entries must be 0 or 1")
        N.setflags(write=False)
        object.__setattr__(self, "N", N)

    @classmethod
    def from_blocks(cls, n_points: int, blocks) -> IncidenceStructure:
        N = np.zeros((n_points, len(blocks)), dtype=np.int64)
        for j, blk in enumerate(blocks):
            for x in blk:
                N[x, j] = 1
        return cls(N)

    @property
    def n1(self) -> int:
        return self.N.shape[0]

    @property
    def n2(self) -> int:
        return self.N.shape[1]

    def blocks(self) -> list[list[int]]:
        return [np.nonzero(self.N[:, j])[0].tolist() for j in range(self.n2)]

    def flags_of(self, x: int) -> list[int]:
        """Blocks through point ``x``."""
        return np.nonzero(self.N[x])[0].tolist()

    def dual(self) -> IncidenceStructure:
        return IncidenceStructure(self.N.T)

    def __eq__(self, other):
        return isinstance(other, IncidenceStructure) and np.array_equal(self.N, other.N)

    def __hash__(self):
        return hash(self.N.tobytes())


@dataclass(frozen=True)
class SrdParams:
    s1: int
    s2: int
    a1: int
    b1: int
    a2: int
    b2: int
    N1: int
    P1: int
    N2: int
    P2: int

    def as_tuple(self) -> tuple[int, ...]:
        return (self.s1, self.s2, self.a1, self.b1, self.a2, self.b2, self.N1, self.P1, self.N2, self.P2)

    def dual(self) -> SrdParams:
        """Parameters the dual structure must carry."""
        return SrdParams(self.s2, self.s1, self.a2, self.b2, self.a1, self.b1, self.N2, self.P2, self.N1, self.P1)


@dataclass(frozen=True, eq=False)
class Graph:
    adjacency: np.ndarray

    def __post_init__(self):
        A = np.array(self.adjacency, dtype=np.int64)
        if A.ndim != 2 or A.shape[0] != A.shape[1]:
            raise ValueError("adjacency matrix must be square")
        if not np.isin(A, (0, 1)).all() or not np.array_equal(A, A.T) or A.diagonal().any():
            raise ValueError("adjacency matrix must be symmetric 0/1 with zero diagonal")
        A.setflags(write=False)
        object.__setattr__(self, "adjacency", A)

    @property
    def order(self) -> int:
        return self.adjacency.shape[0]

    def complement(self) -> Graph:
        n = self.order
        return Graph(np.ones((n, n), dtype=np.int64) - np.eye(n, dtype=np.int64) - self.adjacency)

    def __eq__(self, other):
        return isinstance(other, Graph) and np.array_equal(self.adjacency, other.adjacency)

    def __hash__(self):
        return hash(self.adjacency.tobytes())


@dataclass(frozen=True)
class SrgParams:
    v: int
    k: int
    lam: int
    mu: int

    def __post_init__(self):
        if self.k * (self.k - self.lam - 1) != (self.v - self.k - 1) * self.mu:
            raise ValueError(f"infeasible srg parameters {self}")

    def as_tuple(self) -> tuple[int, int, int, int]:
        return (self.v, self.k, self.lam, self.mu)


# ---------------------------------------------------------------------------
# Strongly regular design axioms


def _two_values(G: np.ndarray, condition: int, kind: str) -> tuple[int, int]:
    """The two off-diagonal values of a Gram matrix, larger first."""
    n = G.shape[0]
    if n < 2:
        raise SrdViolation(condition, ((kind, 0),), f"need two distinct {kind}s")
    seen: list[int] = []
    for i, j in itertools.combinations(range(n), 2):
        val = int(G[i, j])
        if val not in seen:
            if len(seen) == 2:
                raise SrdViolation(
                    condition, ((kind, i), (kind, j)), f"third intersection value {val} besides {sorted(seen)}"
                )
            seen.append(val)
    if len(seen) < 2:
        raise SrdViolation(condition, ((kind, 0), (kind, 1)), f"only one intersection value {seen[0]} occurs")
    hi, lo = max(seen), min(seen)
    return hi, lo


def _local_count(C: np.ndarray, N: np.ndarray, condition: int, first: str, second: str) -> tuple[int, int]:
    """Split ``C`` by incidence ``N`` and require each part to be constant.

    ``C[x, Y]`` is the count of condition (4)/(5); returns ``(on_flag, off_flag)``.
    """
    values: dict[int, int] = {}
    for x, y in itertools.product(range(N.shape[0]), range(N.shape[1])):
        flag = int(N[x, y])
        c = int(C[x, y])
        if flag not in values:
            values[flag] = c
        elif values[flag] != c:
            where = "incident" if flag else "non-incident"
            raise SrdViolation(
                condition, ((first, x), (second, y)), f"count {c} differs from {values[flag]} on {where} pairs"
            )
    return values.get(1, 0), values.get(0, 0)


def _check_conditions_1_to_5(D: IncidenceStructure) -> SrdParams:
    N = D.N
    point_deg = N.sum(axis=1)
    block_size = N.sum(axis=0)
    for x in range(D.n1):
        if point_deg[x] != point_deg[0] or point_deg[x] < 1:
            raise SrdViolation(1, (("point", x),), f"point degree {point_deg[x]} vs {point_deg[0]}")
    for y in range(D.n2):
        if block_size[y] != block_size[0] or block_size[y] < 1:
            raise SrdViolation(1, (("block", y),), f"block size {block_size[y]} vs {block_size[0]}")
    s2, s1 = int(point_deg[0]), int(block_size[0])

    a1, b1 = _two_values(N.T @ N, 2, "block")
    a2, b2 = _two_values(N @ N.T, 3, "point")

    # (4): C4[x, Y] = #{x' in Y : |F(x) & F(x')| = a2}; x' = x is included verbatim.
    adj_p = (N @ N.T == a2).astype(np.int64)
    N1, P1 = _local_count(adj_p @ N, N, 4, "point", "block")
    # (5): C5[x, Y] = #{Y' containing x : |F^-1(Y) & F^-1(Y')| = a1}.
    adj_b = (N.T @ N == a1).astype(np.int64)
    N2, P2 = _local_count(N @ adj_b, N, 5, "point", "block")
    return SrdParams(s1, s2, a1, b1, a2, b2, N1, P1, N2, P2)


def check_srd(D: IncidenceStructure) -> SrdParams:
    """Verify the six strongly-regular-design conditions and extract parameters.

    Raises:
        SrdViolation: naming the first failed condition (1-6) and the
            lexicographically first witness.
    """
    params = _check_conditions_1_to_5(D)
    try:
        dual_params = _check_conditions_1_to_5(D.dual())
    except SrdViolation as exc:
        swapped = tuple(("block" if k == "point" else "point", i) for k, i in exc.witness)
        raise SrdViolation(6, swapped, f"dual fails condition {exc.condition}: {exc.detail}") from exc
    if dual_params != params.dual():
        raise SrdViolation(6, (), f"dual parameters {dual_params.as_tuple()} != {params.dual().as_tuple()}")
    return params


# ---------------------------------------------------------------------------
# Graphs


def point_graph(D: IncidenceStructure, params: SrdParams) -> Graph:
    G = D.N @ D.N.T
    A = (G == params.a2).astype(np.int64)
    np.fill_diagonal(A, 0)
    return Graph(A)


def block_graph(D: IncidenceStructure, params: SrdParams) -> Graph:
    G = D.N.T @ D.N
    A = (G == params.a1).astype(np.int64)
    np.fill_diagonal(A, 0)
    return Graph(A)


def srg_params_of(G: Graph) -> SrgParams:
    """Strongly-regular-graph parameters, rejecting complete and edgeless graphs."""
    A = G.adjacency
    v = G.order
    deg = A.sum(axis=1)
    if v < 2 or (deg != deg[0]).any():
        raise NotStronglyRegular("graph is not regular")
    k = int(deg[0])
    if k == 0:
        raise NotStronglyRegular("edgeless graph: lambda undefined")
    if k == v - 1:
        raise NotStronglyRegular("complete graph: mu undefined")
    common = A @ A
    off = ~np.eye(v, dtype=bool)
    lam_vals = np.unique(common[(A == 1) & off])
    mu_vals = np.unique(common[(A == 0) & off])
    if lam_vals.size != 1:
        raise NotStronglyRegular(f"adjacent pairs have common-neighbour counts {lam_vals.tolist()}")
    if mu_vals.size != 1:
        raise NotStronglyRegular(f"non-adjacent pairs have common-neighbour counts {mu_vals.tolist()}")
    return SrgParams(v, k, int(lam_vals[0]), int(mu_vals[0]))


@dataclass(frozen=True)
class MatrixIdentities:
    """Outcome of the five basic identities relating ``N``, ``A1``, ``A2``."""

    replication: bool  # N 1 = s2 1 and N^T 1 = s1 1
    point_gram: bool  # N N^T = s2 I + a2 A1 + b2 (J - I - A1)
    block_gram: bool  # N^T N = s1 I + a1 A2 + b1 (J - I - A2)
    point_side: bool  # A1 N = (N1 - P1) N + P1 J
    block_side: bool  # N A2 = (N2 - P2) N + P2 J

    def as_tuple(self) -> tuple[bool, ...]:
        return (self.replication, self.point_gram, self.block_gram, self.point_side, self.block_side)

    def all(self) -> bool:
        return all(self.as_tuple())


def verify_matrix_identities(D: IncidenceStructure, params: SrdParams) -> MatrixIdentities:
    N = D.N
    n1, n2 = D.n1, D.n2
    A1 = point_graph(D, params).adjacency
    A2 = block_graph(D, params).adjacency
    I1, I2 = np.eye(n1, dtype=np.int64), np.eye(n2, dtype=np.int64)
    J1, J2, J12 = (np.ones(s, dtype=np.int64) for s in ((n1, n1), (n2, n2), (n1, n2)))
    q = params
    return MatrixIdentities(
        replication=bool(
            np.array_equal(N.sum(axis=1), np.full(n1, q.s2)) and np.array_equal(N.sum(axis=0), np.full(n2, q.s1))
        ),
        point_gram=bool(np.array_equal(N @ N.T, q.s2 * I1 + q.a2 * A1 + q.b2 * (J1 - I1 - A1))),
        block_gram=bool(np.array_equal(N.T @ N, q.s1 * I2 + q.a1 * A2 + q.b1 * (J2 - I2 - A2))),
        point_side=bool(np.array_equal(A1 @ N, (q.N1 - q.P1) * N + q.P1 * J12)),
        block_side=bool(np.array_equal(N @ A2, (q.N2 - q.P2) * N + q.P2 * J12)),
    )


# ---------------------------------------------------------------------------
# Generators


def gen_doily() -> IncidenceStructure:
    """GQ(2,2): points are the 2-subsets of {0..5}, lines the 15 perfect matchings."""
    points = list(itertools.combinations(range(6), 2))
    index = {pt: i for i, pt in enumerate(points)}
    matchings = set()
    for perm in itertools.permutations(range(6)):
        matchings.add(tuple(sorted(tuple(sorted(perm[i : i + 2])) for i in (0, 2, 4))))
    blocks = [sorted(index[pair] for pair in m) for m in sorted(matchings)]
    return IncidenceStructure.from_blocks(len(points), blocks)


def gen_grid(n: int) -> IncidenceStructure:
    """The n x n grid: point ``(i, j)`` is ``i*n + j``; blocks are rows then columns."""
    if n < 2:
        raise ValueError("grid size must be at least 2")
    rows = [[i * n + j for j in range(n)] for i in range(n)]
    cols = [[i * n + j for i in range(n)] for j in range(n)]
    return IncidenceStructure.from_blocks(n * n, rows + cols)


def gen_fano() -> IncidenceStructure:
    """PG(2,2), used as a negative example: all lines meet in one point."""
    lines = [[(i + d) % 7 for d in (0, 1, 3)] for i in range(7)]
    return IncidenceStructure.from_blocks(7, [sorted(l) for l in lines])


# ---------------------------------------------------------------------------
# Incidence file format


def format_incidence(D: IncidenceStructure) -> str:
    lines = [f"points {D.n1}", f"blocks {D.n2}"]
    lines += [" ".join(str(x) for x in blk) for blk in D.blocks()]
    return "\n".join(lines) + "\n"


def parse_incidence(text: str) -> IncidenceStructure:
    """Parse the plain-text incidence format.

    Line 1 ``points <n1>``, line 2 ``blocks <n2>``, then one ascending line of
    0-based point indices per block.  Blank lines and ``#`` comments are
    skipped.
    """
    content: list[tuple[int, str]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            content.append((lineno, line))

    def header(pos: int, word: str) -> int:
        if pos >= len(content):
            raise IncidenceParseError(pos + 1, f"missing '{word} <count>' header")
        lineno, line = content[pos]
        parts = line.split()
        if len(parts) != 2 or parts[0] != word or not parts[1].isdigit() or int(parts[1]) < 1:
            raise IncidenceParseError(lineno, f"expected '{word} <positive count>', got {line!r}")
        return int(parts[1])

    n1 = header(0, "points")
    n2 = header(1, "blocks")
    body = content[2:]
    if len(body) != n2:
        where = body[n2][0] if len(body) > n2 else (content[-1][0] if content else 1)
        raise IncidenceParseError(where, f"expected {n2} block lines, found {len(body)}")
    blocks = []
    for lineno, line in body:
        try:
            pts = [int(tok) for tok in line.split()]
        except ValueError:
            raise IncidenceParseError(lineno, f"non-integer token in {line!r}") from None
        for x in pts:
            if not 0 <= x < n1:
                raise IncidenceParseError(lineno, f"point index {x} out of range 0..{n1 - 1}")
        if len(set(pts)) != len(pts):
            raise IncidenceParseError(lineno, "duplicate point in block")
        if pts != sorted(pts):
            raise IncidenceParseError(lineno, "point indices must be ascending")
        blocks.append(pts)
    return IncidenceStructure.from_blocks(n1, blocks)
