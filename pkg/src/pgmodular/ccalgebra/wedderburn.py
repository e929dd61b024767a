"""Wedderburn decomposition of ``A / Rad(A)`` over GF(p).

The centre of the semisimple quotient is a product of finite fields.  Its
Frobenius-fixed subalgebra ``{z : z^p = z}`` is a product of copies of GF(p),
one per field, and elements there split idempotents directly via
``e - (w - c e)^(p-1)``, so no polynomial factoring is needed.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass

import numpy as np

from ..errors import NonSquareDimension
from ..exactla import MatF, Subspace, nullspace
from .algebra import FpAlgebra
from .radical import RadicalReport, radical


@dataclass(frozen=True, order=True)
class Component:
    """Simple component ``M_n(GF(p^f))``."""

    n: int
    f: int

    @property
    def dim(self) -> int:
        return self.n * self.n * self.f


@dataclass(frozen=True)
class WedderburnReport:
    components: tuple[Component, ...]
    radical_dim: int
    quotient: FpAlgebra
    central_idempotents: tuple[np.ndarray, ...]

    @property
    def total_dim(self) -> int:
        return sum(c.dim for c in self.components)

    @property
    def count(self) -> int:
        return len(self.components)


def frobenius_fixed(alg: FpAlgebra, vectors) -> Subspace:
    """``{z in span(vectors) : z^p = z}`` for a commuting, product-closed span."""
    V = alg.span(vectors)
    if V.dim == 0:
        return V
    M = np.array([(alg.power(v, alg.p) - v) % alg.p for v in V.basis])
    if not M.any():
        return V
    coeffs = nullspace(MatF(M.T, alg.p))
    if coeffs.dim == 0:
        return Subspace.zero(alg.dim, alg.p)
    return alg.span(coeffs.basis @ V.basis % alg.p)


def split_idempotent(alg: FpAlgebra, e: np.ndarray, fixed: Subspace) -> list[np.ndarray]:
    """Split ``e`` into the primitive idempotents of the Frobenius-fixed algebra ``e * fixed``."""
    p = alg.p
    pending = [np.asarray(e) % p]
    done = []
    while pending:
        e = pending.pop()
        local = alg.span([alg.mul(e, z) for z in fixed.basis] + [e])
        if local.dim <= 1:
            done.append(e)
            continue
        line = alg.span([e])
        w = next(x for x in local.basis if not line.contains(x))
        for c in range(p):
            eps = (e - alg.power((w - c * e) % p, p - 1)) % p
            if eps.any():
                pending.append(eps)
    done.sort(key=lambda v: tuple(int(x) for x in v))
    return done


def _corner(alg: FpAlgebra, e: np.ndarray) -> Subspace:
    return alg.span([alg.mul(alg.mul(e, alg.basis_vector(i)), e) for i in range(alg.dim)])


def primitive_split(alg: FpAlgebra, e: np.ndarray, f: int, rng: random.Random, tries: int = 200) -> list[np.ndarray]:
    """Split an idempotent of a simple component ``M_n(GF(p^f))`` into ``n`` primitive ones.

    A random corner element ``b`` gives ``s = b^(p^N)`` with ``p^N >= dim``,
    which generates a semisimple commutative subalgebra; its Frobenius-fixed
    idempotents refine ``e`` whenever ``s`` is not confined to a field.
    """
    p = alg.p
    corner = _corner(alg, e)
    if corner.dim == f:
        return [e]
    power = p
    while power < alg.dim:
        power *= p
    for _ in range(tries):
        coeffs = np.array([rng.randrange(p) for _ in range(corner.dim)], dtype=np.int64)
        s = alg.power(coeffs @ corner.basis % p, power)
        gens = [e]
        cur = e
        span = alg.span(gens)
        while True:
            cur = alg.mul(cur, s)
            if span.contains(cur):
                break
            gens.append(cur)
            span = alg.span(gens)
        fixed = frobenius_fixed(alg, span.basis)
        if fixed.dim >= 2:
            parts = split_idempotent(alg, e, fixed)
            out = []
            for part in parts:
                out.extend(primitive_split(alg, part, f, rng, tries))
            return out
    raise RuntimeError("no splitting element found in the allotted tries")


def _square_root(component_dim: int, f: int) -> int:
    if component_dim % f:
        raise NonSquareDimension(f"component dimension {component_dim} is not divisible by centre degree {f}")
    q = component_dim // f
    n = math.isqrt(q)
    if n * n != q:
        raise NonSquareDimension(f"component dimension {component_dim} / {f} = {q} is not a square")
    return n


def wedderburn(alg: FpAlgebra, rad: RadicalReport | None = None) -> WedderburnReport:
    """Components ``(n_i, f_i)`` of ``alg / Rad(alg)``, sorted by ``(n, f)``.

    ``central_idempotents`` are given in the quotient's coordinates, in the
    same order as ``components``.
    """
    rad = rad or radical(alg)
    Q = alg.quotient(rad.basis)
    Z = Q.center()
    fixed = frobenius_fixed(Q, Z.basis)
    idems = split_idempotent(Q, Q.unit, fixed)
    parts = []
    for e in idems:
        f = Q.span([Q.mul(e, z) for z in Z.basis]).dim
        d_e = Q.span([Q.mul(e, Q.basis_vector(i)) for i in range(Q.dim)]).dim
        parts.append((Component(_square_root(d_e, f), f), tuple(int(x) for x in e), e))
    parts.sort(key=lambda t: (t[0].n, t[0].f, t[1]))
    return WedderburnReport(
        components=tuple(c for c, _, _ in parts),
        radical_dim=rad.dim,
        quotient=Q,
        central_idempotents=tuple(e for _, _, e in parts),
    )


def simple_components(alg: FpAlgebra) -> list[tuple[int, int]]:
    return [(c.n, c.f) for c in wedderburn(alg).components]
