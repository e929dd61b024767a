"""Lifted idempotents, Cartan data and Loewy layers of a modular algebra."""

from __future__ import annotations

import random
from dataclasses import dataclass

import numpy as np

from ..errors import LiftingFailure
from .algebra import FpAlgebra
from .radical import RadicalReport, radical
from .wedderburn import Component, WedderburnReport, primitive_split, wedderburn


@dataclass(frozen=True)
class QuiverReport:
    """Quiver-type data with one vertex per simple component of ``A / Rad``.

    ``arrows`` and ``cartan`` use the block idempotent ``E_I`` (sum of the
    primitive idempotents of component ``I``), so their totals are
    ``dim Rad/Rad^2`` and ``dim A`` (row sums are ``block_dims``).
    ``gabriel_arrows``, ``loewy_layers`` and ``projective_dims`` use one
    primitive idempotent ``e_I`` per vertex.
    """

    components: tuple[Component, ...]
    idempotents: tuple[np.ndarray, ...]
    idempotent_vertex: tuple[int, ...]
    arrows: tuple[tuple[int, ...], ...]
    gabriel_arrows: tuple[tuple[int, ...], ...]
    cartan: tuple[tuple[int, ...], ...]
    block_dims: tuple[int, ...]
    projective_dims: tuple[int, ...]
    loewy_layers: tuple[tuple[int, ...], ...]
    orthogonal: bool
    complete: bool

    @property
    def vertices(self) -> int:
        return len(self.components)

    @property
    def arrow_total(self) -> int:
        return sum(map(sum, self.arrows))


def lift_idempotents(alg: FpAlgebra, keep: list[int], primitives: list[np.ndarray]) -> list[np.ndarray]:
    """Lift orthogonal idempotents of ``A / Rad`` to orthogonal idempotents of ``A``.

    Each lift is taken inside the corner ``(1 - E) A (1 - E)`` of the lifts
    found so far and stabilised by repeated ``p``-th powers.

    Raises:
        LiftingFailure: if powering does not stabilise within ``dim A`` steps.
    """
    p, d = alg.p, alg.dim
    E = alg.zero()
    lifts = []
    for x in primitives:
        xa = alg.zero()
        xa[keep] = x
        comp = (alg.unit - E) % p
        y = alg.mul(alg.mul(comp, xa), comp)
        for _ in range(d + 1):
            z = alg.power(y, p)
            if np.array_equal(z, y):
                break
            y = z
        else:
            raise LiftingFailure(f"p-th powering did not stabilise within {d} steps")
        lifts.append(y)
        E = (E + y) % p
    return lifts


def _peirce_dim(alg: FpAlgebra, e, S, f) -> int:
    return alg.sandwich(e, S, f).dim


def quiver(alg: FpAlgebra, rad: RadicalReport | None = None, wd: WedderburnReport | None = None) -> QuiverReport:
    p = alg.p
    rad = rad or radical(alg)
    wd = wd or wedderburn(alg, rad)
    Q = wd.quotient
    keep = alg.quotient_keep(rad.basis)
    rng = random.Random(0)
    prims, owner = [], []
    for idx, (comp, eps) in enumerate(zip(wd.components, wd.central_idempotents)):
        for e in primitive_split(Q, eps, comp.f, rng):
            prims.append(e)
            owner.append(idx)
    lifts = lift_idempotents(alg, keep, prims)

    r = len(wd.components)
    zero = alg.zero()
    orthogonal = all(
        np.array_equal(alg.mul(a, b), a if i == j else zero) for i, a in enumerate(lifts) for j, b in enumerate(lifts)
    )
    complete = bool(np.array_equal(sum(lifts, zero) % p, alg.unit))
    if not (orthogonal and complete):
        raise LiftingFailure("lifted idempotents are not a complete orthogonal family")

    blocks = [sum((lifts[k] for k in range(len(lifts)) if owner[k] == I), zero) % p for I in range(r)]
    reps = [lifts[owner.index(I)] for I in range(r)]
    full = alg.span(np.eye(alg.dim, dtype=np.int64))
    R1 = rad.powers[0]
    R2 = rad.powers[1] if len(rad.powers) > 1 else rad.powers[0]

    def grid(idems, S, T=None):
        return tuple(
            tuple(_peirce_dim(alg, a, S, b) - (_peirce_dim(alg, a, T, b) if T is not None else 0) for b in idems)
            for a in idems
        )

    arrows = grid(blocks, R1, R2)
    gabriel = grid(reps, R1, R2)
    cartan = grid(blocks, full)

    layers = []
    for e in reps:
        chain = [full, *rad.powers]
        dims = [alg.span([alg.mul(e, s) for s in S.basis]).dim if S.dim else 0 for S in chain]
        layer = [a - b for a, b in zip(dims, dims[1:])]
        while len(layer) > 1 and layer[-1] == 0:
            layer.pop()
        layers.append(tuple(layer))
    return QuiverReport(
        components=wd.components,
        idempotents=tuple(lifts),
        idempotent_vertex=tuple(owner),
        arrows=arrows,
        gabriel_arrows=gabriel,
        cartan=cartan,
        block_dims=tuple(sum(row) for row in cartan),
        projective_dims=tuple(sum(layer) for layer in layers),
        loewy_layers=tuple(layers),
        orthogonal=orthogonal,
        complete=complete,
    )
