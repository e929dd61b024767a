"""Closed-form arithmetic for the point scheme of a partial geometry pg(s,t,alpha).

Everything here is exact integer/rational arithmetic; divisions that must be
exact are checked and reported through :class:`~pgmodular.errors.NonIntegral`.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction

from .errors import InvalidParameters, NonIntegral
from .exactla import PrimeModulus, prime_factors


@dataclass(frozen=True)
class PgParams:
    s: int
    t: int
    alpha: int

    def __post_init__(self):
        if min(self.s, self.t) < 1:
            raise InvalidParameters(f"s and t must be >= 1, got s={self.s}, t={self.t}")
        if not 1 <= self.alpha <= min(self.s, self.t):
            raise InvalidParameters(f"need 1 <= alpha <= min(s, t), got alpha={self.alpha}")

    @property
    def rs_gap(self) -> int:
        """``s + t + 1 - alpha``, the difference of the two non-trivial eigenvalues."""
        return self.s + self.t + 1 - self.alpha


@dataclass(frozen=True)
class PgSpectrum:
    v: int
    b: int
    k: int
    lam: int
    mu: int
    r: int
    sprime: int
    f: int
    g: int

    def as_tuple(self) -> tuple[int, ...]:
        return (self.v, self.b, self.k, self.lam, self.mu, self.r, self.sprime, self.f, self.g)


def _exact(field: str, num: int, den: int) -> int:
    q = Fraction(num, den)
    if q.denominator != 1:
        raise NonIntegral(field, q)
    return int(q)


def pg_spectrum(params: PgParams) -> PgSpectrum:
    s, t, a = params.s, params.t, params.alpha
    gap = params.rs_gap
    v = _exact("v", (s + 1) * (s * t + a), a)
    b = _exact("b", (t + 1) * (s * t + a), a)
    f = _exact("f", s * t * (s * t + s + t + 1), a * gap)
    g = _exact("g", s * (s * t + a) * (s + 1 - a), a * gap)
    k = s * (t + 1)
    lam = s - 1 + t * (a - 1)
    mu = a * (t + 1)
    r, sprime = s - a, -(t + 1)
    assert 1 + f + g == v and k + f * r + g * sprime == 0
    return PgSpectrum(v, b, k, lam, mu, r, sprime, f, g)


def frame_as(params: PgParams) -> int:
    """Frame number ``v^2 (s+t+1-alpha)^2`` of the point scheme."""
    v = pg_spectrum(params).v
    return v * v * params.rs_gap**2


def frame_from_spectrum(v: int, k: int, f: int, g: int) -> Fraction:
    """Rank-3 Frame number ``v^3 k (v-1-k) / (f g)`` as an exact rational."""
    if f * g == 0:
        raise InvalidParameters("multiplicities f and g must be non-zero")
    return Fraction(v**3 * k * (v - 1 - k), f * g)


def bad_primes(params: PgParams) -> list[int]:
    """Primes at which the point scheme's adjacency algebra is not semisimple."""
    return prime_factors(pg_spectrum(params).v * params.rs_gap)


class PrimeCase(enum.Enum):
    SS = "SS"
    V = "V"
    R = "R"
    VR = "VR"


def classify_prime(params: PgParams, p: int) -> PrimeCase:
    p = PrimeModulus(p)
    divides_v = pg_spectrum(params).v % p == 0
    divides_gap = params.rs_gap % p == 0
    return {
        (False, False): PrimeCase.SS,
        (True, False): PrimeCase.V,
        (False, True): PrimeCase.R,
        (True, True): PrimeCase.VR,
    }[(divides_v, divides_gap)]


class RadicalGenerator(enum.Enum):
    ALL_ONES_J = "J"
    QUADRATIC_B = "B"  # B = (A - kI)(A - rI)


@dataclass(frozen=True)
class SymbolicRadical:
    dim: int
    generators: tuple[RadicalGenerator, ...]


def symbolic_radical(params: PgParams, p: int) -> SymbolicRadical:
    case = classify_prime(params, p)
    gens = {
        PrimeCase.SS: (),
        PrimeCase.V: (RadicalGenerator.ALL_ONES_J,),
        PrimeCase.R: (RadicalGenerator.QUADRATIC_B,),
        PrimeCase.VR: (RadicalGenerator.ALL_ONES_J, RadicalGenerator.QUADRATIC_B),
    }[case]
    return SymbolicRadical(len(gens), gens)


class PrankKind(enum.Enum):
    FULL = "Full"
    DROP_ONE = "DropOne"
    DROP_F = "DropF"
    DROP_G = "DropG"
    EXCEPTIONAL_COLLISION = "ExceptionalCollision"
    EXCEPTIONAL_TYPE_B = "ExceptionalTypeB"


@dataclass(frozen=True)
class PrankResult:
    kind: PrankKind
    value: int | None = None

    @property
    def exceptional(self) -> bool:
        return self.value is None


def generic_prank(params: PgParams, p: int) -> PrankResult:
    """Predicted p-rank of the point-graph adjacency matrix.

    When ``k, r, s'`` stay pairwise distinct mod ``p`` the matrix is
    diagonalizable over the algebraic closure and the rank drops by the
    multiplicity of whichever eigenvalue vanishes.  Colliding eigenvalues are
    reported without a number; the collision with no vanishing eigenvalue is
    singled out as type B.
    """
    p = PrimeModulus(p)
    sp = pg_spectrum(params)
    eig = {"k": sp.k % p, "r": sp.r % p, "s": sp.sprime % p}
    zeros = [name for name, val in eig.items() if val == 0]
    if len(set(eig.values())) < 3:
        kind = PrankKind.EXCEPTIONAL_TYPE_B if not zeros else PrankKind.EXCEPTIONAL_COLLISION
        return PrankResult(kind)
    if not zeros:
        return PrankResult(PrankKind.FULL, sp.v)
    drop = {"k": (PrankKind.DROP_ONE, 1), "r": (PrankKind.DROP_F, sp.f), "s": (PrankKind.DROP_G, sp.g)}
    kind, by = drop[zeros[0]]
    return PrankResult(kind, sp.v - by)


def feasible_params(max_st: int = 8):
    """All (s, t, alpha) with s, t <= max_st and an integral spectrum."""
    for s in range(1, max_st + 1):
        for t in range(1, max_st + 1):
            for a in range(1, min(s, t) + 1):
                pp = PgParams(s, t, a)
                try:
                    pg_spectrum(pp)
                except NonIntegral:
                    continue
                yield pp
