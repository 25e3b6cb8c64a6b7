"""Expected f-vectors of the random polytope families and the Reitzner
constants.

The primary computational route for every family is the parity-restricted
sum  E f_{k-1} = 2 * sum over m of (external angle sum) * (internal angle
sum): it has no parity gaps.  The direct residue formulas are kept as
independent cross-checks.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Optional

import mpmath

from . import quadrature, series_kernel, trig_algebra
from .angle_engine import (
    _bJ_row,
    _bJtilde_row,
    bJ_exact,
    bJ_numeric,
    bJtilde_numeric,
    bernoulli_fill,
    residue_rational,
)
from .exact_scalars import DomainError, PiNumber, c_tilde_beta, gamma_half
from .series_kernel import int_power, shift, sin_power

_PROV_RANK = {"closed": 0, "residue": 1, "tan_algebra": 2, "fill": 3, "numeric": 4}


def _merge_prov(tags) -> str:
    best = "closed"
    for t in tags:
        if _PROV_RANK[t] > _PROV_RANK[best]:
            best = t
    return best


@dataclass
class FVector:
    """Expected f-vector (f_0 .. f_{d-1}) with per-entry provenance."""

    d: int
    model: str  # poisson | zerocell | voronoi | beta | betaprime
    params: dict
    entries: tuple

    def value(self, ell: int):
        return self.entries[ell][0]

    def provenance(self, ell: int) -> str:
        return self.entries[ell][1]

    def values(self) -> tuple:
        return tuple(v for v, _ in self.entries)


# -- Poisson polytope ---------------------------------------------------------


@lru_cache(maxsize=None)
def poisson_weight_inf(m: int, alpha: int) -> PiNumber:
    """The limiting external weight: c~_{(alpha m+1)/2} / c~_{(alpha+1)/2}^m
    * alpha^{m-1} / m."""
    return (
        c_tilde_beta(alpha * m + 1)
        / c_tilde_beta(alpha + 1) ** m
        * Fraction(alpha ** (m - 1), m)
    )


def _poisson_entry_exact(d: int, k: int, alpha: int) -> tuple[PiNumber, str]:
    total = PiNumber.zero()
    tags = []
    for m in range(k, d + 1):
        if (d - m) % 2 != 0:
            continue
        row = _bJtilde_row(m, alpha + m - 1)
        total = total + poisson_weight_inf(m, alpha) * row[k - 1][0]
        tags.append(row[k - 1][1])
    return 2 * total, _merge_prov(tags)


def poisson_polytope_fvector(d: int, alpha) -> FVector:
    """Expected f-vector of the convex hull of the power-law Poisson process;
    exact for integer alpha >= 1, numeric otherwise."""
    if d < 1:
        raise DomainError("d >= 1 required")
    if isinstance(alpha, (int, Fraction)) and Fraction(alpha).denominator == 1:
        a = int(alpha)
        if a < 1:
            raise DomainError("alpha >= 1 required for the exact path")
        entries = tuple(_poisson_entry_exact(d, k, a) for k in range(1, d + 1))
        return FVector(d, "poisson", {"alpha": a}, entries)
    a = float(alpha)
    if a <= 0:
        raise DomainError("alpha > 0 required")
    entries = []
    for k in range(1, d + 1):
        ctil = quadrature._c_tilde_beta_float((a + 1) / 2)
        val = (
            2.0
            * a ** (k - 1)
            * math.factorial(d)
            / math.factorial(k)
            * ctil ** (-k)
            * quadrature.a_tilde_numeric(d, k, a)
        )
        entries.append((val, "numeric"))
    return FVector(d, "poisson", {"alpha": a}, tuple(entries))


def poisson_residue_entry(d: int, k: int, alpha: int) -> PiNumber:
    """Direct residue form of E f_{k-1} (valid when alpha*k is even);
    used as a cross-check of the summed route."""
    if (alpha * k) % 2 != 0:
        raise DomainError("residue form requires alpha*k even")
    pref = (gamma_half(1) * gamma_half(alpha) / gamma_half(alpha + 1)) ** k
    res = residue_rational(alpha - 1, d - k, alpha * d + 1)
    return Fraction(alpha**d * math.comb(d, k)) * pref * res


# -- Poisson zero cell --------------------------------------------------------


@lru_cache(maxsize=None)
def _x_over_sin_coeff(power: int, j: int) -> Fraction:
    """[x^j] (x / sin x)^power."""
    s = int_power(sin_power(1, j + 3), -power)
    return series_kernel.coefficient(shift(s, power), j)


def zero_cell_entry_even(d: int, ell: int) -> PiNumber:
    """E f_ell of the zero cell for even d - ell:  pi^(d-ell) * C(d,ell) *
    [x^(d-ell)] (x/sin x)^(d+1)."""
    if (d - ell) % 2 != 0:
        raise DomainError("this form needs even d - ell")
    m = d - ell
    return PiNumber.pi_power(2 * m, math.comb(d, ell) * _x_over_sin_coeff(d + 1, m))


def zero_cell_entry_product(d: int, ell: int) -> PiNumber:
    """Independent product-formula form of E f_ell (even d - ell):
    pi^(d-ell)/(d-ell)! * [x^(d-ell)] prod (1 + j^2 x^2) over j < d of
    opposite parity."""
    if (d - ell) % 2 != 0:
        raise DomainError("this form needs even d - ell")
    m = d - ell
    poly = [Fraction(1)]
    for j in range(1, d):
        if j % 2 != d % 2:
            # multiply by (1 + j^2 x^2)
            nxt = poly + [Fraction(0), Fraction(0)]
            for i, c in enumerate(poly):
                nxt[i + 2] += c * j * j
            poly = nxt
    coeff = poly[m] if m < len(poly) else Fraction(0)
    return PiNumber.pi_power(2 * m, coeff / math.factorial(m))


def zero_cell_fvector(d: int) -> FVector:
    """Complete exact expected f-vector of the Poisson zero cell."""
    if d < 1:
        raise DomainError("d >= 1 required")
    # dual (simplicial) vector z_k = E f_{d-k}, z_0 = 1
    z: list[Optional[PiNumber]] = [PiNumber.one()] + [None] * d
    prov = [""] * (d + 1)
    for k in range(1, d + 1):
        if k % 2 == 0:
            z[k] = zero_cell_entry_even(d, d - k)
            prov[k] = "residue"
        else:
            prov[k] = "fill"
    filled = bernoulli_fill(z)
    entries = tuple((filled[d - ell], prov[d - ell]) for ell in range(d))
    return FVector(d, "zerocell", {}, entries)


# -- typical Poisson-Voronoi cell ----------------------------------------------


def typical_voronoi_fvector(d: int) -> FVector:
    """Expected f-vector of the typical Poisson-Voronoi cell, via duality
    with the Poisson polytope at alpha = d."""
    pp = poisson_polytope_fvector(d, d)
    entries = tuple(pp.entries[d - ell - 1] for ell in range(d))
    return FVector(d, "voronoi", {}, entries)


def voronoi_residue_entry(d: int, k: int) -> PiNumber:
    """Direct residue form of E f_{d-k}(V_d), valid when d*k is even."""
    if (d * k) % 2 != 0:
        raise DomainError("residue form requires d*k even")
    pref = (gamma_half(1) * gamma_half(d) / gamma_half(d + 1)) ** k
    res = residue_rational(d - 1, d - k, d * d + 1)
    return Fraction(d**d * math.comb(d, k)) * pref * res


def face_intensity(d: int, j: int) -> PiNumber:
    """Intensity of j-faces of the Poisson-Voronoi tessellation:
    E f_j(V_d) / (d - j + 1), with E f_d = 1."""
    if not 0 <= j <= d:
        raise DomainError("need 0 <= j <= d")
    if j == d:
        return PiNumber.one()
    fv = typical_voronoi_fvector(d)
    return fv.value(j) * Fraction(1, d - j + 1)


# -- beta and beta' polytopes ---------------------------------------------------


def beta_polytope_fvector(n: int, d: int, beta) -> FVector:
    """Expected f-vector of the convex hull of n i.i.d. beta points in R^d;
    exact for half-integer beta >= -1, numeric for real beta."""
    if d < 1 or n < d + 1:
        raise DomainError("need d >= 1 and n >= d+1")
    exact = isinstance(beta, (int, Fraction)) and Fraction(beta).denominator in (1, 2)
    if exact:
        b = Fraction(beta)
        if b < -1:
            raise DomainError("beta >= -1 required")
        alpha = int(2 * b) + d
        if alpha < 0:
            raise DomainError(
                "the d=1 sphere case (beta=-1) is atomic; no f-vector formula"
            )
        entries = []
        for k in range(1, d + 1):
            total = PiNumber.zero()
            tags = []
            for m in range(k, d + 1):
                if (d - m) % 2 != 0:
                    continue
                row = _bJ_row(m, alpha - m + 1)
                total = total + trig_algebra.external_bI(n, m, alpha) * row[k - 1][0]
                tags.append(row[k - 1][1])
            entries.append((2 * total, _merge_prov(tags)))
        return FVector(d, "beta", {"n": n, "beta": b}, tuple(entries))
    b = float(beta)
    if b < -1:
        raise DomainError("beta >= -1 required")
    alpha = 2.0 * b + d
    entries = []
    for k in range(1, d + 1):
        total = 0.0
        for m in range(k, d + 1):
            if (d - m) % 2 != 0:
                continue
            total += quadrature.I_numeric(n, m, alpha) * bJ_numeric(
                m, k, (alpha - m + 1) / 2
            )
        entries.append((2.0 * total, "numeric"))
    return FVector(d, "beta", {"n": n, "beta": b}, tuple(entries))


def betaprime_polytope_fvector(n: int, d: int, beta) -> FVector:
    """Expected f-vector of the convex hull of n i.i.d. beta' points in R^d;
    exact for half-integer beta with alpha = 2*beta - d a positive integer."""
    if d < 1 or n < d + 1:
        raise DomainError("need d >= 1 and n >= d+1")
    exact = isinstance(beta, (int, Fraction)) and Fraction(beta).denominator in (1, 2)
    if exact and int(2 * Fraction(beta)) - d >= 1:
        alpha = int(2 * Fraction(beta)) - d
        entries = []
        for k in range(1, d + 1):
            total = PiNumber.zero()
            tags = []
            for m in range(k, d + 1):
                if (d - m) % 2 != 0:
                    continue
                row = _bJtilde_row(m, alpha + m - 1)
                total = total + trig_algebra.external_bI_tilde(n, m, alpha) * row[k - 1][0]
                tags.append(row[k - 1][1])
            entries.append((2 * total, _merge_prov(tags)))
        return FVector(d, "betaprime", {"n": n, "beta": Fraction(beta)}, tuple(entries))
    b = float(beta)
    alpha = 2.0 * b - d
    if alpha <= 0:
        raise DomainError("beta > d/2 required")
    entries = []
    for k in range(1, d + 1):
        if alpha * k <= 1:
            raise DomainError(
                f"numeric path needs alpha*k > 1 for every k (alpha={alpha}, k={k})"
            )
        total = 0.0
        for m in range(k, d + 1):
            if (d - m) % 2 != 0:
                continue
            total += quadrature.I_tilde_numeric(n, m, alpha) * bJtilde_numeric(
                m, k, (alpha + m - 1) / 2
            )
        entries.append((2.0 * total, "numeric"))
    return FVector(d, "betaprime", {"n": n, "beta": b}, tuple(entries))


# -- consistency relations -------------------------------------------------------


def euler_relation_holds(fv: FVector) -> bool:
    """Exact Euler relation sum (-1)^ell f_ell = 1 - (-1)^d."""
    total = PiNumber.zero()
    for ell in range(fv.d):
        v = fv.value(ell)
        if not isinstance(v, PiNumber):
            return abs(
                sum((-1) ** l * fv.value(l) for l in range(fv.d)) - (1 - (-1) ** fv.d)
            ) < 1e-8
        total = total + Fraction((-1) ** ell) * v
    return total == PiNumber.from_rational(1 - (-1) ** fv.d)


def _simplicial_z(fv: FVector) -> list[PiNumber]:
    """The vector (z_0..z_d) of a simplicial f-vector: directly for the
    simplicial models, through the dual for the simple ones."""
    if fv.model in ("zerocell", "voronoi"):
        return [PiNumber.one()] + [fv.value(fv.d - k) for k in range(1, fv.d + 1)]
    return [PiNumber.one()] + [fv.value(k - 1) for k in range(1, fv.d + 1)]


def dehn_sommerville_holds(fv: FVector) -> bool:
    """All Dehn-Sommerville relations, exactly."""
    z = _simplicial_z(fv)
    d = fv.d
    for m in range(d + 1):
        total = PiNumber.zero()
        for k in range(m, d + 1):
            total = total + Fraction((-1) ** k * math.comb(k, m)) * z[k]
        if total != Fraction((-1) ** d) * z[m]:
            return False
    return True


# -- Reitzner constants -----------------------------------------------------------


@dataclass(frozen=True)
class ReitznerConstant:
    """A Reitzner constant: float value, the exact internal-angle factor it
    contains, and (when the whole constant stays in the pi-ring) its exact
    value."""

    value: float
    angle_factor: PiNumber
    exact: Optional[PiNumber] = None


_MP_DPS = 60


def reitzner_ball(d: int, k: int) -> ReitznerConstant:
    """C_{d,k}: the face-number growth constant of uniform random polytopes
    in a smooth convex body, normalized to the ball."""
    if not 0 <= k <= d - 1:
        raise DomainError("need 0 <= k <= d-1")
    J = bJ_exact(d, k + 1, 1)
    with mpmath.workdps(_MP_DPS):
        dd = mpmath.mpf(d)
        pref = (
            2
            * mpmath.power(mpmath.pi, dd * (dd - 1) / (2 * (dd + 1)))
            / mpmath.factorial(d + 1)
            * mpmath.gamma(1 + dd * dd / 2)
            * mpmath.gamma((dd * dd + 1) / (dd + 1))
            / mpmath.gamma((dd * dd + 1) / 2)
            * mpmath.power(dd + 1, (dd * dd + 1) / (dd + 1))
            * mpmath.power(
                mpmath.gamma((dd + 1) / 2) / mpmath.gamma(1 + dd / 2),
                (dd * dd + 1) / (dd + 1),
            )
        )
        value = float(pref * J.evaluate(_MP_DPS))
    return ReitznerConstant(value, J)


def reitzner_ball_residue(d: int, k: int) -> float:
    """Residue form of C_{d,k}; valid when d is odd or both d, d-k even."""
    if not (d % 2 == 1 or (d % 2 == 0 and (d - k) % 2 == 0)):
        raise DomainError("parity conditions of the residue form not met")
    res = residue_rational(d, d - k - 1, d * d + 2)
    with mpmath.workdps(_MP_DPS):
        dd = mpmath.mpf(d)
        pref = (
            (dd * dd + 1)
            / mpmath.factorial(d)
            * mpmath.power(dd + 1, (dd * dd - dd) / (dd + 1))
            * math.comb(d, k + 1)
            * mpmath.gamma((dd * dd + 1) / (dd + 1))
            * mpmath.power(
                mpmath.sqrt(mpmath.pi) * mpmath.gamma((dd + 1) / 2) / mpmath.gamma((dd + 2) / 2),
                k + mpmath.mpf(2) / (dd + 1),
            )
        )
        return float(pref * mpmath.mpf(res.numerator) / res.denominator)


def reitzner_sphere(d: int, k: int) -> ReitznerConstant:
    """C*_{d,k}: the per-point face-number constant of random inscribed
    polytopes; lies in the pi-ring, so the exact value is returned too."""
    if d < 2 or not 0 <= k <= d - 1:
        raise DomainError("need d >= 2 and 0 <= k <= d-1")
    J = bJ_exact(d, k + 1, -1)
    pref = (
        PiNumber.pi_power(d - 2, Fraction(2**d, d * (d - 1) ** 2))
        * gamma_half(2 + d * (d - 2))
        / gamma_half((d - 1) ** 2)
        * (gamma_half(d + 1) / gamma_half(d)) ** (d - 1)
    )
    exact = pref * J
    return ReitznerConstant(float(exact.evaluate(_MP_DPS)), J, exact)


def reitzner_sphere_residue(d: int, k: int) -> PiNumber:
    """Residue form of C*_{d,k}; valid when d is odd or both d, d-k even.

    Prefactor re-derived from the angle form: (d-1)^(d-1)/d * C(d, k+1) *
    (sqrt(pi) Gamma((d-1)/2) / Gamma(d/2))^k; reproduces C*_{d,0} = 1 and
    C*_{3,2} = 2.
    """
    if not (d % 2 == 1 or (d % 2 == 0 and (d - k) % 2 == 0)):
        raise DomainError("parity conditions of the residue form not met")
    res = residue_rational(d - 2, d - k - 1, d * d - 2 * d + 2)
    pref = Fraction((d - 1) ** (d - 1) * math.comb(d, k + 1), d) * (
        gamma_half(1) * gamma_half(d - 1) / gamma_half(d)
    ) ** k
    return pref * res
