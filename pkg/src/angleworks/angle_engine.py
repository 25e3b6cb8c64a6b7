"""Expected internal angle sums of beta and beta' random simplices.

Exact values are reached through three routes, preferred in this order:

* ``residue``     -- the rational residue of (int_0^x sin^a)^p / sin^q x
                     times Gamma/pi prefactors;
* ``fill``        -- the Bernoulli-number solution of the Poincare
                     relations, transferring one parity class of the
                     angle vector to the other;
* ``tan_algebra`` -- the exact tangent-polynomial integration for the
                     one parity case the residues miss (odd concentration
                     parameter, even number of vertices).

Non-half-integer parameters fall back to numerical quadrature.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Optional, Sequence

from . import quadrature, series_kernel, trig_algebra
from .exact_scalars import DomainError, PiNumber, c_beta, c_tilde_beta
from .series_kernel import (
    LaurentSeries,
    antiderivative_from_zero,
    bernoulli,
    int_power,
    multiply,
    sin_power,
)

PI = PiNumber.pi_power(2)


class ParityError(DomainError):
    """The residue formula does not apply at these parities."""


@dataclass(frozen=True)
class ResidueSpec:
    """Res_{x=0} of (int_0^x sin^a y dy)^p / (sin x)^q."""

    a: int  # inner sine power
    p: int  # outer power
    q: int  # denominator sine power


@lru_cache(maxsize=None)
def residue_rational(a: int, p: int, q: int) -> Fraction:
    """The rational residue behind every exact formula in this module."""
    if a < 0 or p < 0 or q < 1:
        raise DomainError(f"invalid residue parameters a={a}, p={p}, q={q}")
    val = p * (a + 1) - q
    if val > -1:
        return Fraction(0)
    rel = (-1) - val + 2  # reach x^{-1} plus two safety terms
    if p == 0:
        num: LaurentSeries = series_kernel.ONE
    else:
        num = int_power(antiderivative_from_zero(sin_power(a, a + rel)), p)
    den = int_power(sin_power(1, 1 + rel), -q)
    return series_kernel.residue(multiply(num, den))


def residue_of_spec(spec: ResidueSpec) -> Fraction:
    return residue_rational(spec.a, spec.p, spec.q)


# -- residue formulas ---------------------------------------------------------


def bJ_residue(n: int, k: int, alpha: int) -> PiNumber:
    """bold-J_{n,k}((alpha-n+1)/2) if alpha is even and n-k odd, or both
    alpha and n are odd."""
    if not (n >= 3 and 1 <= k <= n):
        raise DomainError("need n >= 3 and 1 <= k <= n")
    if alpha < max(n - 3, 1):
        raise DomainError(f"need alpha >= max(n-3, 1), got alpha={alpha}")
    case_i = alpha % 2 == 0 and (n - k) % 2 == 1
    case_ii = alpha % 2 == 1 and n % 2 == 1
    if not (case_i or case_ii):
        raise ParityError(
            f"residue route needs (alpha even, n-k odd) or (alpha, n odd); "
            f"got n={n}, k={k}, alpha={alpha}"
        )
    res = residue_rational(alpha, n - k, alpha * n + 2)
    return (
        math.comb(n, k)
        * c_beta(alpha * n)
        * c_beta(alpha - 1) ** (n - k)
        * PI
        * res
    )


def bJtilde_residue(n: int, k: int, alpha: int) -> PiNumber:
    """bold-J~_{n,k}((alpha+n-1)/2) whenever alpha*k is even."""
    if not (n >= 1 and 1 <= k <= n):
        raise DomainError("need 1 <= k <= n")
    if alpha < 1:
        raise DomainError("need integer alpha >= 1")
    if (alpha * k) % 2 != 0:
        raise ParityError(f"residue route needs alpha*k even; got {alpha}*{k}")
    if k == n:
        return PiNumber.one()
    res = residue_rational(alpha - 1, n - k, alpha * n - 1)
    return (
        math.comb(n, k)
        * c_tilde_beta(alpha * n)
        * c_tilde_beta(alpha + 1) ** (n - k)
        * PI
        * res
    )


# -- Bernoulli fill of the Poincare / Dehn-Sommerville relations --------------


def bernoulli_fill(z: Sequence[Optional[PiNumber]]) -> list[PiNumber]:
    """Fill the missing parity class of a vector satisfying the relations
    sum_k (-1)^k C(k,m) z_k = (-1)^n z_m.

    ``z`` is indexed 0..n; known entries are PiNumbers, unknown are None.
    Every unknown z_k is produced from the opposite parity class via the
    Bernoulli-number formulas; entries above index n count as zero.
    """
    n = len(z) - 1
    out: list[Optional[PiNumber]] = list(z)

    def known(i: int) -> PiNumber:
        if i > n:
            return PiNumber.zero()
        v = out[i]
        if v is None:
            raise DomainError(f"fill requires entry {i} of the opposite parity class")
        return v

    for k in range(n, 0, -1):
        if out[k] is not None:
            continue
        acc = PiNumber.zero()
        if (n - k) % 2 == 0:
            acc = acc + known(k - 1) * Fraction(1, k)
            r = 1
        else:
            r = 1
        while k + r <= n:
            B = bernoulli(r + 1)
            w = Fraction(math.factorial(k + r), math.factorial(r + 1) * math.factorial(k)) * B
            if (n - k) % 2 == 1:
                w *= 2 ** (r + 1) - 1
            acc = acc + known(k + r) * w
            r += 2
        out[k] = acc * 2
    assert all(v is not None for v in out[1:])
    return [v if v is not None else PiNumber.zero() for v in out]


# -- exact dispatchers ---------------------------------------------------------


def _closed_small_row(n: int) -> tuple[tuple[PiNumber, str], ...]:
    if n == 1:
        return ((PiNumber.one(), "closed"),)
    if n == 2:
        return ((PiNumber.one(), "closed"), (PiNumber.one(), "closed"))
    # n == 3: (1/2, 3/2, 1) for every admissible parameter
    return (
        (PiNumber.from_rational(Fraction(1, 2)), "closed"),
        (PiNumber.from_rational(Fraction(3, 2)), "closed"),
        (PiNumber.one(), "closed"),
    )


@lru_cache(maxsize=None)
def _bJ_row(n: int, twice_beta: int) -> tuple[tuple[PiNumber, str], ...]:
    if n < 1:
        raise DomainError("n must be positive")
    if twice_beta < -2:
        raise DomainError("beta >= -1 required")
    if n <= 3:
        return _closed_small_row(n)
    alpha = twice_beta + n - 1
    if alpha < max(n - 3, 0):
        raise DomainError(
            f"alpha = 2*beta + n - 1 = {alpha} outside validity (need >= max(n-3, 0))"
        )
    if alpha % 2 == 0:
        values: list[Optional[PiNumber]] = [PiNumber.zero()] + [None] * n
        prov = [""] * (n + 1)
        for k in range(1, n + 1):
            if (n - k) % 2 == 1:
                values[k] = bJ_residue(n, k, alpha)
                prov[k] = "residue"
            else:
                prov[k] = "fill"
        filled = bernoulli_fill(values)
        return tuple((filled[k], prov[k]) for k in range(1, n + 1))
    if n % 2 == 1:
        return tuple((bJ_residue(n, k, alpha), "residue") for k in range(1, n + 1))
    return tuple(
        (trig_algebra.bJ_exact_case_iii(n, k, alpha), "tan_algebra")
        for k in range(1, n + 1)
    )


def bJ_exact(n: int, k: int, twice_beta: int) -> PiNumber:
    """Exact bold-J_{n,k}(beta) for half-integer beta (argument doubled)."""
    if not 1 <= k <= n:
        raise DomainError("need 1 <= k <= n")
    return _bJ_row(n, twice_beta)[k - 1][0]


@lru_cache(maxsize=None)
def _bJtilde_row(n: int, twice_beta: int) -> tuple[tuple[PiNumber, str], ...]:
    if n < 1:
        raise DomainError("n must be positive")
    alpha = twice_beta - n + 1
    if alpha < 1:
        raise DomainError(
            f"alpha = 2*beta - n + 1 = {alpha} outside validity (need >= 1)"
        )
    if n == 1:
        return ((PiNumber.one(), "closed"),)
    if alpha % 2 == 0:
        return tuple((bJtilde_residue(n, k, alpha), "residue") for k in range(1, n + 1))
    values: list[Optional[PiNumber]] = [PiNumber.zero()] + [None] * n
    prov = [""] * (n + 1)
    for k in range(1, n + 1):
        if k % 2 == 0:
            values[k] = bJtilde_residue(n, k, alpha)
            prov[k] = "residue"
        else:
            prov[k] = "fill"
    filled = bernoulli_fill(values)
    return tuple((filled[k], prov[k]) for k in range(1, n + 1))


def bJtilde_exact(n: int, k: int, twice_beta: int) -> PiNumber:
    """Exact bold-J~_{n,k}(beta) for half-integer beta > (n-1)/2."""
    if not 1 <= k <= n:
        raise DomainError("need 1 <= k <= n")
    return _bJtilde_row(n, twice_beta)[k - 1][0]


# -- numeric paths -------------------------------------------------------------


def bJ_numeric(n: int, k: int, beta: float) -> float:
    """Quadrature evaluation of bold-J_{n,k}(beta) for real beta >= -1."""
    if beta < -1:
        raise DomainError("beta >= -1 required")
    alpha = 2.0 * beta + n - 1
    return quadrature.outer_integral(n, k, alpha, "beta").value


def bJtilde_numeric(n: int, k: int, beta: float) -> float:
    """Quadrature evaluation of bold-J~_{n,k}(beta) for real beta > (n-1)/2."""
    if beta <= (n - 1) / 2:
        raise DomainError("beta > (n-1)/2 required")
    alpha = 2.0 * beta - n + 1
    return quadrature.outer_integral(n, k, alpha, "betaprime").value


# -- the a[nu, kappa] residue evaluations --------------------------------------


def lA_residue(nu_num: int, kappa_num: int, alpha: int) -> PiNumber:
    """a[nu, kappa] with nu = nu_num/alpha, kappa = kappa_num/alpha, via the
    rational residue; requires alpha*kappa + nu - kappa odd."""
    if alpha < 1:
        raise DomainError("alpha must be a positive integer")
    if (nu_num - kappa_num) % alpha != 0:
        raise DomainError("nu - kappa must be a nonnegative integer")
    r = (nu_num - kappa_num) // alpha
    if r < 0:
        return PiNumber.zero()
    if (kappa_num + r) % 2 == 0:
        raise ParityError(
            "a[nu, kappa] residue form needs alpha*kappa + (nu - kappa) odd"
        )
    res = residue_rational(alpha, r, nu_num)
    return PiNumber.from_rational(
        Fraction(alpha ** (r + 1), 2 * math.factorial(r)) * res
    )


def lA_tilde_residue(nu_num: int, kappa_num: int, alpha: int) -> PiNumber:
    """a~[nu, kappa] via the rational residue; requires alpha*kappa even."""
    if alpha < 1:
        raise DomainError("alpha must be a positive integer")
    if (nu_num - kappa_num) % alpha != 0:
        raise DomainError("nu - kappa must be a nonnegative integer")
    r = (nu_num - kappa_num) // alpha
    if r < 0:
        return PiNumber.zero()
    if kappa_num % 2 != 0:
        raise ParityError("a~[nu, kappa] residue form needs alpha*kappa even")
    res = residue_rational(alpha - 1, r, nu_num + 1)
    return PiNumber.from_rational(
        Fraction(alpha ** (r + 1), 2 * math.factorial(r)) * res
    )


# -- pointwise rational-structure checks ---------------------------------------


def rm_value(m: int, n: int) -> Fraction:
    """The scalar R_m(n) in the closed form of bold-J_{n,1}(m - 1/2)."""
    if m < 0 or n < 3:
        raise DomainError("need m >= 0 and n >= 3")
    a = n + 2 * m - 2
    res = residue_rational(a, n - 1, a * n + 2)
    return Fraction(n + 2 * m - 1) ** (n - 1) * res


def p_alpha_k_value(alpha: int, k: int, n: int) -> Fraction:
    """The polynomial value P_{alpha,k}(n) in the closed form of
    bold-J~_{n,k}((alpha+n-1)/2); requires alpha*k even."""
    if alpha < 1 or k < 1 or n < k:
        raise DomainError("need alpha >= 1 and n >= k >= 1")
    if (alpha * k) % 2 != 0:
        raise ParityError("P_{alpha,k} requires alpha*k even")
    res = residue_rational(alpha - 1, n - k, alpha * n - 1)
    return Fraction(alpha) ** (n - k) * res


# -- angle tables ---------------------------------------------------------------


@dataclass(frozen=True)
class AngleTable:
    """Row of expected internal angle sums bold-J_{n,k} for k = 1..n."""

    family: str  # "beta" | "betaprime"
    n: int
    beta: Fraction | float
    entries: tuple[tuple[PiNumber | float, str], ...]

    def value(self, k: int):
        return self.entries[k - 1][0]

    def provenance(self, k: int) -> str:
        return self.entries[k - 1][1]


def angle_table(family: str, n: int, beta: Fraction | float) -> AngleTable:
    """Full table for k = 1..n; exact when beta is a half-integer Fraction."""
    if family not in ("beta", "betaprime"):
        raise DomainError(f"unknown family {family!r}")
    exact = isinstance(beta, (Fraction, int)) and Fraction(beta).denominator in (1, 2)
    if exact:
        tb = int(2 * Fraction(beta))
        row = _bJ_row(n, tb) if family == "beta" else _bJtilde_row(n, tb)
        return AngleTable(family, n, Fraction(beta), row)
    b = float(beta)
    fn = bJ_numeric if family == "beta" else bJtilde_numeric
    entries = tuple((fn(n, k, b), "numeric") for k in range(1, n + 1))
    return AngleTable(family, n, b, entries)


def poincare_fill(table: AngleTable) -> AngleTable:
    """Complete an AngleTable whose entries are None for one parity class."""
    z: list[Optional[PiNumber]] = [PiNumber.zero()]
    for v, _ in table.entries:
        z.append(v if isinstance(v, PiNumber) else None)
    filled = bernoulli_fill(z)
    entries = tuple(
        (filled[k], table.entries[k - 1][1] if table.entries[k - 1][0] is not None else "fill")
        for k in range(1, table.n + 1)
    )
    return AngleTable(table.family, table.n, table.beta, entries)
