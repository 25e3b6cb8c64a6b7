"""Seeded Monte Carlo oracle for angle sums and planar f-vectors.

All estimators draw from ``numpy.random.Generator(PCG64(seed))`` and run
trials in a fixed order, so results are bit-reproducible from
``(seed, trials)`` regardless of the host.

The internal-angle estimator samples directions on the sphere and tests
membership in the tangent cone at a face centroid.  After projecting out
the face's tangent space the cone is simplicial (its generators are the
projected non-face vertices), so membership is a single small linear
solve with a nonnegativity check -- the closed-form resolution of the
feasibility LP.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass

import numpy as np

from .exact_scalars import DomainError

_FEAS_EPS = 1e-9


@dataclass(frozen=True)
class McEstimate:
    mean: float
    stderr: float
    trials: int
    seed: int

    def agrees(self, target: float, sigmas: float = 4.0) -> bool:
        return abs(self.mean - target) <= sigmas * max(self.stderr, 1e-300)


def _rng(seed: int) -> np.random.Generator:
    return np.random.Generator(np.random.PCG64(seed))


def _summarize(samples: np.ndarray, seed: int) -> McEstimate:
    n = len(samples)
    mean = float(np.mean(samples))
    stderr = float(np.std(samples, ddof=1) / math.sqrt(n)) if n > 1 else 0.0
    return McEstimate(mean, stderr, n, seed)


# -- samplers -----------------------------------------------------------------


def sample_beta_point(d: int, beta: float, rng: np.random.Generator) -> np.ndarray:
    """One point from the d-dimensional beta law (uniform sphere at beta=-1)."""
    return _sample_beta(d, beta, 1, rng)[0]


def _sample_beta(d: int, beta: float, size: int, rng: np.random.Generator) -> np.ndarray:
    if beta < -1:
        raise DomainError("beta >= -1 required")
    g = rng.standard_normal((size, d))
    g /= np.linalg.norm(g, axis=1, keepdims=True)
    if beta == -1:
        return g
    r2 = rng.beta(d / 2.0, beta + 1.0, size)
    return g * np.sqrt(r2)[:, None]


def sample_betaprime_point(d: int, beta: float, rng: np.random.Generator) -> np.ndarray:
    """One point from the d-dimensional beta' law (radial law r^2 ~
    beta-prime(d/2, beta - d/2))."""
    return _sample_betaprime(d, beta, 1, rng)[0]


def _sample_betaprime(
    d: int, beta: float, size: int, rng: np.random.Generator
) -> np.ndarray:
    if beta <= d / 2.0:
        raise DomainError("beta > d/2 required")
    g = rng.standard_normal((size, d))
    g /= np.linalg.norm(g, axis=1, keepdims=True)
    g1 = rng.gamma(d / 2.0, 1.0, size)
    g2 = rng.gamma(beta - d / 2.0, 1.0, size)
    return g * np.sqrt(g1 / g2)[:, None]


# -- internal angle sums -------------------------------------------------------


def _cone_fractions(pts: np.ndarray, k: int, dirs: np.ndarray) -> float:
    """Sum over k-subsets of the fraction of directions inside the tangent
    cone at the subset's centroid."""
    n, d = pts.shape
    if k == n:
        return 1.0
    total = 0.0
    for subset in itertools.combinations(range(n), k):
        rest = [i for i in range(n) if i not in subset]
        z = pts[list(subset)].mean(axis=0)
        G = (pts[rest] - z).T  # (d, n-k)
        if k > 1:
            V = (pts[list(subset)] - z).T  # (d, k), rank k-1
            u, s, _ = np.linalg.svd(V, full_matrices=False)
            basis = u[:, s > 1e-12 * max(s[0], 1e-300)]
            G = G - basis @ (basis.T @ G)
            U = dirs.T - basis @ (basis.T @ dirs.T)
        else:
            U = dirs.T
        lam = np.linalg.solve(G.T @ G, G.T @ U)  # (n-k, ndirs)
        feasible = np.all(lam >= -_FEAS_EPS, axis=0)
        total += float(np.mean(feasible))
    return total


def mc_angle_sum(
    family: str,
    n: int,
    k: int,
    beta: float,
    simplices: int = 400,
    directions: int = 256,
    seed: int = 0,
) -> McEstimate:
    """Estimate the expected internal angle sum bold-J_{n,k}(beta) (or the
    beta' analogue) by direction sampling against tangent cones."""
    if n > 7:
        raise DomainError("angle Monte Carlo is capped at n <= 7")
    if not 1 <= k <= n:
        raise DomainError("need 1 <= k <= n")
    if family not in ("beta", "betaprime"):
        raise DomainError(f"unknown family {family!r}")
    rng = _rng(seed)
    d = n - 1
    samples = np.empty(simplices)
    for t in range(simplices):
        for attempt in range(64):
            if family == "beta":
                pts = _sample_beta(d, beta, n, rng)
            else:
                pts = _sample_betaprime(d, beta, n, rng)
            edges = pts[1:] - pts[0]
            if abs(np.linalg.det(edges)) > 1e-12:
                break
        else:
            raise RuntimeError("could not sample a nondegenerate simplex")
        dirs = rng.standard_normal((directions, d))
        dirs /= np.linalg.norm(dirs, axis=1, keepdims=True)
        samples[t] = _cone_fractions(pts, k, dirs)
    return _summarize(samples, seed)


# -- planar convex hulls --------------------------------------------------------


def convex_hull_2d(pts: np.ndarray) -> np.ndarray:
    """Vertices of the convex hull, counterclockwise (monotone chain)."""
    order = np.lexsort((pts[:, 1], pts[:, 0]))
    p = pts[order]

    def build(points) -> list:
        chain: list = []
        for q in points:
            while len(chain) >= 2:
                o, a = chain[-2], chain[-1]
                if (a[0] - o[0]) * (q[1] - o[1]) - (a[1] - o[1]) * (q[0] - o[0]) <= 0:
                    chain.pop()
                else:
                    break
            chain.append(q)
        return chain

    lower = build(p)
    upper = build(p[::-1])
    return np.array(lower[:-1] + upper[:-1])


def mc_beta_hull_2d(
    n: int, beta: float, trials: int = 10000, seed: int = 0
) -> McEstimate:
    """Empirical expected vertex count of the planar beta polytope."""
    if n < 3:
        raise DomainError("need n >= 3")
    rng = _rng(seed)
    samples = np.empty(trials)
    for t in range(trials):
        pts = _sample_beta(2, beta, n, rng)
        samples[t] = len(convex_hull_2d(pts))
    return _summarize(samples, seed)


# -- typical planar Voronoi cell -------------------------------------------------


def _clip_halfplane(poly: list, p: np.ndarray) -> list:
    """Clip a convex polygon by { x : <x, p> <= |p|^2 / 2 }."""
    c = 0.5 * float(p @ p)
    out: list = []
    m = len(poly)
    vals = [float(v @ p) - c for v in poly]
    for i in range(m):
        j = (i + 1) % m
        vi, vj = vals[i], vals[j]
        if vi <= 0:
            out.append(poly[i])
        if (vi < 0 < vj) or (vj < 0 < vi):
            t = vi / (vi - vj)
            out.append(poly[i] + t * (poly[j] - poly[i]))
    return out


def _voronoi_cell_vertices(rng: np.random.Generator, radius: float) -> int:
    R = radius
    for _ in range(8):
        area = math.pi * R * R
        N = rng.poisson(area)
        r = R * np.sqrt(rng.random(N))
        th = 2.0 * math.pi * rng.random(N)
        pts = np.column_stack([r * np.cos(th), r * np.sin(th)])
        pts = pts[np.argsort(np.linalg.norm(pts, axis=1))]
        poly = [
            np.array([-R, -R]),
            np.array([R, -R]),
            np.array([R, R]),
            np.array([-R, R]),
        ]
        for p in pts:
            maxnorm = max(float(np.linalg.norm(v)) for v in poly)
            if float(np.linalg.norm(p)) / 2.0 > maxnorm:
                break
            poly = _clip_halfplane(poly, p)
        maxnorm = max(float(np.linalg.norm(v)) for v in poly)
        if maxnorm <= R / 2.0:
            # drop duplicate vertices created by grazing clips
            verts = [v for i, v in enumerate(poly)
                     if np.linalg.norm(v - poly[(i + 1) % len(poly)]) > 1e-9]
            return len(verts)
        R *= 2.0
    raise RuntimeError("window-overflow retries exhausted")


def mc_voronoi_2d(
    window_radius: float = 6.0, trials: int = 5000, seed: int = 0
) -> McEstimate:
    """Empirical expected vertex count of the typical planar Poisson-Voronoi
    cell (exact mean is 6)."""
    rng = _rng(seed)
    samples = np.empty(trials)
    for t in range(trials):
        samples[t] = _voronoi_cell_vertices(rng, window_radius)
    return _summarize(samples, seed)
