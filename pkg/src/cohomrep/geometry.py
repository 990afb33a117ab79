"""Geometry and analysis on the bounded model of X_{p,q+r}.

The space is { Z in M_{q+r,p}(R) : tZ Z < 1 } with the invariant metric
tr((1 - Z tZ)^{-1} dZ (1 - tZ Z)^{-1} d tZ).  The first q rows single out
the totally geodesic X_V = { Z_2 = 0 } of type X_{p,q}; A = det(1 - tZ Z)
and B = det(1 - tZ_1 Z_1) control the distance to X_V through the
G_V-invariant ratio B/A.  Everything here is numerical-with-exact-anchors:
curvature by literal brackets, Gamma-product integrals in log space,
Monte Carlo verification by seeded rejection sampling, Riemannian Hessians
by finite differences with explicit Christoffel symbols.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional, Sequence

import numpy as np

BOUNDARY_TOL = 1e-12


# ---------------------------------------------------------------------------
# points, determinants, metric


@dataclass
class PointZ:
    """A point of the bounded model with the q | r row split and cached
    determinants A = det(1 - tZ Z), B = det(1 - tZ_1 Z_1)."""

    Z: np.ndarray
    q: int

    def __post_init__(self):
        self.Z = np.asarray(self.Z, dtype=float)
        n, p = self.Z.shape
        if not (0 <= self.q <= n):
            raise ValueError("row split q out of range")
        ev = np.linalg.eigvalsh(self.Z.T @ self.Z)
        if ev.max(initial=0.0) >= 1.0:
            raise ValueError("tZ Z < 1 violated")
        self.log_A = float(np.log1p(-ev).sum())
        ev1 = np.linalg.eigvalsh(self.Z[: self.q].T @ self.Z[: self.q])
        self.log_B = float(np.log1p(-ev1).sum())

    @property
    def A(self) -> float:
        return math.exp(self.log_A)

    @property
    def B(self) -> float:
        return math.exp(self.log_B)


def log_det_one_minus_gram(Z: np.ndarray) -> float:
    """log det(1 - tZ Z) through the eigenvalues of the Gram matrix, stable
    near the boundary."""
    ev = np.linalg.eigvalsh(np.asarray(Z, float).T @ np.asarray(Z, float))
    if ev.max(initial=0.0) >= 1.0:
        raise ValueError("tZ Z < 1 violated")
    return float(np.log1p(-ev).sum())


def metric_at(Z: np.ndarray):
    """The two kernels of the metric at Z: g_Z(u, v) = tr(M u N tv) with
    M = (1 - Z tZ)^{-1}, N = (1 - tZ Z)^{-1}."""
    Z = np.asarray(Z, float)
    n, p = Z.shape
    M = np.linalg.inv(np.eye(n) - Z @ Z.T)
    N = np.linalg.inv(np.eye(p) - Z.T @ Z)
    return M, N


def metric_value(Z, u, v) -> float:
    M, N = metric_at(Z)
    return float(np.trace(M @ np.asarray(u, float) @ N @ np.asarray(v, float).T))


def metric_gram(Z: np.ndarray) -> np.ndarray:
    """Gram matrix of the metric in the coordinates Z_{ia} (row-major)."""
    M, N = metric_at(Z)
    return np.kron(M, N)


# ---------------------------------------------------------------------------
# group action


def act(g: np.ndarray, Z: np.ndarray, split: int) -> np.ndarray:
    """Moebius action gZ = (AZ + B)(CZ + D)^{-1}; split = q + r."""
    g = np.asarray(g, float)
    A, B = g[:split, :split], g[:split, split:]
    C, D = g[split:, :split], g[split:, split:]
    return (A @ Z + B) @ np.linalg.inv(C @ Z + D)


def automorphy_j(g: np.ndarray, Z: np.ndarray, split: int) -> np.ndarray:
    g = np.asarray(g, float)
    C, D = g[split:, :split], g[split:, split:]
    return C @ Z + D


def pushforward(g: np.ndarray, Z: np.ndarray, u: np.ndarray, split: int) -> np.ndarray:
    """d(gZ) applied to u: l(g,Z) u j(g,Z)^{-1} with l = A - (gZ) C."""
    g = np.asarray(g, float)
    A, C = g[:split, :split], g[split:, :split]
    gZ = act(g, Z, split)
    return (A - gZ @ C) @ u @ np.linalg.inv(automorphy_j(g, Z, split))


def xi(Z: np.ndarray) -> np.ndarray:
    """Tangent-space embedding [[0, Z], [tZ, 0]]."""
    Z = np.asarray(Z, float)
    n, p = Z.shape
    out = np.zeros((n + p, n + p))
    out[:n, n:] = Z
    out[n:, :n] = Z.T
    return out


def exp_origin(Y: np.ndarray) -> np.ndarray:
    """exp(xi(Y)) . 0, by the symmetric eigendecomposition of xi(Y)."""
    n, p = np.asarray(Y).shape
    w, V = np.linalg.eigh(xi(Y))
    G = V @ np.diag(np.exp(w)) @ V.T
    B, D = G[:n, n:], G[n:, n:]
    return B @ np.linalg.inv(D)


def random_G_element(rng: np.random.Generator, p: int, n: int, scale: float = 0.4) -> np.ndarray:
    """A random element of O(n, p): exp of a tangent direction times a
    random block-orthogonal matrix."""
    Y = rng.normal(size=(n, p)) * scale
    w, V = np.linalg.eigh(xi(Y))
    g = V @ np.diag(np.exp(w)) @ V.T
    k1 = np.linalg.qr(rng.normal(size=(n, n)))[0]
    k2 = np.linalg.qr(rng.normal(size=(p, p)))[0]
    k = np.zeros((n + p, n + p))
    k[:n, :n] = k1
    k[n:, n:] = k2
    return g @ k


def random_GV_element(rng: np.random.Generator, p: int, q: int, r: int, scale: float = 0.4) -> np.ndarray:
    """A random element of G_V = O(q,p) x O(r) in block form (rows q | r | p)."""
    W = rng.normal(size=(q, p)) * scale
    w, V = np.linalg.eigh(xi(W))
    h = V @ np.diag(np.exp(w)) @ V.T  # in O(q, p)
    u = np.linalg.qr(rng.normal(size=(r, r)))[0]
    g = np.zeros((p + q + r, p + q + r))
    g[:q, :q] = h[:q, :q]
    g[:q, q + r:] = h[:q, q:]
    g[q + r:, :q] = h[q:, :q]
    g[q + r:, q + r:] = h[q:, q:]
    g[q: q + r, q: q + r] = u
    return g


def random_point(rng: np.random.Generator, p: int, n: int, near_boundary: Optional[float] = None) -> np.ndarray:
    """Rejection sample Z uniform on the box with tZ Z < 1; optionally push
    radially to operator norm 1 - near_boundary."""
    while True:
        Z = rng.uniform(-1.0, 1.0, size=(n, p))
        sv = np.linalg.svd(Z, compute_uv=False)
        if sv[0] < 1.0:
            break
    if near_boundary is not None:
        Z = Z * (1.0 - near_boundary) / np.linalg.svd(Z, compute_uv=False)[0]
    return Z


# ---------------------------------------------------------------------------
# distances and the B/A ratio


def distance_origin(Z: np.ndarray) -> dict:
    """Geodesic distance from 0 to Z.

    The exact value is the l2 norm of arctanh of the singular values of Z;
    when Z tZ has rank one this is arccosh(det(1 - Z tZ)^{-1/2}).  In
    general (1/2^m) e^d <= det(1 - Z tZ)^{-1/2} <= e^{sqrt(m) d} with m the
    rank (the exponent -1/2 is forced by the rank-one case and by taking
    determinants in the exponential formula, det e^{arctanh} =
    prod (1+sigma) (1-sigma^2)^{-1/2}); the interval below inverts it."""
    Z = np.asarray(Z, float)
    sv = np.linalg.svd(Z, compute_uv=False)
    if sv.max(initial=0.0) >= 1.0:
        raise ValueError("not in the bounded domain")
    exact = float(np.sqrt((np.arctanh(sv) ** 2).sum()))
    m = int((sv > BOUNDARY_TOL).sum())
    neg_log_A = -log_det_one_minus_gram(Z)
    if m == 0:
        return {"exact": 0.0, "rank": 0, "lower": 0.0, "upper": 0.0}
    lower = neg_log_A / (2.0 * math.sqrt(m))
    upper = neg_log_A / 2.0 + m * math.log(2.0)
    if m == 1:
        exact_r1 = math.acosh(math.exp(neg_log_A / 2.0))
        assert abs(exact_r1 - exact) < 1e-9
    return {"exact": exact, "rank": m, "lower": lower, "upper": upper}


def ba_ratio(Z: np.ndarray, q: int) -> dict:
    """B/A by its two closed forms: det(1 - tZ1 Z1)/det(1 - tZ Z) and
    det(1 + Z2 (1 - tZ Z)^{-1} tZ2); also the arithmetic-geometric bound
    1 + tr(Z2 (1 - tZ Z)^{-1} tZ2)/r >= (B/A)^{1/r}."""
    Z = np.asarray(Z, float)
    n, p = Z.shape
    r = n - q
    log_A = log_det_one_minus_gram(Z)
    log_B = log_det_one_minus_gram(Z[:q])
    Z2 = Z[q:]
    K = Z2 @ np.linalg.inv(np.eye(p) - Z.T @ Z) @ Z2.T
    alt = np.linalg.slogdet(np.eye(r) + K)
    assert alt[0] > 0
    log_ratio = log_B - log_A
    if r:
        lhs = 1.0 + np.trace(K) / r
        rhs = math.exp(log_ratio / r)
        amgm_ok = lhs - rhs >= -1e-9 * max(1.0, abs(lhs))
    else:
        amgm_ok = True
    return {
        "log_ratio": log_ratio,
        "ratio": math.exp(log_ratio),
        "alt_log_ratio": float(alt[1]),
        "agree": abs(log_ratio - alt[1]) < 1e-10 * max(1.0, abs(log_ratio)),
        "amgm_holds": bool(amgm_ok),
    }


def distance_to_XV(Z: np.ndarray, q: int) -> float:
    """Geodesic distance to X_V for r = 1: cosh^2 d = B/A."""
    log_ratio = log_det_one_minus_gram(np.asarray(Z, float)[:q]) - log_det_one_minus_gram(Z)
    return math.acosh(math.exp(log_ratio / 2.0))


def log_ba_half(Z: np.ndarray, q: int) -> float:
    """(1/2) log(B/A), the distance-like exhaustion used for the Hessian
    bounds; equals log cosh d(., X_V) when r = 1."""
    return 0.5 * (log_det_one_minus_gram(np.asarray(Z, float)[:q]) - log_det_one_minus_gram(Z))


# ---------------------------------------------------------------------------
# curvature and Jacobi spectra


def curvature_op(X: np.ndarray, Y: np.ndarray) -> np.ndarray:
    """R(X, Y)Y = -[[X, Y], Y] at the origin, on tangent matrices."""
    n, p = np.asarray(Y).shape
    b1 = xi(X) @ xi(Y) - xi(Y) @ xi(X)
    b2 = b1 @ xi(Y) - xi(Y) @ b1
    return -b2[:n, n:]


def curvature_operator_matrix(M: np.ndarray, p: int, q: int, r: int, block: str) -> np.ndarray:
    """Matrix of R(., Y)Y with Y = xi([0; M]) on the tangent ("xv") or
    normal ("perp") subspace of X_V at the origin, in the standard basis."""
    n = q + r
    Y = np.zeros((n, p))
    Y[q:] = M
    rows = range(q) if block == "xv" else range(q, n)
    basis = [(i, a) for i in rows for a in range(p)]
    out = np.zeros((len(basis), len(basis)))
    for col, (i, a) in enumerate(basis):
        X = np.zeros((n, p))
        X[i, a] = 1.0
        R = curvature_op(X, Y)
        for row, (j, b) in enumerate(basis):
            out[row, col] = R[j, b]
    return out


def jacobi_spectrum(M: np.ndarray, p: int, q: int, r: int) -> dict:
    """Eigenvalue multisets of R(., Y)Y for the unit normal Y given by the
    r x p block M (sum of squared singular values must be 1).

    tangent block: -lambda_j^2, each with multiplicity q, j = 1..p;
    normal block: 0 for each diagonal pair (i, i), the two values
    -(lambda_i - lambda_j)^2 and -(lambda_i + lambda_j)^2 for each i < j
    <= min(r, p), and -lambda_i^2 for each cross pair beyond min(r, p).
    The paper's lemma prints -(lambda_i - lambda_j)^2 for all (i, j); the
    bracket computation forces the +(sum) modes, which matter only when
    min(r, p) >= 2 (see lemma_jacobi_multiset for the printed variant)."""
    sv = np.linalg.svd(np.asarray(M, float), compute_uv=False)
    lam = list(sv) + [0.0] * (max(r, p) - len(sv))
    assert abs(sum(v * v for v in lam) - 1.0) < 1e-9, "Y must be a unit vector"
    return exact_jacobi_multiset(lam, p, q, r)


def exact_jacobi_multiset(lam: Sequence, p: int, q: int, r: int) -> dict:
    """Closed-form spectrum from the (padded) singular values; exact when
    the entries are exact numbers."""
    m0 = min(r, p)
    tangent = []
    for j in range(p):
        tangent.extend([-lam[j] ** 2] * q)
    normal = []
    for i in range(r):
        for j in range(p):
            if i == j:
                normal.append(0 * lam[0] if lam else 0)
            elif i < m0 and j < m0:
                if i < j:
                    normal.append(-((lam[i] - lam[j]) ** 2))
                else:
                    normal.append(-((lam[j] + lam[i]) ** 2))
            else:
                normal.append(-(lam[min(i, j)] ** 2))
    return {"tangent": sorted(tangent), "normal": sorted(normal)}


def lemma_jacobi_multiset(lam: Sequence, p: int, q: int, r: int) -> dict:
    """The printed multiset: tangent -lambda_j^2 (x q), normal
    -(lambda_i - lambda_j)^2 over (i, j) in [r] x [p]."""
    tangent = []
    for j in range(p):
        tangent.extend([-lam[j] ** 2] * q)
    normal = [-((lam[i] - lam[j]) ** 2) for i in range(r) for j in range(p)]
    return {"tangent": sorted(tangent), "normal": sorted(normal)}


# ---------------------------------------------------------------------------
# volume growth


def volume_growth(t: float, p: int, q: int, r: int) -> dict:
    """Volume density of the distance-t hypersurface around X_V, normalized
    to 1 at t = 1.  Exact shape sinh^{p-1} cosh^q for r = 1; for r > 1 an
    upper bound (1 + t^{p(q+r)}) e^{(p+q+r-1) sqrt(m) t}, m = min(r, p)."""
    if r == 1:
        val = (math.sinh(t) / math.sinh(1.0)) ** (p - 1) * (math.cosh(t) / math.cosh(1.0)) ** q
        return {"value": val, "exact": True}
    m = min(r, p)
    bound = (1.0 + t ** (p * (q + r))) * math.exp((p + q + r - 1) * math.sqrt(m) * t)
    return {"value": bound, "exact": False}


def volume_growth_from_jacobi(t: float, lam: Sequence[float], p: int, q: int, r: int) -> float:
    """Product of the Jacobi-field norms along a normal geodesic with
    direction spectrum lam, normalized at t = 1; one radial zero mode is
    dropped."""
    spec = exact_jacobi_multiset([float(v) for v in lam], p, q, r)
    out = 1.0
    for ev in spec["tangent"]:
        mu = math.sqrt(-ev)
        out *= math.cosh(mu * t) / math.cosh(mu)
    zeros_skipped = False
    for ev in spec["normal"]:
        mu = math.sqrt(-ev)
        if mu < 1e-12:
            if not zeros_skipped:
                zeros_skipped = True  # radial direction
                continue
            out *= t
        else:
            out *= math.sinh(mu * t) / math.sinh(mu)
    return out


# ---------------------------------------------------------------------------
# Gamma-product integrals and Monte Carlo verification


def log_gamma_integral_X(s: float, p: int, n: int) -> float:
    """log of int_X A^{s/2} dZ over X = { Z in M_{n,p} : tZ Z < 1 }:
    pi^{pn/2} prod_{i=1}^n Gamma((s+i+1)/2) / Gamma((s+p+i+1)/2),
    convergent for s > -2."""
    if s <= -2:
        raise ValueError("diverges for s <= -2")
    out = 0.5 * p * n * math.log(math.pi)
    for i in range(1, n + 1):
        out += math.lgamma((s + i + 1) / 2.0) - math.lgamma((s + p + i + 1) / 2.0)
    return out


def gamma_integral_X(s: float, p: int, n: int) -> float:
    return math.exp(log_gamma_integral_X(s, p, n))


def quotient_integral(s: float, p: int, q: int, r: int) -> dict:
    """int over a cocompact quotient of (A/B)^{s/2} dv_X: equals
    pi^{rp/2} prod_{i=1}^r Gamma((s-p-q-r+i+1)/2)/Gamma((s-q-r+i+1)/2)
    times vol(C_V), convergent for s > p+q+r-2."""
    if s <= p + q + r - 2:
        raise ValueError("diverges for s <= p+q+r-2")
    log_coef = 0.5 * r * p * math.log(math.pi)
    for i in range(1, r + 1):
        log_coef += math.lgamma((s - p - q - r + i + 1) / 2.0) - math.lgamma((s - q - r + i + 1) / 2.0)
    return {"coefficient": math.exp(log_coef), "times": "vol(C_V)"}


def mc_verify_integral(s: float, p: int, n: int, samples: int, seed: int, batches: int = 16) -> dict:
    """Monte Carlo check of the closed form: rejection sampling of Z uniform
    on [-1,1]^{n x p}, acceptance tZ Z < 1, estimating int A^{s/2}.
    Deterministic for fixed (seed, batches); reports the 3-sigma interval."""
    closed = gamma_integral_X(s, p, n)
    box_volume = 2.0 ** (n * p)
    seeds = np.random.SeedSequence(seed).spawn(batches)
    per = [samples // batches] * batches
    per[-1] += samples - sum(per)
    sums, sqsums, accepted = [], [], 0
    for k in range(batches):
        rng = np.random.default_rng(seeds[k])
        Z = rng.uniform(-1.0, 1.0, size=(per[k], n, p))
        S = np.einsum("kij,kil->kjl", Z, Z)
        ev = np.linalg.eigvalsh(S)
        ok = ev[:, -1] < 1.0
        vals = np.zeros(per[k])
        logs = np.log1p(-ev[ok]).sum(axis=1)
        vals[ok] = np.exp(0.5 * s * logs)
        accepted += int(ok.sum())
        sums.append(float(vals.sum()))
        sqsums.append(float((vals * vals).sum()))
    total = math.fsum(sums)
    total_sq = math.fsum(sqsums)
    mean = total / samples
    var = max(total_sq / samples - mean * mean, 0.0)
    sigma = math.sqrt(var / samples)
    est = box_volume * mean
    ci3 = 3.0 * box_volume * sigma
    return {
        "estimate": est,
        "closed_form": closed,
        "rel_error": abs(est - closed) / closed,
        "ci3": ci3,
        "within_3sigma": abs(est - closed) <= ci3 + 1e-12 * abs(closed),
        "accepted": accepted,
        "samples": samples,
        "seed": seed,
        "batches": batches,
    }


# ---------------------------------------------------------------------------
# Hessians of the distance-like exhaustions


def hessian_profile_distance(F: float, p: int, q: int) -> list[float]:
    """Eigenvalues of the Hessian of d(., X_V) for r = 1 at distance F:
    tanh F (x q), 0 (x pq-q), 0 (radial), coth F (x p-1)."""
    return sorted([math.tanh(F)] * q + [0.0] * (p * q - q) + [0.0] + [1.0 / math.tanh(F)] * (p - 1))


def hessian_profile_log_ba(F: float, p: int, q: int) -> list[float]:
    """Eigenvalues of the Hessian of (1/2) log(B/A) for r = 1 at distance F:
    tanh^2 F (x q), 0 (x pq-q), sech^2 F (radial), 1 (x p-1); all in [0, 1],
    with q + p - 1 of them tending to 1 as F grows."""
    t = math.tanh(F)
    return sorted([t * t] * q + [0.0] * (p * q - q) + [1.0 - t * t] + [1.0] * (p - 1))


def riemannian_hessian_fd(func, Z: np.ndarray, h: float = 1e-4) -> np.ndarray:
    """Finite-difference Riemannian Hessian of a scalar function of Z, using
    central differences and Christoffel symbols from first derivatives of
    the metric Gram matrix."""
    Z = np.asarray(Z, float)
    shape = Z.shape
    dim = Z.size

    def at(vec):
        return func(vec.reshape(shape))

    z0 = Z.ravel().copy()

    def basis(i):
        e = np.zeros(dim)
        e[i] = 1.0
        return e

    grad = np.array([(at(z0 + h * basis(i)) - at(z0 - h * basis(i))) / (2 * h) for i in range(dim)])
    hess = np.zeros((dim, dim))
    for i in range(dim):
        hess[i, i] = (at(z0 + h * basis(i)) - 2 * at(z0) + at(z0 - h * basis(i))) / (h * h)
        for j in range(i + 1, dim):
            v = (at(z0 + h * (basis(i) + basis(j))) - at(z0 + h * (basis(i) - basis(j)))
                 - at(z0 + h * (basis(j) - basis(i))) + at(z0 - h * (basis(i) + basis(j)))) / (4 * h * h)
            hess[i, j] = hess[j, i] = v
    G0 = metric_gram(Z)
    dG = np.zeros((dim, dim, dim))
    for k in range(dim):
        Gp = metric_gram((z0 + h * basis(k)).reshape(shape))
        Gm = metric_gram((z0 - h * basis(k)).reshape(shape))
        dG[k] = (Gp - Gm) / (2 * h)
    Ginv = np.linalg.inv(G0)
    # Gamma^k_{ij} = (1/2) g^{kl} (d_i g_{jl} + d_j g_{il} - d_l g_{ij});
    # dG[k, a, b] = d_k g_{ab}
    first_kind = dG + dG.transpose(1, 0, 2) - dG.transpose(1, 2, 0)
    gamma = 0.5 * np.einsum("kl,ijl->kij", Ginv, first_kind)
    hess -= np.einsum("kij,k->ij", gamma, grad)
    return hess


def hessian_eigenvalues(func, Z: np.ndarray, h: float = 1e-4) -> np.ndarray:
    """Eigenvalues of the Riemannian Hessian with respect to the metric."""
    H = riemannian_hessian_fd(func, Z, h)
    G = metric_gram(np.asarray(Z, float))
    L = np.linalg.cholesky(G)
    Linv = np.linalg.inv(L)
    sym = Linv @ H @ Linv.T
    return np.linalg.eigvalsh(0.5 * (sym + sym.T))


def hessian_numeric_check(Z: np.ndarray, q: int, h: float = 1e-4) -> dict:
    """Compare the finite-difference Hessian eigenvalues of the r = 1
    distance to X_V against the closed profile; returns the max deviation."""
    Z = np.asarray(Z, float)
    n, p = Z.shape
    assert n - q == 1, "distance profile is exact for r = 1 only"
    F = distance_to_XV(Z, q)
    got = np.sort(hessian_eigenvalues(lambda W: distance_to_XV(W, q), Z, h))
    want = np.array(hessian_profile_distance(F, p, q))
    return {"distance": F, "eigenvalues": got.tolist(), "profile": want.tolist(),
            "max_deviation": float(np.abs(got - want).max())}


# ---------------------------------------------------------------------------
# spectral bounds: Donnelly-Xavier combination and thresholds


def dx_bound(eigs: Sequence[float], k: int) -> float:
    """sum(gamma_i) - 2k max(gamma_i): a positive value bounds the form
    Laplacian on degree-k forms away from zero."""
    eigs = list(eigs)
    return math.fsum(eigs) - 2 * k * max(eigs)


def dx_threshold(p: int, q: int, r: int) -> dict:
    """Degree thresholds for the spectral gap.

    The limit profile of the Hessian of (1/2) log(B/A) has q + pr - 1
    eigenvalues tending to 1 and the rest to 0, so the limit bound is
    (q + pr - 1) - 2k, positive iff k < (q + pr - 1)/2.  The companion
    convention (p + qr - 1)/2 is recorded as well; queries must state which
    one they used."""
    return {
        "limit_ones": q + p * r - 1,
        "threshold_qpr": (q + p * r - 1) / 2.0,
        "threshold_pqr": (p + q * r - 1) / 2.0,
        "limit_bound": lambda k: (q + p * r - 1) - 2 * k,
        "convention": "k < (q+pr-1)/2",
    }


# ---------------------------------------------------------------------------
# counting and Poincare series


def counting_bound(p: int, q: int, r: int, t: float) -> float:
    """Upper bound (up to a point-dependent constant) on the number of orbit
    points within distance t of X_V:
    int_0^{t+1} (1 + u^N) e^{a u} du with N = p(q+r), a = (p+q+r-1) sqrt(m)."""
    N = p * (q + r)
    m = min(r, p)
    a = (p + q + r - 1) * math.sqrt(m)
    upper = t + 1.0

    def poly_exp_integral(n, a, x):
        # int_0^x u^n e^{au} du by the usual reduction
        total = 0.0
        coef = 1.0
        for k in range(n + 1):
            total += (-1) ** k * coef * x ** (n - k) / a ** (k + 1)
            coef *= (n - k)
        total *= math.exp(a * x)
        total -= (-1) ** n * math.factorial(n) / a ** (n + 1)
        return total

    return (math.exp(a * upper) - 1.0) / a + poly_exp_integral(N, a, upper)


def poincare_converges(w: float, p: int, q: int, r: int) -> bool:
    """Convergence of the Poincare series of a form with pointwise norm
    bounded by (A/B)^w: requires w > (p+q+r-1) sqrt(m)/2, m = min(r, p)."""
    if r == 0:
        return True
    m = min(r, p)
    return w > (p + q + r - 1) * math.sqrt(m) / 2.0
