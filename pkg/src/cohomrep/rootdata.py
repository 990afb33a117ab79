"""Torus coordinates, root systems and weight computations for U(p,q) and O(p,q).

Weights live on the compact torus in the coordinates (x_1..x_p; y_1..y_q)
for U(p,q), resp. (x_1..x_r; y_1..y_s) with r = floor(p/2), s = floor(q/2)
for O(p,q).  The fixed positive compact systems are

  U:  x_i - x_j (i < j)  and  y_j - y_i (i < j)
  O:  x_i +- x_j (i < j), y_j +- y_i (i < j), plus the short roots x_i / y_i
      when p resp. q is odd,

so dominance means x descending and y *ascending in index*.  All arithmetic
is exact (integers and Fractions); only signs and zero tests of the Dirac
bound are meaningful, not its absolute normalization.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from .partitions import (
    BoxContext,
    CompatiblePair,
    OrthoPartition,
    Partition,
    as_partition,
    complement,
    conjugate,
    part,
    weight,
)

WEYL_CAP = 10**6


def _conv_O(p: int, q: int) -> str:
    return f"O-{'even' if p % 2 == 0 else 'odd'}-{'even' if q % 2 == 0 else 'odd'}"


@dataclass(frozen=True)
class Weight:
    """Integer or half-integer vector in the fixed torus coordinates."""

    xs: tuple[Fraction, ...]
    ys: tuple[Fraction, ...]
    conv: str  # "U" | "O-even-even" | "O-even-odd" | "O-odd-even" | "O-odd-odd"

    @staticmethod
    def make(xs: Sequence, ys: Sequence, conv: str) -> "Weight":
        return Weight(tuple(Fraction(v) for v in xs), tuple(Fraction(v) for v in ys), conv)

    def __add__(self, other: "Weight") -> "Weight":
        assert self.conv == other.conv
        return Weight(tuple(a + b for a, b in zip(self.xs, other.xs)),
                      tuple(a + b for a, b in zip(self.ys, other.ys)), self.conv)

    def __sub__(self, other: "Weight") -> "Weight":
        assert self.conv == other.conv
        return Weight(tuple(a - b for a, b in zip(self.xs, other.xs)),
                      tuple(a - b for a, b in zip(self.ys, other.ys)), self.conv)

    def norm2(self) -> Fraction:
        return sum(v * v for v in self.xs) + sum(v * v for v in self.ys)

    def is_zero(self) -> bool:
        return all(v == 0 for v in self.xs) and all(v == 0 for v in self.ys)

    def is_dominant(self) -> bool:
        """Dominance for the fixed compact positive system: x descending and
        y ascending; for O the last x (resp. first y) enters through its
        absolute value when p (resp. q) is even, and must be >= 0 when odd."""
        xs, ys = self.xs, self.ys
        if self.conv == "U":
            return all(a >= b for a, b in zip(xs, xs[1:])) and all(a <= b for a, b in zip(ys, ys[1:]))
        _, p_par, q_par = self.conv.split("-")
        x_ok = all(xs[i] >= xs[i + 1] for i in range(len(xs) - 2))
        if len(xs) >= 2:
            x_ok = x_ok and xs[-2] >= abs(xs[-1])
        if p_par == "odd" and xs:
            x_ok = x_ok and xs[-1] >= 0
        y_ok = all(ys[i] <= ys[i + 1] for i in range(1, len(ys) - 1))
        if len(ys) >= 2:
            y_ok = y_ok and ys[1] >= abs(ys[0])
        if q_par == "odd" and ys:
            y_ok = y_ok and ys[0] >= 0
        return x_ok and y_ok


@dataclass(frozen=True)
class RootSystemData:
    kind: str
    p: int
    q: int
    pos_compact: tuple[tuple[tuple[Fraction, ...], int], ...]  # (coordinate vector, multiplicity)
    noncompact_pairs: tuple[tuple[tuple[Fraction, ...], int], ...]  # one per +- pair
    rho: Weight
    rho_c: Weight
    rho_n: Weight


def r_G(kind: str, p: int, q: int) -> int:
    """Minimal strongly primitive degree: min(p, q) for U(p,q) and O(p,q)."""
    if p < 1 or q < 1:
        raise ValueError("p, q must be >= 1")
    return min(p, q)


# ---------------------------------------------------------------------------
# K-type highest weights 2rho(u cap p)


def ktype_weight_U(lam: Partition, mu: Partition, ctx: BoxContext) -> Weight:
    """Highest weight of the lowest K-type of A(lam, mu) for U(p, q):
    sum over boxes of lam of (x_i - y_j) minus the reflected sum over the
    complement of mu.  Coefficients: x_i -> lam_i + mu_i - q,
    y_j -> p - lam*_j - mu*_j.
    """
    p, q = ctx.p, ctx.q
    lam, mu = as_partition(lam), as_partition(mu)
    lc, mc = conjugate(lam), conjugate(mu)
    xs = [part(lam, i) + part(mu, i) - q for i in range(1, p + 1)]
    ys = [p - part(lc, j) - part(mc, j) for j in range(1, q + 1)]
    return Weight.make(xs, ys, "U")


def ktype_box_sum_U(lam: Partition, mu: Partition, ctx: BoxContext) -> Weight:
    """Same weight computed by literal box summation (independent route)."""
    p, q = ctx.p, ctx.q
    xs, ys = [0] * p, [0] * q
    for i in range(1, p + 1):
        for j in range(1, part(as_partition(lam), i) + 1):
            xs[i - 1] += 1
            ys[j - 1] -= 1
    mu_hat = complement(mu, p, q)
    for i in range(1, p + 1):
        for j in range(1, part(mu_hat, i) + 1):
            xs[p - i] -= 1
            ys[q - j] += 1
    return Weight.make(xs, ys, "U")


def _eps_weights(p: int, sign1: Optional[int]) -> list[tuple[int, int]]:
    """Torus weights of the reordered basis of C^p for O(p): a list of
    (index a, coefficient c) meaning the basis vector has weight c*x_a
    (c = 0 for the middle vector when p is odd).  sign1 = -1 swaps the two
    central vectors e_r and bar e_r."""
    r = p // 2
    ws = [(a, 1) for a in range(1, r + 1)]
    if p % 2 == 1:
        ws.append((0, 0))
    ws += [(a, -1) for a in range(r, 0, -1)]
    if sign1 == -1:
        i_plus = r - 1
        i_minus = len(ws) - r
        ws[i_plus], ws[i_minus] = ws[i_minus], ws[i_plus]
    return ws


def _gamma_star_weights(q: int, sign2: Optional[int]) -> list[tuple[int, int]]:
    """Torus weights of the duals of the reordered basis of C^q for O(q):
    gamma_j^* has weight -w_j where (w_j) is ascending; the list holds
    (index b, coefficient c) for c*y_b.  sign2 = -1 swaps f_1 and bar f_1."""
    s = q // 2
    ws = [(b, 1) for b in range(s, 0, -1)]
    if q % 2 == 1:
        ws.append((0, 0))
    ws += [(b, -1) for b in range(1, s + 1)]
    if sign2 == -1:
        i_plus = s - 1
        i_minus = len(ws) - s
        ws[i_plus], ws[i_minus] = ws[i_minus], ws[i_plus]
    return ws


def ktype_weight_O(orth: OrthoPartition, sign1: Optional[int] = None, sign2: Optional[int] = None) -> Weight:
    """Highest weight of the lowest K-type of A(lam)(signs) for O(p,q),
    summed over the boxes of lam in the reordered eigenbases.

    sign1 acts on the C^p side (swap of the two central vectors), sign2 on
    the C^q side; each is only meaningful when the corresponding corner of
    lam is strict, per the even-type classification.
    """
    p, q = orth.ctx.p, orth.ctx.q
    _check_signs(orth, sign1, sign2)
    eps = _eps_weights(p, sign1)
    gam = _gamma_star_weights(q, sign2)
    r, s = p // 2, q // 2
    xs, ys = [0] * r, [0] * s
    lam = orth.lam
    for i in range(1, p + 1):
        for j in range(1, part(lam, i) + 1):
            a, ca = eps[i - 1]
            b, cb = gam[j - 1]
            if ca:
                xs[a - 1] += ca
            if cb:
                ys[b - 1] += cb
    return Weight.make(xs, ys, _conv_O(p, q))


def _check_signs(orth: OrthoPartition, sign1, sign2):
    allowed1 = orth.parity == "even" and orth.even_type in (1, 3)
    allowed2 = orth.parity == "even" and orth.even_type in (2, 3)
    if sign1 not in (None, 1, -1) or sign2 not in (None, 1, -1):
        raise ValueError("signs must be +1, -1 or None")
    if sign1 == -1 and not allowed1:
        raise ValueError(f"sign1 is not meaningful for {orth.lam} (parity {orth.parity}, type {orth.even_type})")
    if sign2 == -1 and not allowed2:
        raise ValueError(f"sign2 is not meaningful for {orth.lam} (parity {orth.parity}, type {orth.even_type})")


# ---------------------------------------------------------------------------
# strongly primitive degrees


def degree_U(cp: CompatiblePair) -> int:
    """R = |lam| + |complement(mu)| = dim(u cap p)."""
    return weight(cp.lam) + weight(complement(cp.mu, cp.ctx.p, cp.ctx.q))


def degree_O(orth: OrthoPartition) -> int:
    """R = |lam|; the Levi identity R = (pq - 2*sum a_j b_j - p0 q0)/2 must agree."""
    p, q = orth.ctx.p, orth.ctx.q
    ab = 2 * sum(a * b for a, b in orth.pairs)
    p0q0 = orth.central[0] * orth.central[1] if orth.central else 0
    levi_form = Fraction(p * q - ab - p0q0, 2)
    r = weight(orth.lam)
    assert levi_form == r, (orth.lam, p, q, levi_form, r)
    return r


def holomorphic_degree(r: int, s: int, p: int, q: int) -> int:
    """Degree of the holomorphic module with lam = (q^r, s^(p-r)): rq + s(p-r)."""
    return r * q + s * (p - r)


# ---------------------------------------------------------------------------
# rho vectors for the standard positive systems


def _rho_U(p: int, q: int) -> tuple[Weight, Weight, Weight]:
    n = p + q
    # chain order (x_1, ..., x_p, y_q, ..., y_1); position k gets (n-1-2k)/2
    xs = [Fraction(n + 1 - 2 * i, 2) for i in range(1, p + 1)]
    ys = [Fraction(2 * j - 1 - n, 2) for j in range(1, q + 1)]
    rho = Weight.make(xs, ys, "U")
    rho_c = Weight.make([Fraction(p + 1 - 2 * i, 2) for i in range(1, p + 1)],
                        [Fraction(2 * j - q - 1, 2) for j in range(1, q + 1)], "U")
    rho_n = rho - rho_c
    return rho, rho_c, rho_n


def _o_root_vectors(p: int, q: int):
    """Root data of O(p,q) on the rank r+s torus.

    Returns (m, compact_pairs, noncompact_pairs) where each entry is
    (vector over the m = r+s coordinates, multiplicity) listing one root per
    +- pair.  Short x-roots are compact iff p is odd and noncompact iff q is
    odd (symmetrically for y)."""
    r, s = p // 2, q // 2
    m = r + s

    def vec(*pairs):
        v = [0] * m
        for idx, c in pairs:
            v[idx] += c
        return tuple(v)

    compact = []
    for i, j in itertools.combinations(range(r), 2):
        compact.append((vec((i, 1), (j, -1)), 1))
        compact.append((vec((i, 1), (j, 1)), 1))
    for i, j in itertools.combinations(range(s), 2):
        compact.append((vec((r + j, 1), (r + i, -1)), 1))
        compact.append((vec((r + j, 1), (r + i, 1)), 1))
    if p % 2 == 1:
        compact += [(vec((i, 1)), 1) for i in range(r)]
    if q % 2 == 1:
        compact += [(vec((r + j, 1)), 1) for j in range(s)]
    noncompact = []
    for i in range(r):
        for j in range(s):
            noncompact.append((vec((i, 1), (r + j, -1)), 1))
            noncompact.append((vec((i, 1), (r + j, 1)), 1))
    if q % 2 == 1:
        noncompact += [(vec((i, 1)), 1) for i in range(r)]
    if p % 2 == 1:
        noncompact += [(vec((r + j, 1)), 1) for j in range(s)]
    return m, compact, noncompact


def _split_xy_O(v: Sequence[Fraction], p: int, q: int) -> Weight:
    r = p // 2
    return Weight.make(v[:r], v[r:], _conv_O(p, q))


def _rho_O(p: int, q: int) -> tuple[Weight, Weight, Weight]:
    m, compact, noncompact = _o_root_vectors(p, q)
    # standard positivity: generic vector with x_1 > ... > x_r > y_s > ... > y_1 > 0
    v0 = _std_order_vector(p, q)
    rho_c = _half_sum(compact, v0, p, q)
    rho_n = _half_sum(noncompact, v0, p, q)
    return rho_c + rho_n, rho_c, rho_n


def _std_order_vector(p: int, q: int) -> tuple[Fraction, ...]:
    r, s = p // 2, q // 2
    m = r + s
    v = [Fraction(0)] * m
    for i in range(r):
        v[i] = Fraction(2 ** (m - i))
    for j in range(s):
        v[r + j] = Fraction(2 ** (j + 1))
    return tuple(v)


def _half_sum(pairs, v0, p, q) -> Weight:
    m = len(v0)
    total = [Fraction(0)] * m
    for vec, mult in pairs:
        d = sum(a * b for a, b in zip(vec, v0))
        assert d != 0, f"positivity vector not generic for root {vec}"
        sgn = 1 if d > 0 else -1
        for k in range(m):
            total[k] += Fraction(mult * sgn * vec[k], 2)
    return _split_xy_O(total, p, q)


def root_system(kind: str, p: int, q: int) -> RootSystemData:
    """Root data with the fixed positive systems; rho = rho_c + rho_n."""
    if kind == "U":
        rho, rho_c, rho_n = _rho_U(p, q)
        pc = []
        for i, j in itertools.combinations(range(p), 2):
            v = [Fraction(0)] * (p + q)
            v[i], v[j] = Fraction(1), Fraction(-1)
            pc.append((tuple(v), 1))
        for i, j in itertools.combinations(range(q), 2):
            v = [Fraction(0)] * (p + q)
            v[p + j], v[p + i] = Fraction(1), Fraction(-1)
            pc.append((tuple(v), 1))
        nc = []
        for i in range(p):
            for j in range(q):
                v = [Fraction(0)] * (p + q)
                v[i], v[p + j] = Fraction(1), Fraction(-1)
                nc.append((tuple(v), 1))
        return RootSystemData("U", p, q, tuple(pc), tuple(nc), rho, rho_c, rho_n)
    if kind == "O":
        rho, rho_c, rho_n = _rho_O(p, q)
        m, compact, noncompact = _o_root_vectors(p, q)
        v0 = _std_order_vector(p, q)
        pos = lambda vec: sum(a * b for a, b in zip(vec, v0)) > 0
        pc = tuple((tuple(Fraction(c) for c in vec), mult) for vec, mult in compact if pos(vec))
        nc = tuple((tuple(Fraction(c) for c in vec), mult) for vec, mult in noncompact)
        return RootSystemData("O", p, q, pc, nc, rho, rho_c, rho_n)
    raise ValueError(f"unknown kind {kind!r}")


# ---------------------------------------------------------------------------
# Parthasarathy / Dirac bound


def _dominant_sort_U(w: Weight) -> Weight:
    return Weight(tuple(sorted(w.xs, reverse=True)), tuple(sorted(w.ys)), "U")


def _dominant_sort_O(w: Weight, p: int, q: int) -> Weight:
    def dom_desc(vals, odd):
        a = sorted((abs(v) for v in vals), reverse=True)
        if not odd and sum(1 for v in vals if v < 0) % 2 == 1 and a and a[-1] != 0:
            a[-1] = -a[-1]
        return tuple(a)

    xs = dom_desc(w.xs, p % 2 == 1)
    ys = dom_desc(w.ys, q % 2 == 1)
    return Weight(xs, tuple(reversed(ys)), w.conv)


def _u_positive_systems(p: int, q: int):
    """rho of every positive system of U(p,q) containing the fixed compact one:
    one per interleaving of the x-chain with the reversed y-chain."""
    n = p + q
    for xpos in itertools.combinations(range(n), p):
        xs = [Fraction(0)] * p
        ys = [Fraction(0)] * q
        ypos = [k for k in range(n) if k not in xpos]
        for i, k in enumerate(xpos):
            xs[i] = Fraction(n - 1 - 2 * k, 2)
        for jj, k in enumerate(ypos):
            # y's are met in descending index order y_q, ..., y_1
            ys[q - 1 - jj] = Fraction(n - 1 - 2 * k, 2)
        yield Weight.make(xs, ys, "U")


def _signed_perms(m: int):
    for perm in itertools.permutations(range(m)):
        for signs in itertools.product((1, -1), repeat=m):
            yield perm, signs


def dirac_bound(kind: str, p: int, q: int, chi: Weight) -> Fraction:
    """Sharpest Parthasarathy bound ||rho||^2 - ||w(chi - rho_n) + rho_c||^2.

    The bound of the Dirac inequality holds for every positive system
    Delta^+(g) containing the fixed compact system; the maximum over those
    systems is returned, each evaluated with w the compact Weyl element
    making w(chi - rho_n) dominant.  Nonpositive for unitarizable modules
    with vanishing Casimir; zero exactly at the lowest K-types 2rho(u cap p).
    """
    if kind == "U":
        if _binom(p + q, p) > WEYL_CAP:
            raise CapError(p, q)
        _, rho_c, _ = _rho_U(p, q)
        rho_norm = _rho_U(p, q)[0].norm2()
        best = None
        for rho_w in _u_positive_systems(p, q):
            rho_n_w = rho_w - rho_c
            cand = _dominant_sort_U(chi - rho_n_w) + rho_c
            val = rho_norm - cand.norm2()
            if best is None or val > best:
                best = val
        return best
    if kind == "O":
        r, s = p // 2, q // 2
        m = r + s
        if (2 ** m) * _fact(m) > WEYL_CAP:
            raise CapError(p, q)
        _, compact, noncompact = _o_root_vectors(p, q)
        v0 = _std_order_vector(p, q)
        rho, rho_c, _ = _rho_O(p, q)
        rho_norm = rho.norm2()
        best = None
        seen = set()
        for perm, signs in _signed_perms(m):
            v = [Fraction(0)] * m
            for k in range(m):
                v[k] = signs[k] * v0[perm[k]]
            if any(sum(a * b for a, b in zip(vec, v)) <= 0 for vec, _ in compact
                   if sum(c * d for c, d in zip(vec, v0)) > 0):
                continue
            rho_n_w = _half_sum(noncompact, tuple(v), p, q)
            key = (rho_n_w.xs, rho_n_w.ys)
            if key in seen:
                continue
            seen.add(key)
            cand = _dominant_sort_O(chi - rho_n_w, p, q) + rho_c
            val = rho_norm - cand.norm2()
            if best is None or val > best:
                best = val
        return best
    raise ValueError(f"unknown kind {kind!r}")


class CapError(ValueError):
    def __init__(self, p, q):
        super().__init__(f"Weyl iteration cap exceeded for (p, q) = ({p}, {q})")


def _binom(n, k):
    out = 1
    for i in range(k):
        out = out * (n - i) // (i + 1)
    return out


def _fact(n):
    out = 1
    for i in range(2, n + 1):
        out *= i
    return out
