"""Young-diagram combinatorics inside a p x q box.

Partitions are weakly decreasing tuples of nonnegative integers; trailing
zeros are stripped on normalization so that ``(2, 1, 0) == (2, 1)``.  The
central notions are *compatible pairs* (lambda, mu) -- nested partitions
whose skew diagram is a union of rectangles meeting only at corners -- and
*orthogonal partitions*, those lambda for which (lambda, complement(lambda))
is itself compatible.  Compatible pairs index the cohomological modules of
U(p,q), orthogonal partitions those of O(p,q).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterator, Optional, Sequence

Partition = tuple[int, ...]

#: default ceiling on p*q for exhaustive enumeration
DEFAULT_ENUM_CAP = 42


class CapExceededError(ValueError):
    """An enumeration request exceeded the configured cap."""

    def __init__(self, name, value, cap):
        self.cap_name = name
        self.value = value
        self.cap = cap
        super().__init__(f"cap exceeded: {name}={value} > {cap}")


def as_partition(parts: Sequence[int]) -> Partition:
    """Normalize ``parts`` to a partition tuple (strip trailing zeros)."""
    t = tuple(int(x) for x in parts)
    for a, b in zip(t, t[1:]):
        if a < b:
            raise ValueError(f"not weakly decreasing: {t}")
    if t and t[-1] < 0:
        raise ValueError(f"negative part in {t}")
    while t and t[-1] == 0:
        t = t[:-1]
    return t


def weight(lam: Partition) -> int:
    return sum(lam)


def length(lam: Partition) -> int:
    return len(as_partition(lam))


def part(lam: Sequence[int], i: int) -> int:
    """1-based part access, zero beyond the last row."""
    return lam[i - 1] if 1 <= i <= len(lam) else 0


def pad(lam: Partition, rows: int) -> tuple[int, ...]:
    return tuple(lam) + (0,) * (rows - len(lam))


def contains(outer: Partition, inner: Partition) -> bool:
    inner = as_partition(inner)
    outer = as_partition(outer)
    if len(inner) > len(outer):
        return False
    return all(part(outer, i + 1) >= v for i, v in enumerate(inner))


def in_box(lam: Partition, p: int, q: int) -> bool:
    lam = as_partition(lam)
    return len(lam) <= p and (not lam or lam[0] <= q)


def conjugate(lam: Partition) -> Partition:
    """Transpose of the Young diagram: (lam*)_j = #{i : lam_i >= j}."""
    lam = as_partition(lam)
    if not lam:
        return ()
    return tuple(sum(1 for v in lam if v >= j) for j in range(1, lam[0] + 1))


def complement(lam: Partition, p: int, q: int) -> Partition:
    """180-degree rotated complement of lam inside the p x q rectangle."""
    lam = as_partition(lam)
    if not in_box(lam, p, q):
        raise ValueError(f"{lam} does not fit in a {p}x{q} box")
    padded = pad(lam, p)
    return as_partition(tuple(q - padded[p - 1 - i] for i in range(p)))


@dataclass(frozen=True)
class BoxContext:
    """The ambient p x q rectangle (p rows, q columns)."""

    p: int
    q: int

    def __post_init__(self):
        if self.p < 1 or self.q < 1:
            raise ValueError("box dimensions must be positive")


@dataclass(frozen=True)
class SkewShape:
    inner: Partition
    outer: Partition

    def __post_init__(self):
        if not contains(self.outer, self.inner):
            raise ValueError(f"skew needs inner subset outer: {self.inner}/{self.outer}")


@dataclass(frozen=True)
class CompatiblePair:
    """Nested pair lambda <= mu <= p x q whose skew is a corner-disjoint
    union of rectangles, listed top-down as (rows_i, cols_i)."""

    lam: Partition
    mu: Partition
    ctx: BoxContext
    rects: tuple[tuple[int, int], ...]

    @property
    def is_discrete_series(self) -> bool:
        return self.lam == self.mu


@dataclass(frozen=True)
class OrthoPartition:
    """Orthogonal partition with the palindromic decomposition of the skew
    complement(lam)/lam: pairs (a_i x b_i) repeated symmetrically around an
    optional central rectangle (p0 x q0)."""

    lam: Partition
    ctx: BoxContext
    pairs: tuple[tuple[int, int], ...]
    central: Optional[tuple[int, int]]
    parity: str  # "odd" | "even"
    even_type: Optional[int]  # 1 | 2 | 3 for even parity, else None

    @property
    def lam_hat(self) -> Partition:
        return complement(self.lam, self.ctx.p, self.ctx.q)

    @property
    def rect_count(self) -> int:
        return 2 * len(self.pairs) + (1 if self.central else 0)


def _runs(lam: Partition, mu: Partition, p: int):
    """Maximal runs of consecutive rows with identical (lam_i, mu_i)."""
    lp, mp = pad(lam, p), pad(mu, p)
    runs = []
    i = 0
    while i < p:
        j = i
        while j + 1 < p and (lp[j + 1], mp[j + 1]) == (lp[i], mp[i]):
            j += 1
        runs.append((j - i + 1, lp[i], mp[i]))
        i = j + 1
    return runs


def skew_decompose(lam: Partition, mu: Partition, ctx: BoxContext) -> Optional[tuple[tuple[int, int], ...]]:
    """Rectangle decomposition of mu/lam, or None when the skew is not a
    corner-disjoint union of rectangles.

    Scanning rows top-down, each maximal run of rows with identical
    (lam_i, mu_i) and lam_i < mu_i contributes one rectangle; two nonempty
    runs that are vertically adjacent must satisfy mu(below) <= lam(above),
    otherwise the rectangles would share an edge.  lam == mu yields ().
    """
    lam, mu = as_partition(lam), as_partition(mu)
    if not (contains(mu, lam) and in_box(mu, ctx.p, ctx.q)):
        raise ValueError(f"need lam <= mu <= {ctx.p}x{ctx.q}: {lam}, {mu}")
    rects = []
    prev_nonempty = None  # (lam_i of the run) if the run directly above was nonempty
    for rows, lo, hi in _runs(lam, mu, ctx.p):
        if lo == hi:
            prev_nonempty = None
            continue
        if prev_nonempty is not None and hi > prev_nonempty:
            return None
        rects.append((rows, hi - lo))
        prev_nonempty = lo
    return tuple(rects)


def compatible_pair(lam: Partition, mu: Partition, ctx: BoxContext) -> Optional[CompatiblePair]:
    rects = skew_decompose(lam, mu, ctx)
    if rects is None:
        return None
    return CompatiblePair(as_partition(lam), as_partition(mu), ctx, rects)


def is_compatible(lam: Partition, mu: Partition, ctx: BoxContext) -> bool:
    return skew_decompose(lam, mu, ctx) is not None


def build_witness_X(cp: CompatiblePair) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """A dominant integer vector (x_1 >= ... >= x_p ; y_q >= ... >= y_1)
    whose strict/weak comparison pattern realizes (lam, mu):
    x_i > y_j exactly on lam, x_i >= y_j exactly on mu.

    Rows (x, descending) and columns (y, descending from j = q) are merged
    into a common chain of levels; every rectangle of the skew becomes one
    tie block whose rows and columns all share a level.
    """
    p, q = cp.ctx.p, cp.ctx.q
    lam, mu = pad(cp.lam, p), pad(cp.mu, p)
    xs, ys = [0] * p, [0] * q
    level = p + q
    i, j = 1, q
    while i <= p or j >= 1:
        if i > p:
            ys[j - 1] = level
            j -= 1
        elif j < 1 or j <= lam[i - 1]:
            xs[i - 1] = level
            i += 1
        elif j > mu[i - 1]:
            ys[j - 1] = level
            j -= 1
        else:
            # tie block: the run of rows sharing (lam_i, mu_i) and the columns
            # lam_i < j' <= mu_i all receive the current level
            lo, hi = lam[i - 1], mu[i - 1]
            while i <= p and (lam[i - 1], mu[i - 1]) == (lo, hi):
                xs[i - 1] = level
                i += 1
            while j > lo:
                ys[j - 1] = level
                j -= 1
        level -= 1
    return tuple(xs), tuple(ys)


def partitions_of_witness(xs: Sequence[int], ys: Sequence[int], ctx: BoxContext) -> tuple[Partition, Partition]:
    """Recover (lam, mu) from a vector: lam = {x_i > y_j}, mu = {x_i >= y_j}."""
    p, q = ctx.p, ctx.q
    lam = tuple(sum(1 for j in range(q) if xs[i] > ys[j]) for i in range(p))
    mu = tuple(sum(1 for j in range(q) if xs[i] >= ys[j]) for i in range(p))
    return as_partition(lam), as_partition(mu)


def inscribes(r: int, lam: Partition, mu: Partition, p: int) -> bool:
    """Whether the rectangle (r^p) fits inside the skew mu/lam, i.e.
    mu - (r^p) is a partition containing lam.

    For a compatible pair with rectangles (p_i x q_i) this is equivalent to
    sum(p_i) == p and r <= q_i for all i; both forms are evaluated and must
    agree whenever the rectangle decomposition exists.
    """
    if r < 0:
        raise ValueError("r must be >= 0")
    if r == 0:
        return True
    lam, mu = as_partition(lam), as_partition(mu)
    if not contains(mu, lam):
        raise ValueError(f"need lam <= mu: {lam}, {mu}")
    mup = pad(mu, p)
    componentwise = all(mup[i] - r >= part(lam, i + 1) for i in range(p))
    rects = skew_decompose(lam, mu, BoxContext(p, max(1, mup[0])))
    if rects is not None:
        rect_form = sum(rows for rows, _ in rects) == p and all(cols >= r for _, cols in rects)
        assert rect_form == componentwise, (r, lam, mu, p, rects)
    return componentwise


def subtract_rows(mu: Partition, r: int, p: int) -> Partition:
    """mu - (r^p) componentwise on p rows (requires the result valid)."""
    mup = pad(as_partition(mu), p)
    shifted = tuple(v - r for v in mup)
    if any(v < 0 for v in shifted):
        raise ValueError(f"{mu} - ({r}^{p}) has negative parts")
    return as_partition(shifted)


def ortho_classify(lam: Partition, ctx: BoxContext) -> Optional[OrthoPartition]:
    """Classify lam as an orthogonal partition of the box, or None.

    The skew complement(lam)/lam of an orthogonal partition is centrally
    symmetric, so its rectangle list is a palindrome
    (a_1 x b_1) * ... * (p_0 x q_0) * ... * (a_1 x b_1); parity is odd when
    the total rectangle count is odd.  Even-parity partitions carry a type
    in {1, 2, 3} governing how many sign labels the module catalog attaches.
    """
    lam = as_partition(lam)
    p, q = ctx.p, ctx.q
    if not in_box(lam, p, q):
        raise ValueError(f"{lam} does not fit in {p}x{q}")
    lam_hat = complement(lam, p, q)
    if not contains(lam_hat, lam):
        return None
    rects = skew_decompose(lam, lam_hat, ctx)
    if rects is None:
        return None
    m = len(rects)
    assert rects == tuple(reversed(rects)), f"skew of {lam} in {p}x{q} is not palindromic"
    if m % 2 == 1:
        pairs = rects[: m // 2]
        central = rects[m // 2]
        parity = "odd"
        even_type = None
    else:
        pairs = rects[: m // 2]
        central = None
        parity = "even"
        even_type = _even_type(lam, p, q)
    return OrthoPartition(lam, ctx, tuple(pairs), central, parity, even_type)


def _even_type(lam: Partition, p: int, q: int) -> int:
    """Type of an even orthogonal partition.

    With r = p/2, s = q/2 where defined:
      type 1: p, q even with lam_r > lam_{r+1} and lam*_s = lam*_{s+1},
              or p even, q odd;
      type 2: p, q even with lam_r = lam_{r+1} and lam*_s > lam*_{s+1},
              or p odd, q even;
      type 3: p, q even with both strict.
    Both p and q odd never happens: those boxes only carry odd partitions.
    """
    assert p % 2 == 0 or q % 2 == 0, "even orthogonal partition in an odd x odd box"
    if p % 2 == 0 and q % 2 == 1:
        return 1
    if p % 2 == 1 and q % 2 == 0:
        return 2
    r, s = p // 2, q // 2
    conj = conjugate(lam)
    row_strict = part(lam, r) > part(lam, r + 1)
    col_strict = part(conj, s) > part(conj, s + 1)
    if row_strict and col_strict:
        return 3
    if row_strict:
        return 1
    if col_strict:
        return 2
    raise AssertionError(f"even orthogonal {lam} in {p}x{q} with neither corner strict")


def sign_multiplicity(orth: OrthoPartition) -> int:
    """Number of modules attached to the partition: 1 (odd), 2 (type 1/2), 4 (type 3)."""
    if orth.parity == "odd":
        return 1
    return 4 if orth.even_type == 3 else 2


def partitions_in_box(p: int, q: int) -> Iterator[Partition]:
    """All partitions inside p x q, in lexicographic order of the padded tuple."""

    def gen(rows: int, maxpart: int):
        if rows == 0:
            yield ()
            return
        for first in range(maxpart + 1):
            for rest in gen(rows - 1, first):
                yield (first,) + rest

    seen = set()
    for padded in gen(p, q):
        lam = as_partition(padded)
        if lam not in seen:
            seen.add(lam)
            yield lam


def enumerate_compatible(ctx: BoxContext, cap: int = DEFAULT_ENUM_CAP) -> list[CompatiblePair]:
    """All compatible pairs in the box, ordered by (|lam|, lam, mu)."""
    if ctx.p * ctx.q > cap:
        raise CapExceededError("enumeration box area p*q", ctx.p * ctx.q, cap)
    out = []
    parts = sorted(partitions_in_box(ctx.p, ctx.q))
    for lam, mu in itertools.product(parts, parts):
        if not contains(mu, lam):
            continue
        cp = compatible_pair(lam, mu, ctx)
        if cp is not None:
            out.append(cp)
    out.sort(key=lambda c: (weight(c.lam), c.lam, c.mu))
    return out


def enumerate_orthogonal(ctx: BoxContext, cap: int = DEFAULT_ENUM_CAP) -> list[OrthoPartition]:
    """All orthogonal partitions in the box, ordered by (|lam|, lam)."""
    if ctx.p * ctx.q > cap:
        raise CapExceededError("enumeration box area p*q", ctx.p * ctx.q, cap)
    out = [o for lam in partitions_in_box(ctx.p, ctx.q) for o in [ortho_classify(lam, ctx)] if o is not None]
    out.sort(key=lambda o: (weight(o.lam), o.lam))
    return out
