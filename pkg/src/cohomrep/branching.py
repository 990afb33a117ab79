"""Branching multiplicities and their independent oracles.

The fast route is combinatorial: Littlewood-Richardson coefficients by
direct enumeration of LR skew tableaux, Littlewood's GL -> O restriction in
its stable range, and the K-type restriction predicates driven by rectangle
inscription.  The slow route, used to cross-check, expands characters into
exact weight multiplicities (semistandard tableaux for GL, explicit
character theory for O(n), n <= 3) and decomposes restrictions by peeling
highest weights.
"""

from __future__ import annotations

import threading
from collections import Counter
from typing import Optional

from .partitions import (
    BoxContext,
    Partition,
    as_partition,
    complement,
    conjugate,
    contains,
    inscribes,
    ortho_classify,
    pad,
    part,
    subtract_rows,
    weight,
)

DIM_CAP = 10**6

_lr_cache: dict[tuple[Partition, Partition, Partition], int] = {}
_lr_lock = threading.Lock()


# ---------------------------------------------------------------------------
# Littlewood-Richardson coefficients


def lr_coefficient(lam: Partition, mu: Partition, nu: Partition, use_cache: bool = True) -> int:
    """c^lam_{mu,nu}: the number of LR skew tableaux of shape lam/mu with
    content nu (semistandard filling whose reverse reading word is a lattice
    word).  Zero unless |lam| = |mu| + |nu| and mu <= lam."""
    lam, mu, nu = as_partition(lam), as_partition(mu), as_partition(nu)
    if weight(lam) != weight(mu) + weight(nu) or not contains(lam, mu):
        return 0
    key = (lam, mu, nu)
    if use_cache:
        got = _lr_cache.get(key)
        if got is not None:
            return got
    val = _count_lr_tableaux(lam, mu, nu)
    if use_cache:
        with _lr_lock:
            _lr_cache[key] = val
    return val


def _count_lr_tableaux(lam: Partition, mu: Partition, nu: Partition) -> int:
    rows = len(lam)
    lamp, mup = pad(lam, rows), pad(mu, rows)
    # reverse reading order: each row right to left, rows top down, so the
    # lattice-word property can be enforced incrementally
    cells = [(i, j) for i in range(rows) for j in range(lamp[i] - 1, mup[i] - 1, -1)]
    n_colors = len(nu)

    def fill(idx, grid, remaining, counts):
        if idx == len(cells):
            return 1
        i, j = cells[idx]
        total = 0
        for c in range(n_colors):
            if remaining[c] == 0:
                continue
            if (i, j + 1) in grid and c > grid[(i, j + 1)]:
                continue  # rows weakly increase left to right
            if (i - 1, j) in grid and c <= grid[(i - 1, j)]:
                continue  # columns strictly increase downward
            if c > 0 and counts[c] >= counts[c - 1]:
                continue  # lattice word
            grid[(i, j)] = c
            remaining[c] -= 1
            counts[c] += 1
            total += fill(idx + 1, grid, remaining, counts)
            del grid[(i, j)]
            remaining[c] += 1
            counts[c] -= 1
        return total

    return fill(0, {}, [nu[c] for c in range(n_colors)], [0] * n_colors)


def even_row_partitions(max_weight: int, max_len: int):
    """Partitions with all parts even, of weight <= max_weight."""
    out = {()}

    def gen(prefix, rem, maxpart):
        for v in range(2, min(maxpart, rem) + 1, 2):
            if len(prefix) < max_len:
                cur = prefix + [v]
                out.add(as_partition(cur))
                gen(cur, rem - v, v)

    gen([], max_weight, max_weight - max_weight % 2)
    return sorted(out, key=lambda t: (weight(t), t))


def gl_to_o_mult(lam: Partition, mu: Partition, n: int) -> Optional[int]:
    """Multiplicity of the O(n)-module labeled mu in the restriction of the
    GL_n-module E^lam, by Littlewood's rule sum_delta c^lam_{mu delta} over
    partitions delta with all parts even.

    Only valid in the stable range l(lam) <= n/2; outside it the character
    oracle is the source of truth and None is returned."""
    lam, mu = as_partition(lam), as_partition(mu)
    if 2 * len(lam) > n:
        return None
    total = 0
    for delta in even_row_partitions(weight(lam) - weight(mu), len(lam)):
        if weight(mu) + weight(delta) == weight(lam):
            total += lr_coefficient(lam, mu, delta)
    if lam == mu:
        assert total == 1, (lam, n, total)
    return total


# ---------------------------------------------------------------------------
# K-type restriction predicates


def restrict_U_pair(lam: Partition, mu: Partition, ctx: BoxContext, r: int) -> dict:
    """Restriction of the lowest K-type V(lam, mu) of U(p,q) under
    GL_q -> GL_{q-r}: contains the K-type of (lam, mu - (r^p)) for the
    smaller group, with multiplicity one, exactly when (r^p) fits in the
    skew mu/lam; no other same-degree K-type occurs."""
    lam, mu = as_partition(lam), as_partition(mu)
    ok = inscribes(r, lam, mu, ctx.p)
    target = (lam, subtract_rows(mu, r, ctx.p)) if ok else None
    return {"contains": ok, "multiplicity": 1 if ok else 0, "target": target}


def restrict_O(lam: Partition, ctx: BoxContext, r: int) -> dict:
    """Restriction of the lowest K-type of A(lam) under O(q) -> O(q-r):
    contains the same lam (orthogonal in p x (q-r)) with multiplicity one
    exactly when (r^p) fits in the skew complement(lam)/lam."""
    orth = ortho_classify(lam, ctx)
    if orth is None:
        raise ValueError(f"{lam} is not orthogonal in {ctx.p}x{ctx.q}")
    lam_hat = complement(lam, ctx.p, ctx.q)
    ok = inscribes(r, lam, lam_hat, ctx.p)
    if ok:
        assert ortho_classify(lam, BoxContext(ctx.p, ctx.q - r)) is not None
    return {"contains": ok, "multiplicity": 1 if ok else 0}


def restrict_UO_vanishing(lam: Partition, mu: Partition, ctx: BoxContext) -> bool:
    """Whether the restriction of V(lam, mu) from U(p,q) to O(p,q) can be
    nontrivial: true iff lam = 0 or mu is the full box."""
    lam, mu = as_partition(lam), as_partition(mu)
    return lam == () or mu == as_partition((ctx.q,) * ctx.p)


def tensor_contains(kind: str, p: int, q: int, params) -> dict:
    """Tensor products of ladder modules.

    U: for (i, j, k, l) with i+j+k+l <= q the product of A((i^p),((q-j)^p))
    and A((k^p),((q-l)^p)) contains A(((i+k)^p),((q-j-l)^p)) with
    multiplicity one.  O: for (k, l) with k+l <= q/2 the product of
    A((k^p))^± and A((l^p))^± contains A(((k+l)^p))^± with multiplicity one.
    """
    if kind == "U":
        i, j, k, l = params
        ok = i + j + k + l <= q and min(i, j, k, l) >= 0
        target = (as_partition(((i + k),) * p), as_partition(((q - j - l),) * p)) if ok else None
        return {"contains": ok, "multiplicity": 1 if ok else 0, "target": target}
    if kind == "O":
        k, l = params
        ok = 2 * (k + l) <= q and min(k, l) >= 0
        target = as_partition(((k + l),) * p) if ok else None
        return {"contains": ok, "multiplicity": 1 if ok else 0, "target": target}
    raise ValueError(f"unknown kind {kind!r}")


def kobayashi_admissible(kind: str, p: int, q: int, r: int, lam: Partition, mu: Optional[Partition] = None) -> bool:
    """Discrete decomposability of A(lam, mu) (resp. A(lam)) under the
    symmetric subgroup U(p,q-r) x U(r) (resp. SO(p,q-r) x SO(r)), 2r <= q.

    U: admissible iff lam_i (q - mu_i) = 0 for every row i.
    O: admissible iff lam fits in the half-height box [p/2] x q."""
    if not 2 * r <= q:
        raise ValueError("need 2r <= q")
    lam = as_partition(lam)
    if kind == "U":
        assert mu is not None
        mu = as_partition(mu)
        return all(part(lam, i) * (q - part(mu, i)) == 0 for i in range(1, p + 1))
    if kind == "O":
        return len(lam) <= p // 2
    raise ValueError(f"unknown kind {kind!r}")


# ---------------------------------------------------------------------------
# GL character oracle (exact weight multiplicities via semistandard tableaux)


class FormalCharacter(Counter):
    """Finitely supported weight -> multiplicity map for a fixed group."""

    def __init__(self, kind: str, rank: int, data=None):
        super().__init__(data or {})
        self.kind = kind
        self.rank = rank

    def dim(self) -> int:
        return sum(self.values())


def gl_weyl_dim(hw, n: int) -> int:
    """Weyl dimension formula for GL_n with weakly decreasing hw."""
    num = den = 1
    for i in range(n):
        for j in range(i + 1, n):
            num *= hw[i] - hw[j] + j - i
            den *= j - i
    return num // den


def gl_character(hw, n: int, cap: int = DIM_CAP) -> FormalCharacter:
    """Weight multiplicities of the irreducible GL_n module with highest
    weight hw (weakly decreasing integers, negatives allowed)."""
    hw = tuple(int(v) for v in hw)
    if len(hw) != n:
        raise ValueError(f"highest weight must have length {n}: {hw}")
    if any(hw[i] < hw[i + 1] for i in range(n - 1)):
        raise ValueError(f"not dominant for GL_{n}: {hw}")
    shift = hw[-1] if hw else 0
    lam = tuple(v - shift for v in hw)
    if gl_weyl_dim(hw, n) > cap:
        raise ValueError(f"dimension cap exceeded for {hw}")
    char = FormalCharacter("GL", n)
    rows = len(as_partition(lam))
    lamp = pad(as_partition(lam), rows)

    def fill(cells, grid, counts):
        if not cells:
            w = tuple(c + shift for c in counts)
            char[w] += 1
            return
        (i, j), rest = cells[0], cells[1:]
        lo = grid[(i, j - 1)] if j > 0 else 0
        for c in range(lo, n):
            if i > 0 and grid[(i - 1, j)] >= c:
                continue
            grid[(i, j)] = c
            counts[c] += 1
            fill(rest, grid, counts)
            counts[c] -= 1
            del grid[(i, j)]

    cells = [(i, j) for i in range(rows) for j in range(lamp[i])]
    fill(cells, {}, [0] * n)
    return char


def gl_restrict_drop(char: FormalCharacter, keep: tuple[int, ...]) -> FormalCharacter:
    """Push a character along a coordinate projection (block embedding)."""
    out = FormalCharacter("GL", len(keep))
    for w, m in char.items():
        out[tuple(w[k] for k in keep)] += m
    return out


def gl_decompose(char: FormalCharacter, cap_iters: int = 10**5) -> Counter:
    """Decompose a nonvirtual GL character into irreducibles by repeatedly
    peeling the lexicographically greatest weight."""
    n = char.rank
    work = Counter({w: m for w, m in char.items() if m})
    out: Counter = Counter()
    iters = 0
    while work:
        iters += 1
        if iters > cap_iters:
            raise RuntimeError("decomposition did not terminate")
        top = max(work)
        mult = work[top]
        assert mult > 0, (top, mult)
        assert all(top[i] >= top[i + 1] for i in range(n - 1)), f"non-dominant leading weight {top}"
        out[top] += mult
        for w, m in gl_character(top, n).items():
            work[w] -= mult * m
            if work[w] == 0:
                del work[w]
    return out


def gl_branching_mult(hw_big, n: int, r: int, hw_small) -> int:
    """Multiplicity of the GL_{n-r} module hw_small in the restriction of
    the GL_n module hw_big under the block embedding A -> diag(A, 1_r)."""
    char = gl_character(hw_big, n)
    restricted = gl_restrict_drop(char, tuple(range(n - r)))
    return gl_decompose(restricted).get(tuple(int(v) for v in hw_small), 0)


# ---------------------------------------------------------------------------
# K-type highest weights as GL pairs, and the oracle-backed restriction count


def ktype_gl_pair_hw(lam: Partition, mu: Partition, ctx: BoxContext) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Highest weight of V(lam, mu) as a GL_p x GL_q module, both factors in
    the standard descending convention.  The GL_q part is listed so that its
    first coordinates correspond to the columns dropped by the block
    embedding GL_{q-r} -> GL_q."""
    p, q = ctx.p, ctx.q
    lam, mu = as_partition(lam), as_partition(mu)
    lc, mc = conjugate(lam), conjugate(mu)
    a = tuple(part(lam, i) + part(mu, i) - q for i in range(1, p + 1))
    b_asc = [p - part(lc, j) - part(mc, j) for j in range(1, q + 1)]
    return a, tuple(reversed(b_asc))


def restrict_U_pair_oracle_mult(lam: Partition, mu: Partition, ctx: BoxContext, r: int,
                                alpha: Partition, beta: Partition) -> int:
    """Multiplicity of V(alpha, beta) (box p x (q-r)) in the restriction of
    V(lam, mu) (box p x q) to GL_p x GL_{q-r}, computed from characters."""
    p, q = ctx.p, ctx.q
    a_big, b_big = ktype_gl_pair_hw(lam, mu, ctx)
    a_small, b_small = ktype_gl_pair_hw(alpha, beta, BoxContext(p, q - r))
    if a_big != a_small:
        return 0
    return gl_branching_mult(b_big, q, r, b_small)


# ---------------------------------------------------------------------------
# small orthogonal groups O(1), O(2), O(3): labels, folding, branching

# irrep labels: ("triv",), ("det",), ("rot", m) for O(2) with m >= 1,
# ("o3", l, eps) for O(3) with eps = +-1 the central character


def folded_o_label(lam: Partition, n: int):
    """Label of the O(n) module attached to a partition of length <= n via
    Weyl's construction from (lam_1 - lam_n, ..., lam_{[n/2]} - lam_{n-[n/2]+1})."""
    lam = as_partition(lam)
    if len(lam) > n:
        raise ValueError(f"need l(lam) <= {n}")
    folded = as_partition(tuple(part(lam, i) - part(lam, n - i + 1) for i in range(1, n // 2 + 1)))
    return o_irrep_from_partition(folded, n)


def o_irrep_from_partition(nu: Partition, n: int):
    nu = as_partition(nu)
    if n == 1:
        if nu == ():
            return ("triv",)
        if nu == (1,):
            return ("det",)
        raise ValueError(f"no O(1) label {nu}")
    if n == 2:
        if nu == ():
            return ("triv",)
        if nu == (1, 1):
            return ("det",)
        if len(nu) == 1:
            return ("rot", nu[0])
        raise ValueError(f"no O(2) label {nu}")
    if n == 3:
        if len(nu) <= 1:
            m = part(nu, 1)
            return ("o3", m, (-1) ** m)
        if nu == (1, 1):
            return ("o3", 1, 1)
        raise ValueError(f"O(3) label {nu} not implemented")
    raise ValueError(f"O({n}) oracle not implemented")


def o_dim(irrep, n: int) -> int:
    if n == 1:
        return 1
    if n == 2:
        return 2 if irrep[0] == "rot" else 1
    if n == 3:
        return 2 * irrep[1] + 1
    raise ValueError


def o_restrict_step(irrep, n: int) -> Counter:
    """Branching O(n) -> O(n-1) for n in {2, 3}, by character theory."""
    out: Counter = Counter()
    if n == 2:
        # O(2) -> O(1) = {1, reflection}
        if irrep == ("triv",):
            out[("triv",)] += 1
        elif irrep == ("det",):
            out[("det",)] += 1
        else:
            out[("triv",)] += 1
            out[("det",)] += 1
        return out
    if n == 3:
        # O(3) = SO(3) x {+-1} -> O(2): weights +-k once each, the zero
        # weight line transforms by eps*(-1)^l under the reflection
        _, l, eps = irrep
        for k in range(1, l + 1):
            out[("rot", k)] += 1
        out[("triv",) if eps * (-1) ** l == 1 else ("det",)] += 1
        return out
    raise ValueError(f"O({n}) -> O({n-1}) not implemented")


def o_branching_mult(lam_label, n: int, r: int, target_label) -> int:
    """Multiplicity of target in the restriction O(n) -> O(n-r), iterating
    one-step branching (exact for n <= 3)."""
    current: Counter = Counter({lam_label: 1})
    for step in range(r):
        nxt: Counter = Counter()
        for ir, m in current.items():
            for ir2, m2 in o_restrict_step(ir, n - step).items():
                nxt[ir2] += m * m2
        current = nxt
    return current.get(target_label, 0)


def restrict_O_oracle_mult(lam: Partition, ctx: BoxContext, r: int, alpha: Partition) -> int:
    """Multiplicity of the O(p) x O(q-r) K-type attached to alpha in the
    restriction of the one attached to lam (character route, q <= 3)."""
    p, q = ctx.p, ctx.q
    if folded_o_label(lam, p) != folded_o_label(alpha, p):
        return 0
    big = folded_o_label(conjugate(lam), q)
    small = folded_o_label(conjugate(alpha), q - r)
    return o_branching_mult(big, q, r, small)
