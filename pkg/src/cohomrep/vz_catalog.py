"""Catalogs of cohomological modules.

For U(p,q) the modules A(lam, mu) are indexed by compatible pairs of
partitions in the p x q box.  For O(p,q) they are indexed by orthogonal
partitions, each carrying 1, 2 or 4 sign variants: odd-parity partitions
give a single module A(lam); even ones give A(lam)_+- (type 1),
A(lam)^+- (type 2) or the four A(lam)^{+-}_{+-} (type 3).  Each O entry
also represents the unique extension of the module to the full orthogonal
group, flagged rather than listed separately.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from . import partitions as pt
from . import rootdata as rd
from .partitions import BoxContext, CapExceededError, CompatiblePair, OrthoPartition, Partition

LeviFactor = tuple[str, int, int]  # ("U", a, b) or ("O", p0, q0)


@dataclass(frozen=True)
class VZModule:
    kind: str  # "U" | "O"
    p: int
    q: int
    lam: Partition
    mu: Optional[Partition]  # U only
    sign1: Optional[int]  # O only: subscript sign
    sign2: Optional[int]  # O only: superscript sign
    degree: int
    levi: tuple[LeviFactor, ...]
    lowest_ktype: rd.Weight
    discrete_series: bool  # U: lam == mu (empty skew)
    holomorphic: bool  # U: mu == full box
    o_group_extension: bool  # O: the module extends to the disconnected group

    @property
    def label(self) -> str:
        if self.kind == "U":
            return f"A({list(self.lam)},{list(self.mu)})"
        sup = {1: "+", -1: "-"}.get(self.sign2, "")
        sub = {1: "+", -1: "-"}.get(self.sign1, "")
        deco = ""
        if sup:
            deco += f"^{sup}"
        if sub:
            deco += f"_{sub}"
        return f"A({list(self.lam)}){deco}"


def levi_of_pair(cp: CompatiblePair) -> tuple[LeviFactor, ...]:
    """Noncompact Levi factors read off the skew rectangles: one U(p_i, q_i)
    per rectangle (empty product for discrete series)."""
    return tuple(("U", a, b) for a, b in cp.rects)


def levi_of_orth(orth: OrthoPartition) -> tuple[LeviFactor, ...]:
    """O(p0, q0) from the central rectangle plus one U(a_i, b_i) per
    palindromic pair."""
    factors: list[LeviFactor] = []
    if orth.central is not None:
        factors.append(("O", orth.central[0], orth.central[1]))
    factors.extend(("U", a, b) for a, b in orth.pairs)
    return tuple(factors)


def module_from_pair(cp: CompatiblePair) -> VZModule:
    p, q = cp.ctx.p, cp.ctx.q
    return VZModule(
        kind="U", p=p, q=q, lam=cp.lam, mu=cp.mu, sign1=None, sign2=None,
        degree=rd.degree_U(cp), levi=levi_of_pair(cp),
        lowest_ktype=rd.ktype_weight_U(cp.lam, cp.mu, cp.ctx),
        discrete_series=cp.is_discrete_series,
        holomorphic=(cp.mu == pt.as_partition((q,) * p)),
        o_group_extension=False,
    )


def sign_slots(orth: OrthoPartition) -> list[tuple[Optional[int], Optional[int]]]:
    """Sign labels for the modules attached to an orthogonal partition, in
    lexicographic order with + before -.  Absent slots mean the sign carries
    no meaning for this partition."""
    if orth.parity == "odd":
        return [(None, None)]
    if orth.even_type == 1:
        return [(1, None), (-1, None)]
    if orth.even_type == 2:
        return [(None, 1), (None, -1)]
    return [(s1, s2) for s1 in (1, -1) for s2 in (1, -1)]


def modules_from_orth(orth: OrthoPartition) -> list[VZModule]:
    p, q = orth.ctx.p, orth.ctx.q
    degree = rd.degree_O(orth)
    levi = levi_of_orth(orth)
    out = []
    for s1, s2 in sign_slots(orth):
        out.append(VZModule(
            kind="O", p=p, q=q, lam=orth.lam, mu=None, sign1=s1, sign2=s2,
            degree=degree, levi=levi,
            lowest_ktype=rd.ktype_weight_O(orth, s1, s2),
            discrete_series=(orth.rect_count == 0),
            holomorphic=False,
            o_group_extension=True,
        ))
    return out


def catalog(kind: str, p: int, q: int, cap: int = pt.DEFAULT_ENUM_CAP) -> list[VZModule]:
    """Complete list of cohomological modules of U(p,q) or SO_0(p,q)."""
    ctx = BoxContext(p, q)
    if p * q > cap:
        raise CapExceededError("catalog box area p*q", p * q, cap)
    if kind == "U":
        return [module_from_pair(cp) for cp in pt.enumerate_compatible(ctx, cap)]
    if kind == "O":
        out = []
        for orth in pt.enumerate_orthogonal(ctx, cap):
            out.extend(modules_from_orth(orth))
        return out
    raise ValueError(f"unknown kind {kind!r}")


def holomorphic_param(r: int, s: int, p: int, q: int) -> VZModule:
    """The holomorphic module A(lam, p x q) with lam = (q^r, s^(p-r));
    its degree is rq + s(p - r)."""
    if not (0 <= r <= p and 0 <= s <= q):
        raise ValueError("need 0 <= r <= p and 0 <= s <= q")
    lam = pt.as_partition((q,) * r + (s,) * (p - r))
    mu = pt.as_partition((q,) * p)
    cp = pt.compatible_pair(lam, mu, BoxContext(p, q))
    assert cp is not None
    mod = module_from_pair(cp)
    assert mod.degree == rd.holomorphic_degree(r, s, p, q)
    return mod


def primitive_degree_histogram(kind: str, p: int, q: int, cap: int = pt.DEFAULT_ENUM_CAP) -> dict[int, int]:
    hist: dict[int, int] = {}
    for mod in catalog(kind, p, q, cap):
        hist[mod.degree] = hist.get(mod.degree, 0) + 1
    return dict(sorted(hist.items()))


# ---------------------------------------------------------------------------
# independent count of the O catalog: distinct nilradical intersections
# u cap p realized by dominant torus elements on a small level grid


def brute_count_O(p: int, q: int) -> int:
    """Number of distinct u cap p over dominant X, counted from the actual
    eigenvector sets; independent of the partition/sign classification."""
    r, s = p // 2, q // 2
    levels = range(0, r + s + 1)
    from itertools import product

    def x_ranges():
        if r == 0:
            yield ()
            return
        for head in product(levels, repeat=r - 1):
            if any(head[i] < head[i + 1] for i in range(len(head) - 1)):
                continue
            last_opts = levels if p % 2 == 1 else range(-(r + s), r + s + 1)
            for last in last_opts:
                if head and abs(last) > head[-1]:
                    continue
                yield head + (last,)

    def y_ranges():
        if s == 0:
            yield ()
            return
        for tail in product(levels, repeat=s - 1):
            if any(tail[i] > tail[i + 1] for i in range(len(tail) - 1)):
                continue
            first_opts = levels if q % 2 == 1 else range(-(r + s), r + s + 1)
            for first in first_opts:
                if tail and abs(first) > tail[0]:
                    continue
                yield (first,) + tail

    # eigenvectors of the torus on p = E (x) F^*: label by (E-basis id, F-basis id)
    e_ids = [("e", a) for a in range(1, r + 1)] + [("ebar", a) for a in range(1, r + 1)]
    if p % 2 == 1:
        e_ids.append(("e0", 0))
    f_ids = [("f", b) for b in range(1, s + 1)] + [("fbar", b) for b in range(1, s + 1)]
    if q % 2 == 1:
        f_ids.append(("f0", 0))

    def e_weight(eid, xs):
        tag, a = eid
        if tag == "e":
            return xs[a - 1]
        if tag == "ebar":
            return -xs[a - 1]
        return 0

    def f_weight(fid, ys):
        tag, b = fid
        if tag == "f":
            return ys[b - 1]
        if tag == "fbar":
            return -ys[b - 1]
        return 0

    seen = set()
    for xs in x_ranges():
        for ys in y_ranges():
            u = frozenset((e, f) for e in e_ids for f in f_ids if e_weight(e, xs) - f_weight(f, ys) > 0)
            seen.add(u)
    return len(seen)
