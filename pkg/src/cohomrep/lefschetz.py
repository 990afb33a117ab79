"""Verdict engine for restriction / cup-product injectivity queries.

Every answer cites a theorem or conjecture anchor from a closed table and
records the instantiated inequality.  Statuses: "guaranteed" (all
hypotheses of a theorem hold), "fails-criterion" (an if-and-only-if
criterion evaluates false), "conjectured" (only a conjecture covers the
query; its criterion value is reported but never upgraded), and
"not-covered" (outside every statement).  Conjecture-backed rows are never
"guaranteed".
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .partitions import (
    BoxContext,
    Partition,
    as_partition,
    complement,
    inscribes,
    is_compatible,
    ortho_classify,
    subtract_rows,
)

GUARANTEED = "guaranteed"
CONJECTURED = "conjectured"
NOT_COVERED = "not-covered"
FAILS = "fails-criterion"

#: closed citation table: anchor -> statement summary
CITATIONS = {
    "Thm upq": "U(p,q), p,q>=2: virtual restriction to U(p,q-1) x U(p-1,q) injective for k < p+q-1",
    "Thm upq.2": "U(p,q): cup with the U(p,q-1) class injective for k < q-p-1 (resp. U(p-1,q), k < p-q-1)",
    "Thm opq": "O(p,q), p,q>=3: virtual restriction to O(p,q-1) x O(p-1,q) injective for k <= p+q-4",
    "Thm opq.2": "O(p,q): cup with the O(p,q-1) class injective for k <= (q-p-3)/2 (resp. (p-q-3)/2)",
    "Thm o2n": "O(2,n), n>=3: virtual restriction to O(2,n-1) injective for k <= n-1",
    "Thm o2n.2": "O(2,n): cup with the hyperplane class injective for k <= [n/2]-2",
    "Thm u&o": "O(p,q) inside U(p,q), p,q>=3: restriction injective on H^{k,0} for k <= p+q-3",
    "Thm u&o2": "O(2,n) inside U(2,n), n>=3: restriction injective on H^{k,0} for k <= [n/2]",
    "Thm analogue": "U(p,q) -> U(p,q-r): component (lam,mu) restricts injectively iff (r^p) fits in mu/lam",
    "Thm anaO": "O(p,q) -> O(p,q-r): component (i^p) restricts injectively for i <= (q-r-2)/2, p+q-r-2i >= 5",
    "Thm anaUO": "U(p,q) -> O(p,q): component (i^p) restricts injectively for i <= (q-2)/2, p+q-2i >= 5",
    "Thm anaO-L2": "isotropic variant of Thm anaO on L2/cuspidal cohomology",
    "Thm anaU-L2": "isotropic U(p,q) -> U(p,q-r): components ((i^p),((q-j)^p)), i+j <= q-r-2, on L2 cohomology",
    "Thm anaUO-L2": "isotropic variant of Thm anaUO on L2/cuspidal cohomology",
    "Thm cupO": "O(p,q): classes in components (k^p), (l^p) cup nontrivially into ((k+l)^p) for k+l <= (q-2)/2, p+q-2(k+l) >= 5",
    "Thm cup-u": "U(p,q): two classes of degrees k+l <= q+p-1 admit a nonzero translated cup product",
    "Thm cup-o": "O(p,q), p,q>=2: two classes of degrees k+l <= q+p-3 admit a nonzero translated cup product",
    "Thm cup-class-O": "O(p,q+r) over O(p,q), p,q>=2: cup with the cycle class injective for k <= min(p+q+r-rp-3, (q-pr)/2-1)",
    "Thm cohom l2": "cup with the cycle class is an isomorphism onto the L2 cohomology for k < (q+pr-1)/2",
    "Thm symbmodul": "O-modular symbol: q >= r+2 and p+q-r >= 5 give a nonzero strongly primitive projection in H^{(r^p)}",
    "Thm symbmodulU": "U-modular symbol: q >= r+2 gives a nonzero strongly primitive projection in H^{(r^p),(q^p)}",
    "Rmk component-opq": "O(p,q): a class of degree <= p+q-4 lives in the components A((i^p)) or A((q^j))",
    "Conj conjl2": "cup with the cycle class on the (lam,mu) component injective iff (r^p) fits in mu/lam (L2, U)",
    "Conj conjl2O": "cup with the cycle class on the lam component injective iff (r^p) fits in complement(lam)/lam (L2, O)",
    "Conj conj2": "U(p,q+r) over U(p,q): cup with the cycle class on components iff (r^p) fits in mu/lam",
    "Conj C100": "O(p,q+r) over O(p,q): cup with the cycle class on the lam component iff (r^p) fits in complement(lam)/lam",
    "Conj CU1": "restriction U -> U on a general component (lam,mu) iff (r^p) fits in mu/lam",
    "Conj CU2": "restriction O -> O on a general component lam iff (r^p) fits in complement(lam)/lam",
    "Conj CUO": "restriction U -> O on a general component: zero unless lam = 0 or mu full; then iff lam orthogonal",
    "Conj CP1": "tensor product of general components governed by an inscribed partition nu",
    "Conj CanaO": "arithmetic restriction O -> O on a general component iff (r^p) fits in complement(lam)/lam",
    "Conj CanaUO": "arithmetic restriction U -> O on general components; lam = 0 or mu full, then iff lam orthogonal",
    "Conj cup-hyp": "O(1,n): two classes of degrees k+l <= n/2 admit a nonzero translated cup product",
    "Conj isolautomU": "every cohomological module of U(p,q) is isolated in the automorphic dual",
    "Conj isolautomO": "the modules A((1^i)), i <= q/2-1, of O(p,q) are isolated in the automorphic dual",
}


@dataclass(frozen=True)
class Verdict:
    status: str
    anchor: str
    threshold: str
    target_component: Optional[object] = None
    qualifier: Optional[str] = None
    criterion_value: Optional[bool] = None  # for iff-criteria and conjectures

    def __post_init__(self):
        assert self.anchor in CITATIONS or self.status == NOT_COVERED, self.anchor
        assert self.status in (GUARANTEED, CONJECTURED, NOT_COVERED, FAILS)

    @property
    def citation(self) -> str:
        return CITATIONS.get(self.anchor, "")


@dataclass(frozen=True)
class Group:
    kind: str  # "U" | "O"
    p: int
    q: int

    def __str__(self):
        return f"{self.kind}({self.p},{self.q})"


def parse_group(text: str) -> Group:
    kind, rest = text.split(":")
    p, q = (int(v) for v in rest.split(","))
    if kind not in ("U", "O"):
        raise ValueError(f"unknown group kind {kind!r}")
    return Group(kind, p, q)


def _hyperplane_pair(G: Group, H) -> bool:
    """H is the standard hyperplane pair (G.kind, p, q-1) & (G.kind, p-1, q),
    or None meaning 'use the standard pair'."""
    if H is None:
        return True
    if isinstance(H, (tuple, list)) and len(H) == 2:
        a, b = H
        return {(a.kind, a.p, a.q), (b.kind, b.p, b.q)} == {(G.kind, G.p, G.q - 1), (G.kind, G.p - 1, G.q)}
    return False


def restriction_verdict(G: Group, H=None, degree: Optional[int] = None,
                        component=None, r: Optional[int] = None,
                        l2: bool = False) -> Verdict:
    """Restriction queries.

    Degree queries: H the standard hyperplane pair (U or O), the single
    hyperplane for O(2,n), or O(p,q) inside U(p,q).  Component queries:
    U(p,q) -> U(p,q-r) with component (lam, mu); O(p,q) -> O(p,q-r) or
    U(p,q) -> O(p,q) with component lam.  With l2=True the isotropic
    variants answer, qualified as L2/cuspidal cohomology.
    """
    p, q = G.p, G.q
    if degree is not None and component is None:
        k = degree
        if _hyperplane_pair(G, H):
            if G.kind == "U" and p >= 2 and q >= 2:
                ok = k < p + q - 1
                return Verdict(GUARANTEED if ok else NOT_COVERED, "Thm upq",
                               f"k < p+q-1: {k} < {p + q - 1}")
            if G.kind == "O" and p >= 3 and q >= 3:
                ok = k <= p + q - 4
                return Verdict(GUARANTEED if ok else NOT_COVERED, "Thm opq",
                               f"k <= p+q-4: {k} <= {p + q - 4}")
        if G.kind == "O" and min(p, q) == 2 and max(p, q) >= 3 and _single_hyperplane(G, H):
            n = max(p, q)
            ok = k <= n - 1
            return Verdict(GUARANTEED if ok else NOT_COVERED, "Thm o2n",
                           f"k <= n-1: {k} <= {n - 1}")
        if G.kind == "U" and isinstance(H, Group) and (H.kind, H.p, H.q) == ("O", p, q):
            if min(p, q) >= 3:
                ok = k <= p + q - 3
                return Verdict(GUARANTEED if ok else NOT_COVERED, "Thm u&o",
                               f"k <= p+q-3: {k} <= {p + q - 3}",
                               qualifier="holomorphic part H^{k,0}")
            if min(p, q) == 2 and max(p, q) >= 3:
                n = max(p, q)
                ok = k <= n // 2
                return Verdict(GUARANTEED if ok else NOT_COVERED, "Thm u&o2",
                               f"k <= [n/2]: {k} <= {n // 2}",
                               qualifier="holomorphic part H^{k,0}")
        return Verdict(NOT_COVERED, "Thm upq" if G.kind == "U" else "Thm opq",
                       "no theorem covers this degree query")
    # component queries
    if component is None:
        raise ValueError("need a degree or a component")
    if G.kind == "U" and isinstance(H, Group) and H.kind == "U":
        rr = q - H.q if r is None else r
        if rr < 0:
            raise ValueError("subgroup larger than the group")
        lam, mu = (as_partition(component[0]), as_partition(component[1]))
        ok = inscribes(rr, lam, mu, p)
        target = (lam, subtract_rows(mu, rr, p)) if ok else None
        if not l2:
            return Verdict(GUARANTEED if ok else FAILS, "Thm analogue",
                           f"(r^p) = ({rr}^{p}) fits in mu/lam: {ok}",
                           target_component=target, criterion_value=ok)
        if _is_ladder_pair(lam, mu, p, q) and _ladder_l2_range(lam, mu, p, q, rr):
            return Verdict(GUARANTEED if ok else FAILS, "Thm anaU-L2",
                           f"(r^p) = ({rr}^{p}) fits in mu/lam: {ok}",
                           target_component=target, criterion_value=ok,
                           qualifier="L2 cohomology")
        return Verdict(CONJECTURED, "Conj CU1", f"criterion (r^p) fits: {ok}",
                       target_component=target, criterion_value=ok,
                       qualifier="L2 cohomology")
    if G.kind == "O" and isinstance(H, Group) and H.kind == "O" and H.p == p:
        rr = q - H.q if r is None else r
        if rr < 0:
            raise ValueError("subgroup larger than the group")
        lam = as_partition(component)
        orth = ortho_classify(lam, BoxContext(p, q))
        if orth is None:
            raise ValueError(f"{lam} is not orthogonal in {p}x{q}")
        ok = inscribes(rr, lam, complement(lam, p, q), p)
        if _is_ip_column(lam, p):
            i = lam[0] if lam else 0
            hyp = 2 * i <= q - rr - 2 and p + q - rr - 2 * i >= 5 and p >= 2 and q >= 2
            anchor = "Thm anaO-L2" if l2 else "Thm anaO"
            if hyp:
                return Verdict(GUARANTEED, anchor,
                               f"i <= (q-r-2)/2: {i} <= {(q - rr - 2) / 2}; p+q-r-2i = {p + q - rr - 2 * i} >= 5",
                               target_component=lam,
                               qualifier="L2 cohomology" if l2 else None)
            return Verdict(CONJECTURED, "Conj CanaO",
                           f"outside the proven range; criterion (r^p) fits: {ok}",
                           target_component=lam if ok else None, criterion_value=ok)
        return Verdict(CONJECTURED, "Conj CanaO", f"criterion (r^p) fits: {ok}",
                       target_component=lam if ok else None, criterion_value=ok)
    if G.kind == "U" and isinstance(H, Group) and (H.kind, H.p, H.q) == ("O", p, q):
        if component and isinstance(component[0], (tuple, list)):
            lam, mu = as_partition(component[0]), as_partition(component[1])
            if lam != () and mu != as_partition((q,) * p):
                return Verdict(CONJECTURED, "Conj CanaUO",
                               "criterion lam = 0 or mu full: False", criterion_value=False)
            lam = lam if mu == as_partition((q,) * p) else complement(mu, p, q)
        else:
            lam = as_partition(component)
        if _is_ip_column(lam, p):
            i = lam[0] if lam else 0
            hyp = 2 * i <= q - 2 and p + q - 2 * i >= 5 and p >= 2 and q >= 2
            anchor = "Thm anaUO-L2" if l2 else "Thm anaUO"
            if hyp:
                return Verdict(GUARANTEED, anchor,
                               f"i <= (q-2)/2: {i} <= {(q - 2) / 2}; p+q-2i = {p + q - 2 * i} >= 5",
                               target_component=lam,
                               qualifier="L2 cohomology" if l2 else None)
        is_orth = ortho_classify(lam, BoxContext(p, q)) is not None
        return Verdict(CONJECTURED, "Conj CanaUO",
                       f"criterion lam orthogonal: {is_orth}", criterion_value=is_orth)
    return Verdict(NOT_COVERED, "Thm analogue", "no statement covers this component query")


def _single_hyperplane(G: Group, H) -> bool:
    if H is None:
        return True
    if isinstance(H, Group) and H.kind == G.kind:
        n = max(G.p, G.q)
        return {H.p, H.q} == {2, n - 1}
    return False


def _is_ladder_pair(lam, mu, p, q) -> bool:
    """(lam, mu) = ((i^p), ((q-j)^p)) for some i, j (empty = i or j extreme)."""
    return _is_ip_column(as_partition(lam), p) and _is_ip_column(as_partition(mu), p)


def _ladder_l2_range(lam, mu, p, q, r) -> bool:
    i = lam[0] if lam else 0
    j = q - (mu[0] if mu else 0)
    return i + j <= q - r - 2


def _is_ip_column(lam: Partition, p: int) -> bool:
    """lam = (i^p) for some i >= 0 (the empty partition counts as i = 0)."""
    lam = as_partition(lam)
    return lam == () or (len(lam) == p and all(v == lam[0] for v in lam))


def cup_verdict(G: Group, H=None, degree: Optional[int] = None,
                component=None, r: Optional[int] = None,
                l2: bool = False) -> Verdict:
    """Cup product with the cycle class of H inside G, in degree k of H's
    cohomology, or on a named component (conjectural in general)."""
    p, q = G.p, G.q
    if degree is not None and component is None:
        k = degree
        if G.kind == "U" and isinstance(H, Group) and H.kind == "U":
            if (H.p, H.q) == (p, q - 1):
                ok = k < q - p - 1
                return Verdict(GUARANTEED if ok else NOT_COVERED, "Thm upq.2",
                               f"k < q-p-1: {k} < {q - p - 1}; image degree k+2p = {k + 2 * p}")
            if (H.p, H.q) == (p - 1, q):
                ok = k < p - q - 1
                return Verdict(GUARANTEED if ok else NOT_COVERED, "Thm upq.2",
                               f"k < p-q-1: {k} < {p - q - 1}; image degree k+2q = {k + 2 * q}")
            if H.p == p and H.q < q - 1:
                rr = q - H.q
                return Verdict(CONJECTURED, "Conj conj2",
                               f"r = {rr}; conjectural for components; no degree theorem",
                               criterion_value=None)
        if G.kind == "O" and isinstance(H, Group) and H.kind == "O":
            if min(p, q) == 2 and max(p, q) >= 3 and {H.p, H.q} == {2, max(p, q) - 1}:
                n = max(p, q)
                ok = k <= n // 2 - 2
                return Verdict(GUARANTEED if ok else NOT_COVERED, "Thm o2n.2",
                               f"k <= [n/2]-2: {k} <= {n // 2 - 2}; image degree k+2 = {k + 2}")
            if p >= 3 and q >= 3 and (H.p, H.q) == (p, q - 1):
                ok = 2 * k <= q - p - 3
                return Verdict(GUARANTEED if ok else NOT_COVERED, "Thm opq.2",
                               f"k <= (q-p-3)/2: {k} <= {(q - p - 3) / 2}; image degree k+p = {k + p}")
            if p >= 3 and q >= 3 and (H.p, H.q) == (p - 1, q):
                ok = 2 * k <= p - q - 3
                return Verdict(GUARANTEED if ok else NOT_COVERED, "Thm opq.2",
                               f"k <= (p-q-3)/2: {k} <= {(p - q - 3) / 2}; image degree k+q = {k + q}")
            if H.p == p and H.q < q and p >= 2 and H.q >= 2:
                rr = q - H.q
                bound = min(p + H.q + rr - rr * p - 3, (H.q - p * rr) / 2 - 1)
                ok = k <= bound
                return Verdict(GUARANTEED if ok else NOT_COVERED, "Thm cup-class-O",
                               f"k <= min(p+q+r-rp-3, (q-pr)/2-1) = {bound}; image degree k+rp = {k + rr * p}")
        return Verdict(NOT_COVERED, "Thm upq.2" if G.kind == "U" else "Thm opq.2",
                       "no theorem covers this cup query")
    if component is None:
        raise ValueError("need a degree or a component")
    if G.kind == "O":
        lam = as_partition(component)
        rr = r if r is not None else (q - H.q if isinstance(H, Group) else None)
        if rr is None:
            raise ValueError("need r for component cup queries")
        qq = H.q if isinstance(H, Group) else q - rr
        ok = (ortho_classify(lam, BoxContext(p, qq)) is not None
              and inscribes(rr, lam, complement(lam, p, qq), p))
        anchor = "Conj conjl2O" if l2 else "Conj C100"
        return Verdict(CONJECTURED, anchor, f"criterion (r^p) fits in complement(lam)/lam: {ok}",
                       target_component=_lam_plus_rp(lam, rr, p) if ok else None,
                       criterion_value=ok, qualifier="L2 cohomology" if l2 else None)
    lam, mu = as_partition(component[0]), as_partition(component[1])
    rr = r if r is not None else (q - H.q if isinstance(H, Group) else None)
    qq = H.q if isinstance(H, Group) else q - rr
    ok = is_compatible(lam, mu, BoxContext(p, qq)) and inscribes(rr, lam, mu, p)
    anchor = "Conj conjl2" if l2 else "Conj conj2"
    return Verdict(CONJECTURED, anchor, f"criterion (r^p) fits in mu/lam: {ok}",
                   target_component=(_lam_plus_rp(lam, rr, p), mu) if ok else None,
                   criterion_value=ok, qualifier="L2 cohomology" if l2 else None)


def _lam_plus_rp(lam: Partition, r: int, p: int) -> Partition:
    from .partitions import pad
    return as_partition(tuple(v + r for v in pad(lam, p)))


def cup_classes_verdict(G: Group, k: int, l: int, components=None) -> Verdict:
    """Nonvanishing of a translated cup product of two classes of degrees
    k and l (optionally in named ladder components (k'^p), (l'^p))."""
    p, q = G.p, G.q
    if components is not None and G.kind == "O":
        a, b = (as_partition(components[0]), as_partition(components[1]))
        if _is_ip_column(a, p) and _is_ip_column(b, p):
            kk = a[0] if a else 0
            ll = b[0] if b else 0
            hyp = 2 * (kk + ll) <= q - 2 and p + q - 2 * (kk + ll) >= 5 and p >= 2 and q >= 2
            if hyp:
                return Verdict(GUARANTEED, "Thm cupO",
                               f"k+l <= (q-2)/2: {kk + ll} <= {(q - 2) / 2}; p+q-2(k+l) = {p + q - 2 * (kk + ll)} >= 5",
                               target_component=as_partition(((kk + ll),) * p))
            return Verdict(NOT_COVERED, "Thm cupO", "outside the proven component range")
    if G.kind == "U":
        ok = k + l <= q + p - 1
        return Verdict(GUARANTEED if ok else NOT_COVERED, "Thm cup-u",
                       f"k+l <= q+p-1: {k + l} <= {q + p - 1}")
    if min(p, q) == 1:
        ok = 2 * (k + l) <= max(p, q)
        return Verdict(CONJECTURED, "Conj cup-hyp", f"criterion k+l <= n/2: {ok}",
                       criterion_value=ok)
    ok = k + l <= q + p - 3
    return Verdict(GUARANTEED if ok else NOT_COVERED, "Thm cup-o",
                   f"k+l <= q+p-3: {k + l} <= {q + p - 3}")


def theta_rank_condition(kind: str, p: int, q: int, r: int) -> bool:
    """Rank condition for the nonvanishing of the cycle class of X_{p,q}
    inside the L2 cohomology of the X_{p,q+r}-quotient: q >= r, i.e. the
    subspace has at least half the dimension."""
    if kind not in ("U", "O"):
        raise ValueError(f"unknown kind {kind!r}")
    if r < 0:
        raise ValueError("r must be >= 0")
    return q >= r


@dataclass(frozen=True)
class L2CupThresholds:
    p: int
    q: int
    r: int
    iso_max_degree: Optional[int]  # largest k with an isomorphism, target degree
    iso_range: str
    middle_injective: Optional[int]  # p = 1, q+r even: extra injective degree
    anchor: str = "Thm cohom l2"


def l2_cup_threshold(p: int, q: int, r: int) -> L2CupThresholds:
    """Cup product with the cycle class into the L2 cohomology of the
    ambient quotient: isomorphism in target degrees k < (q + pr - 1)/2;
    for p = 1 and q + r even it stays injective in the middle degree
    (q+r)/2.  r = 0 degenerates to the identity map."""
    if r == 0:
        return L2CupThresholds(p, q, 0, None, "identity map (r = 0)", None)
    bound2 = q + p * r - 1  # twice the threshold
    iso_max = (bound2 + 1) // 2 - 1  # largest integer strictly below bound2/2
    middle = (q + r) // 2 if (p == 1 and (q + r) % 2 == 0) else None
    return L2CupThresholds(p, q, r, iso_max, f"k < (q+pr-1)/2 = {bound2}/2", middle)


def modular_symbol_verdict(kind: str, p: int, q: int, r: int) -> Verdict:
    """Nontriviality of the modular-symbol class of the (p,q)-subgroup in
    the (p,q+r)-group, and of its strongly primitive projection."""
    if kind == "O":
        ok = q >= r + 2 and p + q - r >= 5 and p >= 2 and q >= 2
        target = as_partition((r,) * p)
        return Verdict(GUARANTEED if ok else NOT_COVERED, "Thm symbmodul",
                       f"q >= r+2: {q} >= {r + 2}; p+q-r = {p + q - r} >= 5",
                       target_component=target if ok else None)
    if kind == "U":
        ok = q >= r + 2 and p >= 2 and q >= 2
        target = (as_partition((r,) * p), as_partition((q,) * p))
        return Verdict(GUARANTEED if ok else NOT_COVERED, "Thm symbmodulU",
                       f"q >= r+2: {q} >= {r + 2}",
                       target_component=target if ok else None)
    raise ValueError(f"unknown kind {kind!r}")


def component_constraint(kind: str, p: int, q: int, k: int) -> dict:
    """Component families that can carry a class of degree k for O(p,q):
    below p+q-4 only the ladder families (i^p) and (q^j) occur."""
    if kind != "O":
        return {"constrained": False, "note": "only stated for O"}
    if k == 0:
        return {"constrained": True, "families": [["trivial"]], "anchor": "Rmk component-opq"}
    if k <= p + q - 4:
        return {
            "constrained": True,
            "families": [[f"(i^{p})", "i ranges over column ladders"],
                         [f"({q}^j)", "j ranges over row ladders"]],
            "anchor": "Rmk component-opq",
        }
    return {"constrained": False, "note": f"degree {k} > p+q-4 = {p + q - 4}"}
