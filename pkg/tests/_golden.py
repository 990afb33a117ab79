"""Shared replay helper for the golden verdict table."""

from cohomrep import lefschetz as lef


def replay(case: dict) -> lef.Verdict:
    c = dict(case)
    fn = c.pop("fn")
    if fn in ("restriction", "cup"):
        G = lef.parse_group(c.pop("G"))
        H = c.pop("H", None)
        H = lef.parse_group(H) if H else None
        comp = c.pop("component", None)
        if comp is not None:
            comp = tuple(tuple(x) for x in comp) if comp and isinstance(comp[0], list) else tuple(comp)
        f = lef.restriction_verdict if fn == "restriction" else lef.cup_verdict
        return f(G, H, degree=c.pop("degree", None), component=comp, **c)
    if fn == "classes":
        G = lef.parse_group(c.pop("G"))
        comps = c.pop("components", None)
        if comps is not None:
            comps = (tuple(comps[0]), tuple(comps[1]))
        return lef.cup_classes_verdict(G, c.pop("k"), c.pop("l"), components=comps)
    if fn == "modular":
        return lef.modular_symbol_verdict(c.pop("kind"), c.pop("p"), c.pop("q"), c.pop("r"))
    raise ValueError(fn)
