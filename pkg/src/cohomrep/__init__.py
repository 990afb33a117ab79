"""Cohomological representations of U(p,q) and O(p,q): Young-diagram
catalogs, isolation and Lefschetz-injectivity verdicts with citations,
branching rules with independent character oracles, and the numerical
geometry of the symmetric space X_{p,q+r}."""

__version__ = "0.1.0"
