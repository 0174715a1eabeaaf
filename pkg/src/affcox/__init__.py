"""Exact computation in the affine Coxeter groups W(~A_n), n >= 2:
canonical reduced expressions, minimal coset representatives, the
rank-raising tower embedding, and the Hecke-algebra embedding."""

__version__ = "0.1.0"
