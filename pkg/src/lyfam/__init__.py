"""Exact-arithmetic toolkit for bracket structures with semigroup-indexed
operator families: axiom checkers, constructions, and the associated
cohomology and deformation theory."""

__version__ = "0.1.0"
