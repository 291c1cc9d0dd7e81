"""knotcycles: chain complexes, glued resolution families of singular knots,
and numerical configuration-space-integral pairings."""

__version__ = "0.1.0"
