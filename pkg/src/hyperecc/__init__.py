"""hyperecc: eccentricity, center and distance approximation for hyperbolic graphs.

Fast linear-time estimates (furthest-point scans, eccentricity-approximating
BFS trees, the single-tree all-pairs distance sweep) next to the brute-force
oracles (all-pairs BFS, four-point hyperbolicity) that check every additive
bound they promise.
"""

__version__ = "1.0.0"
