"""Stepping-up constructions for hypergraph colorings, with verification oracles.

Modules:
    deltas      bit-difference calculus on increasing integer chains
    structures  explicit/implicit colorings and hypergraphs
    stepup      the 4-uniform and k-uniform stepping-up colorings
    rogers      the local-extrema edge rule and its tower driver
    halfgraph   half-graph-free colorings and the first-moment estimate
    tourney     tournaments, transforms, explicit generators
    oracle      exact branch-and-bound and seeded sampling engines
    formats     KGC/HGR/TRN/DSC/CERT text formats
    cli         command-line surface
"""

__version__ = "0.1.0"
