"""f4desc: exact bookkeeping for F4 roots, unipotent orbits, tori and descent constructions.

f4desc enumerates the F4 root system and its Weyl group, realizes the Chevalley
group in the adjoint representation over Q, tabulates the unipotent orbits with
their gradings and attached tori, and checks the torus-level and dimension-level
consequences of descent constructions, including replay of root-exchange chains.
"""

__version__ = "0.1.0"
