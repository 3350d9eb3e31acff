"""
Domain layer containing the labeling toolkit's core logic.

Submodules:
- graph: Graph builders, pendant augmentation, exact chromatic number, edge-list files.
- labeling: Induced colours, the local antimagic predicate, colour profiles, labeling files.
- constructions: Explicit labelings (spiders, stars, pendant augmentation).
- solver: Exhaustive chi_la search, profile search, pendant-bound certificates.
- harness: Bound predictions and prediction/construction/solver cross-checks.
- utils: Instance fingerprints and record ids.
"""
