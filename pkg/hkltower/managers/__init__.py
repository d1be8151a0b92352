"""Package for hkltower managers.

These managers cache the lattice embeddings and run the self-check suites.
"""
