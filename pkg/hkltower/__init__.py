"""Package for hkltower, exact lattice arithmetic for the D-tower.

The package computes the Picard ranks, Heegner divisor relations, pullback
formulas and predicted variation of models of the locally symmetric varieties
attached to the lattices U + U + D_(N-2).
"""
