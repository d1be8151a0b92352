"""Package for exact even lattice arithmetic."""
