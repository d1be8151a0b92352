"""Package for the divisor class calculus on the D-tower."""
