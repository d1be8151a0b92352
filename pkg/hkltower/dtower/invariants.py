"""This module contains the residue invariants of the D-tower."""
from hkltower.exceptions import require_range
from hkltower.settings import MIN_N


def unigonal_residue(n: int) -> int:
    """Get a = (N - 2) mod 8, the rank of the D_a summand of Λ_N."""
    require_range("N", n, MIN_N)
    return (n - 2) % 8


def tau(n: int) -> int:
    """Get τ(N): 1 when N is 3 or 4 mod 8, else 2."""
    require_range("N", n, MIN_N)
    return 1 if n % 8 in (3, 4) else 2


def unigonal_is_reflective(n: int) -> bool:
    """Check whether unigonal reflections lie in the decorated group."""
    return tau(n) == 1


def orbit_count(n: int) -> int:
    """Get d, the number of classes of A_{Λ_N} up to sign: 4 for N even, 3 odd."""
    require_range("N", n, MIN_N)
    return 4 if n % 2 == 0 else 3
