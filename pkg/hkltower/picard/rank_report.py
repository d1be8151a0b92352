"""This module contains the RankReport class."""
import sympy

from hkltower.dict_structures.rank_report_dict import RankReportDict
from hkltower.rationals import format_rational


class RankReport:
    """RankReport class.

    The terms of the dimension formula for the cusp forms attached to Λ_N and
    the Picard rank they give.

    Attributes
    ----------
    n: int
        N
    d: int
        The number of elements of A_{Λ_N} up to sign
    alphas: tuple[sympy.Rational, ...]
        α₁, α₂, α₃, α₄
    dim_cusp: int
        The dimension of the space of cusp forms
    closed_form_rank: int
        The rank from the closed forms in N
    """

    def __init__(
        self,
        n: int,
        d: int,
        alphas: tuple[sympy.Rational, ...],
        dim_cusp: int,
        closed_form_rank: int,
    ) -> None:
        """Store the terms of the formula."""
        self.n = n
        self.d = d
        self.alphas = tuple(alphas)
        self.dim_cusp = dim_cusp
        self.closed_form_rank = closed_form_rank

    @property
    def rank(self) -> int:
        """Get the Picard rank, dim S + 1."""
        return self.dim_cusp + 1

    @property
    def matches(self) -> bool:
        """Check the rank against the closed form."""
        return self.rank == self.closed_form_rank

    def to_dict(self) -> RankReportDict:
        """Serialize with "p/q" alphas."""
        alpha1, alpha2, alpha3, alpha4 = (format_rational(a) for a in self.alphas)
        return {
            "N": self.n,
            "d": self.d,
            "alpha1": alpha1,
            "alpha2": alpha2,
            "alpha3": alpha3,
            "alpha4": alpha4,
            "dim_cusp": self.dim_cusp,
            "rank": self.rank,
            "closed_form_rank": self.closed_form_rank,
        }
