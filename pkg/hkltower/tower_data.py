"""This module contains the reference tables of the D-tower.

The tables are fixtures that computed values are checked against; nothing in
the calculators reads them to produce a result.
"""


# rank of Pic(F(Λ_N, Õ⁺)) for N = 3..20
rank_table = {
    3: 1,
    4: 2,
    5: 1,
    6: 1,
    7: 1,
    8: 1,
    9: 1,
    10: 1,
    11: 2,
    12: 3,
    13: 2,
    14: 2,
    15: 2,
    16: 3,
    17: 2,
    18: 2,
    19: 3,
    20: 4,
}

# asserted ranks of Pic(F(N)); F(N) for N even is a quotient of the stable one
asserted_rank_f = {18: 2, 19: 3, 20: 3}

# unigonal coefficient μ(N) of the first Borcherds relation
mu_table = {
    3: 46,
    4: 1,
    5: 0,
    6: 0,
    7: 0,
    8: 0,
    9: 0,
    10: 0,
    11: 30,
    12: 1,
    13: 0,
    14: 0,
    15: 0,
    16: 0,
    17: 0,
    18: 0,
    19: 78,
    20: 33,
    21: 16,
    22: 8,
    23: 4,
    24: 2,
    25: 1,
}

# root counts of E_r, r = 2..8
e_root_counts = {2: 2, 3: 8, 4: 20, 5: 40, 6: 72, 7: 126, 8: 240}

# families of quartic K3 surfaces: pairings with (λ, H_n, H_h, H_u) on F(19)
curve_rows = {
    "Gamma1": (1, 108, 0, 0),
    "Gamma2": (1, 136, -2, 0),
    "Gamma3": (1, 264, 0, -2),
    "Gamma4": (1, 80, 2, 0),
}

# pairings of the GIT polarization λ + Δ(19) with Gamma1..Gamma4
git_curve_pairings = {"Gamma1": 1, "Gamma2": 0, "Gamma3": 0, "Gamma4": 2}

# critical β denominators of the wall prediction
wall_denominators = {
    18: (1, 2, 3, 4, 5, 6, 8),
    19: (1, 2, 3, 4, 5, 6, 7, 9),
}
