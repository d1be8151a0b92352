"""This module contains the text templates of the reports."""

wall_notes = {
    "contraction": "contract the strict transform of Δ^(1)({n}) = {centers}",
    "flip": "flip with center the strict transform of {centers}",
    "movable": "Δ({n}) is movable, H_h({n}) moves in a linear system of positive "
    + "dimension; no wall list below N=15 (Gritsenko: {gritsenko})",
    "ample": "Δ({n}) is ample; no wall list below N=15 (Gritsenko: {gritsenko})",
}

check_lines = {
    "pass": "{suite}: ok ({detail})",
    "fail": "{suite}: FAILED ({detail})",
    "summary": "{passed}/{total} suites passed",
}

table_titles = {
    "rank": ("N", "d", "alpha1", "alpha2", "alpha3", "alpha4", "dim_cusp", "rank"),
    "mu": ("N", "mu", "expected"),
    "walls": ("beta", "k", "case", "centers"),
    "tower": ("stratum", "kind", "M", "dim", "t"),
    "audit": ("stratum", "t", "lambda", "remainder", "passes"),
}
