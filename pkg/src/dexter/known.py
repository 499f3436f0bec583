"""Frozen reference values.

Sequences and series expansions published alongside the dexter order, plus
values computed once by an independent method and kept as regression data.
Series are stored as ``{(s_exponent, t_exponent): coefficient}``.
"""

INTERVAL_COUNTS = (1, 1, 3, 12, 56, 288, 1584, 9152)
MOTZKIN = (1, 1, 2, 4, 9, 21, 51, 127, 323)  # n = 1..9
M2_GENERATORS = {2: 3, 3: 3, 4: 11, 5: 51, 6: 267, 7: 1507}
F_SIZES = (2, 5, 12, 28, 64, 144, 320, 704)  # n = 1..8
ZETA_AT_MINUS_ONE = (1, -1, 2, -5, 14, -42)  # n = 1..6
ZETA_AT_MINUS_TWO = (1, -2, 7, -29, 131, -625)

F_A = {
    (0, 0): 1, (1, 1): 1, (2, 2): 2, (1, 2): 1,
    (3, 3): 5, (2, 3): 5, (1, 3): 2,
    (4, 4): 14, (3, 4): 21, (2, 4): 15, (1, 4): 6,
}
F_R = {
    (0, 0): 1, (1, 1): 1, (2, 2): 2,
    (3, 3): 5, (2, 3): 3,
    (4, 4): 14, (3, 4): 16, (2, 4): 8,
}
F_C = {
    (2, 2): 2,
    (3, 3): 1, (2, 3): 1,
    (4, 4): 2, (3, 4): 3, (2, 4): 3,
}

# (path, poset size, cyclotomic exponents) for the interval below the path
COXETER_UPPER_EXAMPLES = (
    ("101100", 9, {1: 2, 2: 1, 3: 1, 5: 1}),
    ("110010", 9, {1: 2, 2: 1, 3: 1, 5: 1}),
    ("11011000", 27, {2: 1, 4: 1, 18: 1, 54: 1}),
    ("11101000", 27, {2: 1, 4: 1, 18: 1, 54: 1}),
    ("10111000", 20, {1: 2, 2: 2, 3: 1, 5: 1, 6: 2, 7: 1}),
    ("11001100", 20, {1: 2, 2: 2, 3: 1, 5: 1, 6: 2, 7: 1}),
)
COXETER_F5 = {1: 2, 2: 4, 6: 4, 7: 1, 23: 2}

OFF_CIRCLE_EXAMPLE = "11111001000100"
NOT_SEMIDISTRIBUTIVE_EXAMPLE = "111100100100"

RHO_EXAMPLES = (("1110010010", (1, 2, 0)),)
RHO_INV_EXAMPLES = (((1, 0, 2), "1101100010"),)
