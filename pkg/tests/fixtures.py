"""Test fixtures and sample data for hypertope-extensions tests."""

# Dihedral group of order 10
PENTAGON_PRESENTATION = """gens 2
r0^2
r1^2
( r0 r1 )^5
"""

# Free product of two involutions
FREE_PRESENTATION = """gens 2
r0^2
r1^2
"""

# Halved labels and nested powers
HALVED_PRESENTATION = """gens 3
rt0^2
r1^2
r2^2
( rt0 r1 )^2
( rt0 r2 )^4
( r1 r2 )^4
( ( rt0 r2 ) rt0 r1 ( r2 r1 ) )^2
"""

# Unbalanced parenthesis
INVALID_PRESENTATION = """gens 2
( r0 r1 ^4
"""

# Generator r2 is not declared
OUT_OF_RANGE_PRESENTATION = """gens 2
( r0 r2 )^3
"""

# Group orders of the extensions used throughout the tests
EXTENSION_ORDERS = {
    ("polygon", 2, 2): 128,
    ("polygon", 2, 3): 288,
    ("polygon", 3, 2): 768,
    ("orthoplex", 3, 2): 3072,
    ("orthoplex", 3, 3): 10368,
    ("cube", 3, 2): 12288,
    ("icosahedron", None, 2): 491520,
}

# Sorted diagonal class sizes per base polytope
DIAGONAL_CLASS_SIZES = {
    "icosahedron": [1, 5, 5],
    "dodecahedron": [1, 3, 3, 6, 6],
    "cell24": [1, 6, 8, 8],
    "cell600": [1, 12, 12, 12, 12, 20, 20, 30],
}

# Catalogue rows: family, schlafli, vertices, alpha exponent, order
EXCEPTIONAL_ROWS = [
    ("icosahedron", (3, 5), 12, 5, 120),
    ("dodecahedron", (5, 3), 20, 5, 120),
    ("cell24", (3, 4, 3), 24, 6, 1152),
    ("cell600", (3, 3, 5), 120, 15, 14400),
    ("cell120", (5, 3, 3), 600, 15, 14400),
]
