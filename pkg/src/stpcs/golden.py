"""Checked-in reference designs used by the golden tests and the
`paper-examples` subcommand.

Every array below is typed in by hand from the published worked examples
this toolchain reproduces; nothing here is generated by the package
itself, so these act as independent fixtures.
"""

from __future__ import annotations

from math import sqrt

import numpy as np

INCIDENCE_ALPHA4 = np.array(
    [
        [1, 1, 1, 0],
        [1, 1, 0, 1],
        [1, 0, 1, 1],
        [0, 1, 1, 1],
    ],
    dtype=float,
)

# Vertical expansion of INCIDENCE_ALPHA4: 7 rows, pairwise column inner
# products <= 1.
VERTICAL_ALPHA4 = np.array(
    [
        [1, 1, 1, 0],
        [1, 0, 0, 1],
        [1, 0, 0, 0],
        [0, 1, 0, 1],
        [0, 1, 0, 0],
        [0, 0, 1, 1],
        [0, 0, 1, 0],
    ],
    dtype=float,
)

# Pair-enumeration expansion for alpha = 4: 6 rows, row degree 2.
STAR_ALPHA4 = np.array(
    [
        [1, 1, 0, 0],
        [1, 0, 1, 0],
        [1, 0, 0, 1],
        [0, 1, 1, 0],
        [0, 1, 0, 1],
        [0, 0, 1, 1],
    ],
    dtype=float,
)

# 3x4 sign matrix with coherence 1/3, used as the embedding below.
EMBED_SIGNS_3X4 = np.array(
    [
        [1, 1, 1, -1],
        [1, -1, 1, 1],
        [1, 1, -1, 1],
    ],
    dtype=float,
)

# Horizontal expansion of VERTICAL_ALPHA4 by EMBED_SIGNS_3X4: the 7x16
# sensing matrix with coherence 1/3.
SENSING_7X16 = np.array(
    [
        [1, 1, 1, -1, 1, 1, 1, -1, 1, 1, 1, -1, 0, 0, 0, 0],
        [1, -1, 1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 1, 1, 1, -1],
        [1, 1, -1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0],
        [0, 0, 0, 0, 1, -1, 1, 1, 0, 0, 0, 0, 1, -1, 1, 1],
        [0, 0, 0, 0, 1, 1, -1, 1, 0, 0, 0, 0, 0, 0, 0, 0],
        [0, 0, 0, 0, 0, 0, 0, 0, 1, -1, 1, 1, 1, 1, -1, 1],
        [0, 0, 0, 0, 0, 0, 0, 0, 1, 1, -1, 1, 0, 0, 0, 0],
    ],
    dtype=float,
)

OCM4 = np.array(
    [
        [1, 1, 1, 1],
        [1, -1, 1, -1],
        [1, 1, -1, -1],
        [1, -1, -1, 1],
    ],
    dtype=float,
)

AOCM3 = np.array(
    [
        [1, -1, 1, -1],
        [1, 1, -1, -1],
        [1, -1, -1, 1],
    ],
    dtype=float,
)

# The same design written with an all-ones leading row; related to AOCM3
# by column sign changes.
AOCM3_ALT = np.array(
    [
        [1, 1, 1, 1],
        [1, -1, -1, 1],
        [1, 1, -1, -1],
    ],
    dtype=float,
)

AOCM7 = np.array(
    [
        [1, -1, 1, -1, 1, -1, 1, -1],
        [1, 1, -1, -1, 1, 1, -1, -1],
        [1, -1, -1, 1, 1, -1, -1, 1],
        [1, 1, 1, 1, -1, -1, -1, -1],
        [1, -1, 1, -1, -1, 1, -1, 1],
        [1, 1, -1, -1, -1, -1, 1, 1],
        [1, -1, -1, 1, -1, 1, 1, -1],
    ],
    dtype=float,
)

AOCM7_ALT = np.array(
    [
        [1, 1, 1, 1, 1, 1, 1, 1],
        [1, -1, -1, 1, 1, -1, -1, 1],
        [1, 1, -1, -1, 1, 1, -1, -1],
        [1, -1, 1, -1, -1, 1, -1, 1],
        [1, 1, 1, 1, -1, -1, -1, -1],
        [1, -1, -1, 1, -1, 1, 1, -1],
        [1, 1, -1, -1, -1, -1, 1, 1],
    ],
    dtype=float,
)

AOCM5 = np.array(
    [
        [1, 1, 1, 1, 1],
        [1, 1, 1, -1, -1],
        [1, 1, -1, 1, -1],
        [1, -1, -1, -1, 1],
        [1, -1, 1, 1, -1],
    ],
    dtype=float,
)

# Independent-layer index sets for the two reference layers.
BASIS_LAYER_12 = [1, 5]
BASIS_LAYER_27 = [1, 2, 4, 5, 7, 8, 10, 11, 13, 14, 16, 17]
BASIS_LAYER_4 = [1]

# The 27 leading (n, j) labels of the ordered basis through dimension 10.
BASIS_ORDER_M10 = [
    (1, 1),
    (2, 1),
    (3, 1), (3, 2),
    (4, 1),
    (5, 1), (5, 2), (5, 3), (5, 4),
    (6, 1), (6, 5),
    (7, 1), (7, 2), (7, 3), (7, 4), (7, 5), (7, 6),
    (8, 1), (8, 3),
    (9, 1), (9, 2), (9, 4), (9, 5),
    (10, 1), (10, 3), (10, 7), (10, 9),
]

# First nine orthonormal basis elements, from their closed forms.
ORTHONORMAL_FIRST9 = [
    np.array([1.0]),
    np.array([1.0, -1.0]),
    sqrt(1 / 2) * np.array([2.0, -1.0, -1.0]),
    sqrt(3 / 2) * np.array([0.0, 1.0, -1.0]),
    sqrt(2) * np.array([1.0, 0.0, -1.0, 0.0]),
    0.5 * np.array([4.0, -1.0, -1.0, -1.0, -1.0]),
    sqrt(5 / 12) * np.array([0.0, 3.0, -1.0, -1.0, -1.0]),
    sqrt(5 / 6) * np.array([0.0, 0.0, 2.0, -1.0, -1.0]),
    sqrt(5 / 2) * np.array([0.0, 0.0, 0.0, 1.0, -1.0]),
]
