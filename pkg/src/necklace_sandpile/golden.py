"""Published reference values, transcribed by hand and used as golden data.

Each table row is (n, number of necklaces, group order, group type, orbit
sizes in decreasing order) for two colours.  The matrices are the
Laplacian of the de Bruijn-type graph on Z_9 and its form in the
difference basis.
"""

from __future__ import annotations

from dataclasses import dataclass

from .abgroup import AbelianType


@dataclass(frozen=True)
class TableRow:
    n: int
    necklaces: int
    order: int
    group: AbelianType
    orbits: tuple[int, ...]

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "necklaces": self.necklaces,
            "order": self.order,
            "type": str(self.group),
            "orbit_sizes": list(self.orbits),
        }


def _row(n, count, order, group, orbits):
    return TableRow(n, count, order, AbelianType.parse(group), tuple(orbits))


# Reutenauer groups RG_n^2, n = 2..15.
REUTENAUER_TABLE = {r.n: r for r in [
    _row(2, 1, 1, "Z_1", [1]),
    _row(3, 2, 1, "Z_1", [1, 1]),
    _row(4, 3, 2, "Z_2", [2, 1]),
    _row(5, 6, 3, "Z_3", [3, 3]),
    _row(6, 9, 4, "Z_2+Z_2", [4, 2, 2, 1]),
    _row(7, 18, 7, "Z_7", [7, 7, 1, 1, 1, 1]),
    _row(8, 30, 16, "Z_2+Z_2+Z_4", [16, 8, 4, 2]),
    _row(9, 56, 21, "Z_21", [21, 21, 7, 7]),
    _row(10, 99, 48, "Z_2+Z_2+Z_2+Z_6", [48, 24, 24, 3]),
    _row(11, 186, 93, "Z_93", [93, 93]),
    _row(12, 335, 128, "Z_2+Z_2+Z_2+Z_4+Z_4",
         [128, 64, 32, 32, 16, 16, 16, 8, 8, 4, 4, 4, 2, 1]),
    _row(13, 630, 315, "Z_315", [315, 315]),
    _row(14, 1161, 448, "Z_2^5+Z_14",
         [448, 224, 224, 56, 56, 28, 28, 28, 28, 8, 8, 7, 4, 4, 4, 4, 1, 1]),
    _row(15, 2182, 675, "Z_3+Z_15+Z_15",
         [675, 675, 225, 225] + [45] * 6 + [15] * 6 + [3] * 6 + [1] * 4),
]}

# Golomb groups GG_n^2, n = 2..12.
GOLOMB_TABLE = {r.n: r for r in [
    _row(2, 1, 1, "Z_1", [1]),
    _row(3, 2, 2, "Z_2", [2]),
    _row(4, 3, 2, "Z_2", [2, 1]),
    _row(5, 6, 6, "Z_6", [6]),
    _row(6, 9, 6, "Z_6", [6, 2, 1]),
    _row(7, 18, 18, "Z_18", [18]),
    _row(8, 30, 16, "Z_2+Z_8", [16, 8, 4, 2]),
    _row(9, 56, 48, "Z_2+Z_24", [48, 8]),
    _row(10, 99, 60, "Z_2+Z_30", [60, 30, 6, 2, 1]),
    _row(11, 186, 176, "Z_2+Z_88", [176, 8, 2]),
    _row(12, 335, 144, "Z_2+Z_6+Z_12",
         [144, 48, 36, 24, 24, 12, 12, 8, 6, 6, 4, 4, 2, 2, 2, 1]),
]}

GOLOMB_ORDERS = (1, 2, 2, 6, 6, 18, 16, 48, 60, 176, 144)

A_9 = [
    [-1, 1, 0, 0, 0, 0, 0, 0, 0],
    [0, -2, 1, 1, 0, 0, 0, 0, 0],
    [0, 0, -2, 0, 1, 1, 0, 0, 0],
    [0, 0, 0, -2, 0, 0, 1, 1, 0],
    [1, 0, 0, 0, -2, 0, 0, 0, 1],
    [0, 1, 1, 0, 0, -2, 0, 0, 0],
    [0, 0, 0, 1, 1, 0, -2, 0, 0],
    [0, 0, 0, 0, 0, 1, 1, -2, 0],
    [0, 0, 0, 0, 0, 0, 0, 1, -1],
]

A_9_PRIME = [
    [0, 0, 0, 0, 0, 0, 0, 0, 0],
    [1, -2, 1, 0, 0, 0, 0, 0, 0],
    [1, 0, -2, 0, 1, 0, 0, 0, 0],
    [1, 0, 0, -2, 0, 0, 1, 0, 0],
    [1, 0, 0, 0, -2, 0, 0, 0, 1],
    [0, 1, 0, 0, 0, -2, 0, 0, 0],
    [0, 0, 0, 1, 0, 0, -2, 0, 0],
    [0, 0, 0, 0, 0, 1, 0, -2, 0],
    [0, 0, 0, 0, 0, 0, 0, 1, -2],
]

# Worked sandpile values.
SANDPILE_EXAMPLES = {
    9: AbelianType.parse("Z_21"),
    21: AbelianType.parse("Z_7+Z_63+Z_63"),
}

# Orbits of RG_n^2 for small n, numbered as O_1, O_2, ...
ORBITS = {
    4: [["0001", "0111"], ["0011"]],
    5: [["00001", "00111", "01011"], ["00011", "01111", "00101"]],
    6: [["000001", "011111", "001011", "001101"], ["000011", "010111"],
        ["000101", "001111"], ["000111"]],
}

# Image of each orbit under the averaging operator; ∅ means periodic.
AVERAGING_CHAINS = {
    4: "O_1 → O_2 → ∅",
    5: "O_1 → O_2 → O_2",
    6: "O_1 → O_2 → O_3 → O_3, O_4 → ∅",
}

# GF(16) = F_2[x]/(x^4+x+1) with alpha = x: exponents of alpha in each
# Frobenius orbit of maximal size, the minimal polynomial, normal?, primitive?
GF16_ORBITS = [
    ((1, 2, 4, 8), "x^4+x+1", False, True),
    ((3, 6, 12, 9), "x^4+x^3+x^2+x+1", True, False),
    ((7, 14, 13, 11), "x^4+x^3+1", True, True),
]

TABLES = {"reutenauer": REUTENAUER_TABLE, "golomb": GOLOMB_TABLE}
