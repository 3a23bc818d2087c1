"""Bundled ground-truth tables and the machine-readable discrepancy ledger.

The tables are transcribed verbatim from the published tabulation; every
place where a recomputed value disagrees with a printed one is recorded in
DISCREPANCIES and consulted by the verification sweep rather than silently
patched.  Irrep columns are ordered 0-, 1+, 1-, 2+, 2-, ..., 6+, 6- (the
trivial 0+ column, identically 1, is omitted in print).
"""

from __future__ import annotations

from dataclasses import dataclass

IRREP_COLUMNS = ["0-", "1+", "1-", "2+", "2-", "3+", "3-",
                 "4+", "4-", "5+", "5-", "6+", "6-"]

# label -> (adjacent subgroups, adjacent supergroups, fbar, 13 frequencies)
TABLE3 = {
    "C1":  ((), ("C5", "C2", "Ci", "Cs", "C3"), 3,
            (1, 3, 3, 5, 5, 7, 7, 9, 9, 11, 11, 13, 13)),
    "Ci":  (("C1",), ("C5i", "C2h", "C3i"), 3,
            (0, 3, 0, 5, 0, 7, 0, 9, 0, 11, 0, 13, 0)),
    "Cs":  (("C1",), ("C5h", "C5v", "C2h", "C2v", "C3v"), 1,
            (0, 1, 2, 3, 2, 3, 4, 5, 4, 5, 6, 7, 6)),
    "C2":  (("C1",), ("C4", "C2h", "D3", "D2", "C6"), 1,
            (1, 1, 1, 3, 3, 3, 3, 5, 5, 5, 5, 7, 7)),
    "C2h": (("C2", "Ci", "Cs"), ("C4h", "D2h", "C6h", "D3d"), 1,
            (0, 1, 0, 3, 0, 3, 0, 5, 0, 5, 0, 7, 0)),
    "C2v": (("C2", "Cs"), ("C4v", "D2d", "D2h", "C6v"), 0,
            (0, 0, 1, 2, 1, 1, 2, 3, 2, 2, 3, 4, 3)),
    "C3":  (("C1",), ("T", "D3", "C6", "C3i", "C3v", "C3h"), 1,
            (1, 1, 1, 1, 1, 3, 3, 3, 3, 3, 3, 5, 5)),
    "C3h": (("C3", "Cs"), ("D3h", "C6h"), 1,
            (0, 1, 0, 1, 0, 1, 2, 1, 2, 1, 2, 3, 2)),
    "C3i": (("C3", "Ci"), ("Th", "C6h", "D3d"), 1,
            (0, 1, 0, 1, 0, 3, 0, 3, 0, 3, 0, 5, 0)),
    "C3v": (("C3", "Cs"), ("Td", "C6v", "D3h", "D3d"), 0,
            (0, 0, 1, 1, 0, 1, 2, 2, 1, 1, 2, 3, 2)),
    "C4":  (("C2",), ("Cinf", "C4h", "C4v", "D4"), 1,
            (1, 1, 1, 1, 1, 1, 1, 3, 3, 3, 3, 3, 3)),
    "C4h": (("C4", "C2h", "S4"), ("Cinfh", "D4h"), 1,
            (0, 1, 0, 1, 0, 1, 0, 3, 0, 3, 0, 3, 0)),
    "C4v": (("C4", "C2v"), ("Cinfv", "D4d", "D4h"), 0,
            (0, 0, 1, 1, 0, 0, 1, 2, 1, 1, 2, 2, 1)),
    "C5":  (("C1",), ("C5i", "C5h", "C5v", "D5", "Cinf"), 1,
            (1, 1, 1, 1, 1, 1, 1, 1, 1, 3, 3, 3, 3)),
    "C5h": (("C5", "Cs"), ("D5h",), 1,
            (0, 0, 1, 1, 0, 1, 0, 1, 0, 1, 2, 1, 2)),
    "C5i": (("C5", "Ci"), ("D5d", "Cinfh"), 1,
            (0, 1, 0, 1, 0, 1, 0, 1, 0, 3, 0, 3, 0)),
    "C5v": (("C5", "Cs"), ("Cinfv", "D5d"), 0,
            (0, 0, 1, 1, 0, 0, 1, 1, 0, 1, 2, 2, 1)),
    "C6":  (("C3", "C2"), ("Cinf", "D6", "C6h", "C6v"), 1,
            (1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 3, 3)),
    "C6h": (("C6", "C3h", "C3i", "C2h"), ("Cinfh", "D6h"), 1,
            (0, 1, 0, 1, 0, 1, 0, 1, 0, 1, 0, 3, 0)),
    "C6v": (("C6", "C2v", "C3v"), ("Cinfv", "D6h"), 0,
            (0, 0, 1, 1, 0, 0, 1, 1, 0, 0, 1, 2, 1)),
    "Cinf": (("C6", "C5", "C4"), ("Cinfh", "Dinf"), 0,
             (1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1)),
    "Cinfh": (("Cinf", "C6h", "C5i", "C4h"), ("Dinfh",), 0,
              (0, 1, 0, 1, 0, 1, 0, 1, 0, 1, 0, 1, 0)),
    "Cinfv": (("Cinf", "C6v", "C5v", "C4v"), ("Dinfh",), 0,
              (0, 0, 1, 1, 0, 0, 1, 1, 0, 0, 1, 1, 0)),
    "D2":  (("C2",), ("D2d", "T", "D4", "D2h", "D6"), 0,
            (1, 0, 0, 2, 2, 1, 1, 3, 3, 2, 2, 4, 4)),
    "D2d": (("D2", "C2v", "S4"), ("D4h", "D6d", "Td"), 0,
            (0, 0, 0, 1, 1, 0, 1, 2, 1, 1, 1, 2, 2)),
    "D2h": (("D2", "C2h", "C2v"), ("D4h", "D6h", "Th"), 0,
            (0, 0, 0, 2, 0, 1, 0, 3, 0, 2, 0, 4, 0)),
    "D3":  (("C3", "C2"), ("O", "Y", "D6", "D3d", "D3h"), 0,
            (1, 0, 0, 1, 1, 1, 1, 2, 2, 1, 1, 3, 3)),
    "D3d": (("D3", "C3i", "C3v", "C2h"), ("Oh", "Yh", "D6h"), 0,
            (0, 0, 0, 1, 0, 1, 0, 2, 0, 1, 0, 3, 0)),
    "D3h": (("D3", "C3h", "C3v"), ("D6h", "D6d"), 0,
            (0, 0, 0, 1, 0, 0, 1, 1, 1, 0, 1, 2, 1)),
    "D4":  (("D2", "C4"), ("Dinf", "O", "D4h"), 0,
            (1, 0, 0, 1, 1, 0, 0, 2, 2, 1, 1, 2, 2)),
    "D4d": (("D4", "C4v"), ("Dinfh",), 0,
            (0, 0, 0, 1, 0, 0, 0, 1, 1, 0, 1, 1, 1)),
    "D4h": (("D4", "C4h", "C4v", "D2h", "D2d"), ("Oh", "Dinfh"), 0,
            (0, 0, 0, 1, 0, 0, 0, 2, 0, 1, 0, 2, 0)),
    "D5":  (("C5", "C2"), ("D5d", "D5h", "Dinf", "Y"), 0,
            (1, 0, 0, 1, 1, 0, 0, 1, 1, 1, 1, 2, 2)),
    "D5d": (("D5", "C5i", "C5v", "C2h"), ("Dinfh",), 0,
            (0, 0, 0, 1, 0, 0, 0, 1, 0, 1, 0, 2, 0)),
    "D5h": (("D5", "C5h"), ("Dinfh",), 0,
            (0, 0, 0, 1, 0, 0, 0, 1, 0, 0, 1, 1, 1)),
    "D6":  (("D3", "D2", "C6"), ("Dinf", "D6h", "D6d"), 0,
            (1, 0, 0, 1, 1, 0, 0, 1, 1, 0, 0, 2, 2)),
    "D6d": (("D6", "D2d"), ("Dinfh",), 0,
            (0, 0, 0, 1, 0, 0, 0, 1, 0, 0, 0, 1, 1)),
    "D6h": (("D6", "D2h", "D3h", "D3d", "C6h", "C6v"), ("Dinfh",), 0,
            (0, 0, 0, 1, 0, 0, 0, 1, 0, 0, 0, 2, 0)),
    "Dinf": (("Cinf", "D6", "D5", "D4"), ("Dinfh", "SO3"), 0,
             (1, 0, 0, 1, 1, 0, 0, 1, 1, 0, 0, 1, 1)),
    "Dinfh": (("Dinf", "Cinfv", "D6h", "D5d", "D4h"), ("O3",), 0,
              (0, 0, 0, 1, 0, 0, 0, 1, 0, 0, 0, 1, 0)),
    "Y":   (("T", "D5", "D3", "C5v"), ("SO3", "Yh"), 0,
            (1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 1)),
    "Yh":  (("Y", "D5d"), ("O3",), 0,
            (0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0)),
    "O":   (("T", "D4", "D3"), ("SO3", "Oh"), 0,
            (1, 0, 0, 0, 0, 0, 0, 1, 1, 0, 0, 1, 1)),
    "O3":  (("SO3", "Dinfh", "Yh", "Oh"), (), 0,
            (0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0)),
    "Oh":  (("O", "Td", "Th", "D3d", "D4h", "C3i"), ("O3",), 0,
            (0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 1, 0)),
    "S4":  (("C2",), ("C4h", "D2d"), 1,
            (0, 1, 0, 1, 2, 1, 2, 3, 2, 3, 2, 3, 4)),
    "SO3": (("Dinf", "Y", "O"), ("O3",), 0,
            (1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0)),
    "T":   (("D2", "C3"), ("O", "Y", "Th", "Td"), 0,
            (1, 0, 0, 0, 0, 1, 1, 1, 1, 0, 0, 2, 2)),
    "Td":  (("T", "D2d"), ("Oh",), 0,
            (0, 0, 0, 0, 0, 0, 1, 1, 0, 0, 0, 1, 1)),
    "Th":  (("T", "D2h", "C3i"), ("Oh", "Yh"), 0,
            (0, 0, 0, 0, 0, 1, 0, 1, 0, 0, 0, 2, 0)),
}

# Little groups of SO(3) irreps, l <= 4; numbers as printed.
TABLE4 = {
    "SO3":  {0: 1},
    "Dinf": {2: 3, 4: 3},
    "Cinf": {1: 3, 3: 3},
    "O":    {4: 4},
    "T":    {3: 4},
    "D4":   {4: 5},
    "D3":   {3: 4, 4: 5},
    "D2":   {2: 5, 4: 6},
    "C3":   {3: 5},
    "C2":   {3: 5, 4: 7},
    "C1":   {3: 7, 4: 9},
}

# Little groups of O(3) irreps, l <= 9; numbers as printed.
TABLE5_PLUS = {
    "O3":    {0: 1},
    "Dinfh": {2: 3, 4: 3, 6: 3, 8: 3},
    "Cinfh": {1: 3, 3: 3, 5: 3, 7: 3, 9: 3},
    "Yh":    {6: 4},
    "Oh":    {4: 4, 6: 4, 8: 4, 9: 4},
    "Th":    {3: 4, 6: 5, 7: 4, 9: 5},
    "D9d":   {9: 4},
    "D8h":   {8: 5, 9: 4},
    "D7d":   {7: 4, 8: 5, 9: 4},
    "D6h":   {6: 5, 7: 4, 8: 5, 9: 4},
    "D5d":   {5: 4, 6: 5, 7: 4, 8: 5, 9: 4},
    "D4h":   {4: 5, 5: 4, 6: 5, 7: 4, 8: 6, 9: 5},
    "D3d":   {3: 4, 4: 5, 5: 4, 6: 6, 7: 5, 8: 6, 9: 6},
    "D2h":   {2: 5, 4: 6, 5: 5, 6: 7, 7: 6, 8: 8, 9: 7},
    "C9i":   {9: 5},
    "C8h":   {9: 5},
    "C7i":   {7: 5, 9: 5},
    "C6h":   {7: 5, 9: 5},
    "C5i":   {5: 5, 7: 5, 9: 5},
    "C4h":   {5: 5, 7: 5, 8: 7, 9: 7},
    "C3i":   {3: 5, 5: 5, 6: 7, 7: 7, 8: 7, 9: 9},
    "C2h":   {3: 5, 4: 7, 5: 7, 6: 9, 7: 9, 8: 11, 9: 11},
    "Ci":    {3: 7, 4: 9, 5: 11, 6: 13, 7: 15, 8: 17, 9: 19},
}

TABLE5_MINUS = {
    "SO3":   {0: 1},
    "Dinf":  {2: 3, 4: 3, 6: 3, 8: 3},
    "Cinfv": {1: 3, 3: 3, 5: 3, 7: 3, 9: 3},
    "Y":     {6: 4},
    "O":     {4: 4, 6: 4, 8: 4, 9: 4},
    "Td":    {3: 4, 6: 4, 7: 4, 9: 4},
    "T":     {6: 5, 9: 5},
    "D9h":   {9: 4},
    "D9":    {},
    "D8d":   {8: 4, 9: 4},
    "D8":    {8: 5},
    "D7h":   {7: 4, 8: 4, 9: 4},
    "D7":    {8: 5},
    "D6d":   {6: 4, 7: 4, 8: 4, 9: 4},
    "D6":    {6: 5, 8: 5},
    "D5h":   {5: 4, 6: 4, 7: 4, 8: 4, 9: 4},
    "D5":    {6: 5, 8: 5},
    "D4d":   {4: 4, 5: 4, 6: 4, 7: 4, 8: 4, 9: 4},
    "D4":    {4: 5, 6: 5, 8: 5, 9: 5},
    "D3h":   {3: 4, 4: 4, 5: 4, 6: 4, 7: 4, 8: 4, 9: 5},
    "D3":    {4: 5, 6: 5, 7: 5, 8: 5, 9: 6},
    "D2d":   {2: 4, 4: 4, 5: 4, 6: 5, 7: 5, 8: 5, 9: 5},
    "D2":    {2: 5, 4: 5, 5: 5, 6: 6, 7: 6, 8: 6, 9: 7},
    "C9v":   {9: 5},
    "C8v":   {9: 5},
    "C7v":   {7: 5, 9: 5},
    "C6v":   {7: 5, 9: 5},
    "C5v":   {5: 5, 7: 5, 9: 5},
    "C4v":   {5: 5, 7: 5, 8: 5, 9: 6},
    "C3v":   {3: 5, 5: 5, 6: 5, 7: 6, 8: 5, 9: 7},
    "C2v":   {3: 5, 4: 5, 5: 6, 6: 6, 7: 7, 8: 7, 9: 8},
    "S4":    {6: 6, 7: 6, 8: 6, 9: 6},
    "C3h":   {9: 6},
    "Cs":    {3: 6, 4: 6, 5: 8, 6: 8, 7: 10, 8: 10, 9: 12},
    "C4":    {8: 7, 9: 7},
    "C3":    {6: 7, 7: 7, 8: 7, 9: 9},
    "C2":    {4: 7, 5: 7, 6: 9, 7: 9, 8: 11, 9: 11},
    "C1":    {3: 7, 4: 9, 5: 11, 6: 13, 7: 15, 8: 17, 9: 19},
}


@dataclass(frozen=True)
class Discrepancy:
    """A documented difference between a published value and a recomputed one."""
    ident: str
    where: str
    published: str
    computed: str
    note: str = ""


DISCREPANCIES = (
    Discrepancy(
        "table3-c5h-1pm", "subduction table, C5h row, columns 1+/1-",
        "c(1+)=0, c(1-)=1", "c(1+)=1, c(1-)=0",
        "C5h keeps a pseudovector along its axis (it sits inside Cinfh), so "
        "the 1+ frequency is 1; the printed pair is transposed."),
    Discrepancy(
        "table5-d2-d3-d4-minus", "O(3) little-group table, lower block, "
        "entries (D2,4-), (D2,6-), (D2,8-), (D3,6-), (D3,8-), (D4,8-)",
        "5, 6, 6, 5, 5, 5", "6, 7, 8, 6, 6, 6",
        "the decode (3 - dim H) + fm gives the computed values, which also "
        "match the printed positive-parity twins D2h/D3d/D4h and the rank-4 "
        "SO(3) table; the lower-block entries look misprinted."),
    Discrepancy(
        "table45-caption", "little-group table captions",
        "entries are called subduction frequencies",
        "entries equal (3 - dim H) + fm",
        "verified entry by entry; for example D2 at rank 2 prints 5 while "
        "its subduction frequency is 2."),
    Discrepancy(
        "table2-cs-frequency", "negative-parity formula table, Cs rows",
        "c = 2 floor((l+n)/2n) with n undefined",
        "c = l (l even), l + 1 (l odd)",
        "the printed formula evaluates correctly only at n = 1 (Cs = C1h); "
        "the trace formula fixes the values."),
    Discrepancy(
        "table2-cs-vectors", "negative-parity formula table, Cs rows",
        "even l: Z0, Z2+, ..., Zl+; odd l: Z2-, ..., Zl-",
        "even l: Z2-, ..., Zl-; odd l: Z0, Z2+, ..., Zl+",
        "the printed rows are swapped between the parities: counting "
        "components against c - 1 and checking mirror invariance parities "
        "both show it; the swapped version fails symmetry detection."),
    Discrepancy(
        "table1-cn-vector-signs", "rotation-group formula table, Cn rows",
        "Z0, Zn+, Z2n+, Z3n+, ...",
        "Z0, Zn+, Z2n+-, Z3n+-, ... (both signs from the second multiple)",
        "only one massless component exists for Cn, so only one sign can be "
        "rotated away; the printed single-sign list has c - 1 - (floor(l/n) "
        "- 1) components too few."),
    Discrepancy(
        "table3-adjacency", "branching table, adjacency lists",
        "see entries below",
        "computed transitive reduction",
        "three printed edges are not adjacencies (D3h < D6d is not an "
        "embedding at all; C3i sits below Oh only through D3d or Th; C5v "
        "is improper and cannot sit inside Y), and five true adjacencies "
        "are missing from both sides (C5h < Cinfh, C5v < D5h, C6v < D6d, "
        "C2v < D3h, C2v < D5h)."),
    Discrepancy(
        "sec3-cinfh-even-minus", "axial little-group list for Cinfh",
        "Cn for the (n even, -) irreps",
        "S2n for the (n even, -) irreps",
        "the kernel of the irrep contains the 2n-fold rotoreflection "
        "(parity * exp(i n pi/n) = 1); the chain criterion on the axial "
        "lattice picks S2n as well."),
    Discrepancy(
        "sec3-dinfh-e1-minus", "axial little-group list for Dinfh",
        "C2h for both E1+ and E1-",
        "C2h for E1+, C2v for E1-",
        "the E1- (u) invariant keeps two mirrors through its twofold axis; "
        "this is the n = 1 case of the odd-n rule with D1h = C2v."),
    Discrepancy(
        "sec3-dinf-a2-dim", "axial little-group list for Dinf",
        "Cinf with vector dimension 2 for A2",
        "A2 is one-dimensional",
        "the published dimension is returned verbatim and flagged."),
    Discrepancy(
        "sec54-c2-4minus", "rank-4 negative parity discussion",
        "C2 excluded from the little groups",
        "C2 is a little group of 4- (massive frequency 4 beats every "
        "adjacent supergroup)",
        "the little-group table includes C2 at 4- as well; the criterion "
        "output is taken as ground truth."),
    Discrepancy(
        "table3-row-count", "acceptance wording",
        "48 groups x 14 irreps",
        "50 printed rows x 13 printed columns (plus the trivial 0+)",
        "all printed rows and columns are tested, plus 0+ = 1 for every "
        "group."),
)


def get_discrepancy(ident: str) -> Discrepancy:
    for d in DISCREPANCIES:
        if d.ident == ident:
            return d
    raise KeyError(ident)


# printed edges known not to be adjacencies, and true adjacencies missing
# from the printed lists (see the table3-adjacency ledger entry)
TABLE3_EXTRA_EDGES = {("C3i", "Oh"), ("D3h", "D6d"), ("C5v", "Y")}
TABLE3_MISSING_EDGES = {("C5h", "Cinfh"), ("C5v", "D5h"), ("C6v", "D6d"),
                        ("C2v", "D3h"), ("C2v", "D5h")}


def table3_transcribed_edges() -> set[tuple[str, str]]:
    """Union of both printed adjacency columns as (subgroup, supergroup)."""
    edges = set()
    for label, (subs, sups, _, _) in TABLE3.items():
        for s in subs:
            edges.add((s, label))
        for s in sups:
            edges.add((label, s))
    return edges
