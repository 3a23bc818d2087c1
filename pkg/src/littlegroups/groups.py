"""Catalogue of the closed subgroups of O(3) in Schoenflies notation.

A group is identified by family plus order parameter n (``GroupId``).  Finite
groups can be realized as explicit orthogonal transformations in a fixed
standard orientation: principal axis along z, secondary twofold axis along x,
vertical mirror planes containing x, cubic groups with their fourfold (or
twofold, for T) axes on the coordinate axes, and the icosahedral groups
oriented so that three of their twofold axes are the coordinate axes.

Every improper element is stored as inversion composed with a rotation, so an
element is a triple (axis, angle, improper flag).
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from enum import Enum
from functools import lru_cache

import numpy as np


class GroupError(ValueError):
    """Unknown label or an operation applied outside its domain."""


class Family(Enum):
    C1 = "C1"
    Ci = "Ci"
    Cs = "Cs"
    Cn = "Cn"
    Cnh = "Cnh"
    Cnv = "Cnv"
    S2n = "S2n"
    Dn = "Dn"
    Dnh = "Dnh"
    Dnd = "Dnd"
    T = "T"
    Td = "Td"
    Th = "Th"
    O = "O"
    Oh = "Oh"
    Y = "Y"
    Yh = "Yh"
    Cinf = "Cinf"
    Cinfh = "Cinfh"
    Cinfv = "Cinfv"
    Dinf = "Dinf"
    Dinfh = "Dinfh"
    SO3 = "SO3"
    O3 = "O3"


PARAMETRIC = {Family.Cn, Family.Cnh, Family.Cnv, Family.S2n,
              Family.Dn, Family.Dnh, Family.Dnd}
INFINITE_AXIAL = {Family.Cinf, Family.Cinfh, Family.Cinfv,
                  Family.Dinf, Family.Dinfh}
FULL_GROUPS = {Family.SO3, Family.O3}


@dataclass(frozen=True)
class GroupId:
    """Canonical identifier of a closed subgroup of O(3)."""

    family: Family
    n: int | None = None

    def __post_init__(self):
        if self.family in PARAMETRIC:
            if self.n is None or self.n < 2:
                raise GroupError(f"family {self.family.value} needs n >= 2 "
                                 f"(n=1 degeneracies are aliased)")
        elif self.n is not None:
            raise GroupError(f"family {self.family.value} takes no parameter")

    def sort_key(self):
        return (self.family.value, self.n or 0)

    @property
    def label(self) -> str:
        f, n = self.family, self.n
        if f is Family.Cn:
            return f"C{n}"
        if f is Family.Cnh:
            return f"C{n}h"
        if f is Family.Cnv:
            return f"C{n}v"
        if f is Family.Dn:
            return f"D{n}"
        if f is Family.Dnh:
            return f"D{n}h"
        if f is Family.Dnd:
            return f"D{n}d"
        if f is Family.S2n:
            # odd n improper cyclic groups carry the Cni label
            return f"C{n}i" if n % 2 else f"S{2 * n}"
        return f.value

    def __str__(self):
        return self.label

    def __repr__(self):
        return f"GroupId({self.label})"


def group(family: Family, n: int | None = None) -> GroupId:
    """Build a GroupId, resolving the n=1 aliases of the parametric families."""
    if family in PARAMETRIC and n == 1:
        return _N1_ALIASES[family]
    return GroupId(family, n)


_N1_ALIASES = {
    Family.Cn: GroupId(Family.C1),
    Family.Cnv: GroupId(Family.Cs),
    Family.Cnh: GroupId(Family.Cs),
    Family.S2n: GroupId(Family.Ci),
    Family.Dn: GroupId(Family.Cn, 2),
    Family.Dnh: GroupId(Family.Cnv, 2),
    Family.Dnd: GroupId(Family.Cnh, 2),
}

_PLAIN_LABELS = {
    "c1": GroupId(Family.C1), "ci": GroupId(Family.Ci), "cs": GroupId(Family.Cs),
    "t": GroupId(Family.T), "td": GroupId(Family.Td), "th": GroupId(Family.Th),
    "o": GroupId(Family.O), "oh": GroupId(Family.Oh),
    "y": GroupId(Family.Y), "yh": GroupId(Family.Yh),
    "i": GroupId(Family.Y), "ih": GroupId(Family.Yh),
    "cinf": GroupId(Family.Cinf), "cinfh": GroupId(Family.Cinfh),
    "cinfv": GroupId(Family.Cinfv),
    "dinf": GroupId(Family.Dinf), "dinfh": GroupId(Family.Dinfh),
    "so3": GroupId(Family.SO3), "so(3)": GroupId(Family.SO3),
    "o3": GroupId(Family.O3), "o(3)": GroupId(Family.O3),
}

_PARAM_RE = re.compile(r"([cds])(\d+)(h|v|d|i)?", re.IGNORECASE)


def canonicalize_label(raw: str) -> GroupId:
    """Parse a Schoenflies label ("D4h", "C3i", "S4", "Cinfv") to canonical form.

    Aliases are resolved: C1v == Cs, D1 == C2, S2 == Ci, C1h == Cs,
    D1h == C2v, D1d == C2h, S(2k) == S2n family, S(odd) == the Cnh group the
    odd rotoreflection generates, Cni == S2n with odd n.
    """
    s = raw.strip().replace("∞", "inf").lower()
    if s in _PLAIN_LABELS:
        return _PLAIN_LABELS[s]
    m = _PARAM_RE.fullmatch(s)
    if not m:
        raise GroupError(f"unknown group label: {raw!r}")
    letter, n, suffix = m.group(1), int(m.group(2)), m.group(3) or ""
    if n < 1:
        raise GroupError(f"unknown group label: {raw!r}")
    if letter == "c":
        if suffix == "":
            return group(Family.Cn, n)
        if suffix == "h":
            return group(Family.Cnh, n)
        if suffix == "v":
            return group(Family.Cnv, n)
        if suffix == "i":
            # Cni is S2n for odd n; for even n the inversion extension is Cnh
            if n == 1:
                return GroupId(Family.Ci)
            return group(Family.S2n, n) if n % 2 else group(Family.Cnh, n)
    elif letter == "d" and suffix in ("", "h", "d"):
        fam = {"": Family.Dn, "h": Family.Dnh, "d": Family.Dnd}[suffix]
        return group(fam, n)
    elif letter == "s" and suffix == "":
        if n % 2:
            # an odd-order rotoreflection generates Cnh
            return group(Family.Cnh, n)
        return group(Family.S2n, n // 2)
    raise GroupError(f"unknown group label: {raw!r}")


# ---------------------------------------------------------------------------
# orders and Lie data

def is_finite(g: GroupId) -> bool:
    return g.family not in INFINITE_AXIAL and g.family not in FULL_GROUPS


def group_order(g: GroupId) -> int | float:
    """Order of the group; math.inf for the Lie groups."""
    f, n = g.family, g.n
    if f is Family.C1:
        return 1
    if f in (Family.Ci, Family.Cs):
        return 2
    if f is Family.Cn:
        return n
    if f in (Family.Cnh, Family.Cnv, Family.S2n, Family.Dn):
        return 2 * n
    if f in (Family.Dnh, Family.Dnd):
        return 4 * n
    if f is Family.T:
        return 12
    if f in (Family.Td, Family.Th, Family.O):
        return 24
    if f is Family.Oh:
        return 48
    if f is Family.Y:
        return 60
    if f is Family.Yh:
        return 120
    return math.inf


def lie_dim(g: GroupId) -> int:
    if g.family in FULL_GROUPS:
        return 3
    if g.family in INFINITE_AXIAL:
        return 1
    return 0


def normalizer_dim(g: GroupId) -> int:
    """Lie dimension of the normalizer of g inside O(3).

    3 when the normalizer is all of O(3) (C1, Ci, SO3, O3), 1 when the
    normalizer contains the full axial rotation group (every group whose
    symmetry axes are all collinear, plus the infinite axial groups), else 0.
    """
    f = g.family
    if f in (Family.C1, Family.Ci) or f in FULL_GROUPS:
        return 3
    if f in (Family.Cn, Family.Cnh, Family.S2n, Family.Cs):
        return 1
    if f in INFINITE_AXIAL:
        return 1
    return 0


@dataclass(frozen=True)
class GroupDims:
    lie_dim: int
    fbar: int


def dims(g: GroupId) -> GroupDims:
    """Lie dimension and the axis-freedom count fbar = dim N(g) - dim g."""
    d = lie_dim(g)
    return GroupDims(lie_dim=d, fbar=normalizer_dim(g) - d)


# ---------------------------------------------------------------------------
# structure descriptors used by the subgroup rules
#
# Any closed subgroup H of O(3) is one of
#   * proper (rotations only),
#   * inversion-containing: H = rot(H) x {E, i},
#   * improper without inversion: determined by the rotation group pair
#     (ext(H), rot(H)) where ext(H) adjoins the proper parts of the improper
#     coset and rot(H) has index 2 in it.

def contains_inversion(g: GroupId) -> bool:
    f, n = g.family, g.n
    if f in (Family.Ci, Family.Th, Family.Oh, Family.Yh,
             Family.Cinfh, Family.Dinfh, Family.O3):
        return True
    if f is Family.Cnh:
        return n % 2 == 0
    if f is Family.S2n:
        return n % 2 == 1
    if f is Family.Dnh:
        return n % 2 == 0
    if f is Family.Dnd:
        return n % 2 == 1
    return False


def is_proper(g: GroupId) -> bool:
    return g.family in (Family.C1, Family.Cn, Family.Dn, Family.T, Family.O,
                        Family.Y, Family.Cinf, Family.Dinf, Family.SO3)


def rotation_part(g: GroupId) -> GroupId:
    """The subgroup of proper rotations of g."""
    f, n = g.family, g.n
    if is_proper(g):
        return g
    if f in (Family.Ci, Family.Cs):
        return GroupId(Family.C1)
    if f in (Family.Cnh, Family.Cnv, Family.S2n):
        return group(Family.Cn, n)
    if f in (Family.Dnh, Family.Dnd):
        return group(Family.Dn, n)
    if f in (Family.Td, Family.Th):
        return GroupId(Family.T)
    if f is Family.Oh:
        return GroupId(Family.O)
    if f is Family.Yh:
        return GroupId(Family.Y)
    if f in (Family.Cinfh, Family.Cinfv):
        return GroupId(Family.Cinf)
    if f is Family.Dinfh:
        return GroupId(Family.Dinf)
    if f is Family.O3:
        return GroupId(Family.SO3)
    raise GroupError(f"no rotation part rule for {g}")


def extended_rotation(g: GroupId) -> GroupId:
    """rot(g) extended by the proper parts of the improper coset.

    Equals rot(g) for proper and inversion-containing groups; for improper
    groups without inversion it is the index-2 rotation supergroup that
    classifies them.
    """
    f, n = g.family, g.n
    if is_proper(g) or contains_inversion(g):
        return rotation_part(g)
    if f is Family.Cs:
        return group(Family.Cn, 2)
    if f is Family.Cnv:
        return group(Family.Dn, n)
    if f is Family.Cnh:        # n odd here
        return group(Family.Cn, 2 * n)
    if f is Family.S2n:        # n even here
        return group(Family.Cn, 2 * n)
    if f is Family.Dnh:        # n odd
        return group(Family.Dn, 2 * n)
    if f is Family.Dnd:        # n even
        return group(Family.Dn, 2 * n)
    if f is Family.Td:
        return GroupId(Family.O)
    if f is Family.Cinfv:
        return GroupId(Family.Dinf)
    raise GroupError(f"no extended rotation rule for {g}")


def inversion_lift(g: GroupId) -> GroupId:
    """The group generated by a proper group g together with the inversion."""
    f, n = g.family, g.n
    lifts = {Family.C1: GroupId(Family.Ci), Family.T: GroupId(Family.Th),
             Family.O: GroupId(Family.Oh), Family.Y: GroupId(Family.Yh),
             Family.Cinf: GroupId(Family.Cinfh),
             Family.Dinf: GroupId(Family.Dinfh),
             Family.SO3: GroupId(Family.O3)}
    if f in lifts:
        return lifts[f]
    if f is Family.Cn:
        return group(Family.Cnh, n) if n % 2 == 0 else group(Family.S2n, n)
    if f is Family.Dn:
        return group(Family.Dnh, n) if n % 2 == 0 else group(Family.Dnd, n)
    raise GroupError(f"inversion lift needs a proper group, got {g}")


# ---------------------------------------------------------------------------
# explicit elements

@dataclass(frozen=True)
class GroupElement:
    """An orthogonal transformation: rotation, optionally composed with i.

    The matrix is R(axis, angle) for proper elements and -R(axis, angle) for
    improper ones (inversion times the rotation).  angle lies in (-pi, pi];
    the identity is (angle 0, improper False) and the inversion (0, True).
    """

    axis: tuple[float, float, float]
    angle: float
    improper: bool

    def matrix(self) -> np.ndarray:
        m = rotation_matrix_3d(np.array(self.axis), self.angle)
        return -m if self.improper else m

    @property
    def order_angle(self) -> float:
        return abs(self.angle)

    def __str__(self):
        kind = "i*R" if self.improper else "R"
        return f"{kind}({math.degrees(self.angle):.1f}deg about "\
               f"[{self.axis[0]:.3f},{self.axis[1]:.3f},{self.axis[2]:.3f}])"


def rotation_matrix_3d(axis: np.ndarray, angle: float) -> np.ndarray:
    """Rodrigues rotation matrix about a (not necessarily unit) axis."""
    n = np.asarray(axis, dtype=float)
    norm = np.linalg.norm(n)
    if norm < 1e-12:
        if abs(angle) < 1e-12:
            return np.eye(3)
        raise GroupError("rotation axis must be nonzero")
    n = n / norm
    ux = np.array([[0.0, -n[2], n[1]],
                   [n[2], 0.0, -n[0]],
                   [-n[1], n[0], 0.0]])
    return (math.cos(angle) * np.eye(3) + math.sin(angle) * ux
            + (1.0 - math.cos(angle)) * np.outer(n, n))


def reflection_matrix(normal: np.ndarray) -> np.ndarray:
    n = np.asarray(normal, dtype=float)
    n = n / np.linalg.norm(n)
    return np.eye(3) - 2.0 * np.outer(n, n)


def element_from_matrix(m: np.ndarray) -> GroupElement:
    """Decompose a 3x3 orthogonal matrix into (axis, angle, improper)."""
    det = np.linalg.det(m)
    improper = det < 0
    r = -m if improper else m
    tr = float(np.trace(r))
    c = max(-1.0, min(1.0, (tr - 1.0) / 2.0))
    angle = math.acos(c)
    if angle < 1e-9:
        return GroupElement((0.0, 0.0, 1.0), 0.0, bool(improper))
    if math.pi - angle < 1e-7:
        # axis from the rank-one projector (R + I)/2
        p = (r + np.eye(3)) / 2.0
        k = int(np.argmax(np.diag(p)))
        axis = p[:, k] / math.sqrt(max(p[k, k], 1e-30))
        axis = _canonical_axis(axis)
        return GroupElement(tuple(float(x) for x in axis), math.pi,
                            bool(improper))
    axis = np.array([r[2, 1] - r[1, 2], r[0, 2] - r[2, 0], r[1, 0] - r[0, 1]])
    axis = axis / (2.0 * math.sin(angle))
    flipped = _canonical_axis(axis)
    if np.dot(flipped, axis) < 0:
        angle = -angle
    return GroupElement(tuple(float(x) for x in flipped), angle,
                        bool(improper))


def _canonical_axis(axis: np.ndarray) -> np.ndarray:
    a = np.asarray(axis, dtype=float)
    a = a / np.linalg.norm(a)
    for x in a:
        if x > 1e-9:
            return a
        if x < -1e-9:
            return -a
    return a


_DEDUP_TOL = 1e-9


def _matrix_key(m: np.ndarray) -> tuple:
    return tuple(np.round(m, 9).ravel().tolist())


def close_under_composition(generators: list[np.ndarray],
                            max_order: int = 400) -> list[np.ndarray]:
    """Generate the finite group spanned by 3x3 generator matrices."""
    elems = {_matrix_key(np.eye(3)): np.eye(3)}
    frontier = [np.eye(3)]
    gens = [np.asarray(g, dtype=float) for g in generators]
    while frontier:
        nxt = []
        for a in frontier:
            for g in gens:
                b = g @ a
                k = _matrix_key(b)
                if k not in elems:
                    elems[k] = b
                    nxt.append(b)
                    if len(elems) > max_order:
                        raise GroupError("generator closure exceeded "
                                         f"{max_order} elements")
        frontier = nxt
    return list(elems.values())


def _generators(g: GroupId) -> list[np.ndarray]:
    f, n = g.family, g.n
    z = np.array([0.0, 0.0, 1.0])
    x = np.array([1.0, 0.0, 0.0])
    body = np.array([1.0, 1.0, 1.0])
    if f is Family.C1:
        return []
    if f is Family.Ci:
        return [-np.eye(3)]
    if f is Family.Cs:
        return [reflection_matrix(z)]
    if f is Family.Cn:
        return [rotation_matrix_3d(z, 2 * math.pi / n)]
    if f is Family.Cnv:
        return [rotation_matrix_3d(z, 2 * math.pi / n),
                reflection_matrix(np.array([0.0, 1.0, 0.0]))]
    if f is Family.Cnh:
        return [rotation_matrix_3d(z, 2 * math.pi / n), reflection_matrix(z)]
    if f is Family.S2n:
        return [reflection_matrix(z) @ rotation_matrix_3d(z, math.pi / n)]
    if f is Family.Dn:
        return [rotation_matrix_3d(z, 2 * math.pi / n),
                rotation_matrix_3d(x, math.pi)]
    if f is Family.Dnh:
        return _generators(group(Family.Dn, n)) + [reflection_matrix(z)]
    if f is Family.Dnd:
        # diagonal mirror between the x twofold axis and its neighbour
        a = math.pi / (2 * n)
        normal = np.array([-math.sin(a), math.cos(a), 0.0])
        return _generators(group(Family.Dn, n)) + [reflection_matrix(normal)]
    if f is Family.T:
        return [rotation_matrix_3d(z, math.pi),
                rotation_matrix_3d(body, 2 * math.pi / 3)]
    if f is Family.Td:
        return _generators(GroupId(Family.T)) + \
            [reflection_matrix(np.array([1.0, -1.0, 0.0]))]
    if f is Family.Th:
        return _generators(GroupId(Family.T)) + [-np.eye(3)]
    if f is Family.O:
        return [rotation_matrix_3d(z, math.pi / 2),
                rotation_matrix_3d(body, 2 * math.pi / 3)]
    if f is Family.Oh:
        return _generators(GroupId(Family.O)) + [-np.eye(3)]
    if f is Family.Y:
        phi = (1.0 + math.sqrt(5.0)) / 2.0
        five = np.array([0.0, 1.0, phi])
        return [rotation_matrix_3d(five, 2 * math.pi / 5),
                rotation_matrix_3d(body, 2 * math.pi / 3)]
    if f is Family.Yh:
        return _generators(GroupId(Family.Y)) + [-np.eye(3)]
    raise GroupError(f"{g} is infinite; use the analytic path")


@lru_cache(maxsize=None)
def elements(g: GroupId) -> tuple[GroupElement, ...]:
    """All elements of a finite group in standard orientation.

    Generated by closing the family generator set under composition, with
    matrix-proximity deduplication; the count is checked against the known
    group order.
    """
    if not is_finite(g):
        raise GroupError(f"{g} is infinite; use the analytic path")
    mats = close_under_composition(_generators(g))
    if len(mats) != group_order(g):
        raise GroupError(f"closure of {g} produced {len(mats)} elements, "
                         f"expected {group_order(g)}")
    elems = [element_from_matrix(m) for m in mats]
    elems.sort(key=lambda e: (e.improper, round(abs(e.angle), 9),
                              round(e.angle, 9),
                              tuple(round(x, 9) for x in e.axis)))
    return tuple(elems)


def element_matrices(g: GroupId) -> np.ndarray:
    return np.array([e.matrix() for e in elements(g)])
