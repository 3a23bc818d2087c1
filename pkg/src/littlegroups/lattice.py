"""Subgroup relation and adjacency structure among closed subgroups of O(3).

The relation is decided up to conjugacy in O(3) by rules on the structure
descriptors (rotation part, extended rotation group, inversion flag).  Any
group is one of three kinds: proper, inversion-containing (rot x {E,i}), or
improper without inversion, classified by the graded pair (ext, rot) with rot
of index 2 in ext.  Embedding an improper-without-inversion group into another
one must respect the grading (improper elements map to improper elements),
which is where the odd-quotient rules such as D2d < D6d but D2d !< D4d arise.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache

import numpy as np

from .groups import (Family, GroupError, GroupId, group, group_order,
                     is_proper, contains_inversion, rotation_part,
                     extended_rotation, INFINITE_AXIAL, FULL_GROUPS)

_INF = 10 ** 9   # stands for the infinite order parameter in divisibility


def _divides(m: int, n: int) -> bool:
    if n == _INF:
        return True
    return n % m == 0


def _proper_n(g: GroupId) -> int:
    if g.family in (Family.Cinf, Family.Dinf):
        return _INF
    return g.n if g.n is not None else 1


def _proper_sub(h: GroupId, k: GroupId) -> bool:
    """Subgroup relation between proper rotation groups, up to conjugacy."""
    hf, kf = h.family, k.family
    if hf is Family.C1:
        return True
    if kf is Family.SO3:
        return True
    if hf is Family.SO3:
        return False
    hn, kn = _proper_n(h), _proper_n(k)
    if kf in (Family.Cn, Family.Cinf):
        return hf in (Family.Cn, Family.Cinf) and _divides(hn, kn)
    if kf in (Family.Dn, Family.Dinf):
        if hf in (Family.Cn, Family.Cinf):
            return _divides(hn, kn) or hn == 2
        if hf in (Family.Dn, Family.Dinf):
            return _divides(hn, kn)
        return False
    if hf in (Family.Cinf, Family.Dinf):
        return False
    poly = {Family.T: ((2, 3), (2,), (Family.T,)),
            Family.O: ((2, 3, 4), (2, 3, 4), (Family.T, Family.O)),
            Family.Y: ((2, 3, 5), (2, 3, 5), (Family.T, Family.Y))}
    if kf in poly:
        cyc, dih, polys = poly[kf]
        if hf is Family.Cn:
            return hn in cyc
        if hf is Family.Dn:
            return hn in dih
        return hf in polys
    return False


def _graded_shape(g: GroupId):
    """Shape key of an improper group without inversion.

    ("cyc", m): cyclic pair (C2m, Cm); Cs is m = 1, S2n even n, Cnh odd n.
    ("pyr", m): pyramidal pair (Dm, Cm) = Cmv.
    ("pri", m): prismatic pair (D2m, Dm) = Dmh odd m or Dmd even m.
    ("td",): the pair (O, T).  ("cinfv",): the pair (Dinf, Cinf).
    """
    f, n = g.family, g.n
    if f is Family.Cs:
        return ("cyc", 1)
    if f in (Family.S2n, Family.Cnh):
        return ("cyc", n)
    if f is Family.Cnv:
        return ("pyr", n)
    if f in (Family.Dnh, Family.Dnd):
        return ("pri", n)
    if f is Family.Td:
        return ("td",)
    if f is Family.Cinfv:
        return ("cinfv",)
    raise GroupError(f"{g} has an inversion or is proper")


def _graded_sub(h: GroupId, k: GroupId) -> bool:
    """Graded embedding between improper groups without inversion."""
    hs, ks = _graded_shape(h), _graded_shape(k)
    if ks[0] == "cyc":
        if hs[0] != "cyc":
            return False
        m, n = hs[1], ks[1]
        return n % m == 0 and (n // m) % 2 == 1
    if ks[0] == "pyr":
        if hs[0] == "cyc":
            return hs[1] == 1
        if hs[0] == "pyr":
            return ks[1] % hs[1] == 0
        return False
    if ks[0] == "pri":
        n = ks[1]
        if hs[0] == "cyc":
            m = hs[1]
            return m == 1 or (n % m == 0 and (n // m) % 2 == 1)
        if hs[0] == "pyr":
            return n % hs[1] == 0 or hs[1] == 2
        if hs[0] == "pri":
            m = hs[1]
            return n % m == 0 and (n // m) % 2 == 1
        return False
    if ks[0] == "td":
        if hs[0] == "cyc":
            return hs[1] in (1, 2)
        if hs[0] == "pyr":
            return hs[1] in (2, 3)
        if hs[0] == "pri":
            return hs[1] == 2
        return hs[0] == "td"
    if ks[0] == "cinfv":
        if hs[0] == "cyc":
            return hs[1] == 1
        return hs[0] in ("pyr", "cinfv")
    return False


@lru_cache(maxsize=None)
def is_subgroup(h: GroupId, k: GroupId) -> bool:
    """Whether h embeds in k as a subgroup, up to conjugacy in O(3)."""
    if h == k:
        return True
    if is_proper(h):
        return _proper_sub(h, rotation_part(k))
    if contains_inversion(h):
        return contains_inversion(k) and _proper_sub(rotation_part(h),
                                                     rotation_part(k))
    if is_proper(k):
        return False
    if contains_inversion(k):
        return _proper_sub(extended_rotation(h), rotation_part(k))
    return _graded_sub(h, k)


# ---------------------------------------------------------------------------
# finite slices of the lattice

@dataclass(frozen=True)
class LatticeSlice:
    """Subgroups of a parent instantiated up to n_max, with adjacency.

    adjacency maps each node to its adjacent strict supergroups within the
    slice (transitive reduction of the subgroup relation).
    """

    parent: GroupId
    n_max: int
    nodes: tuple[GroupId, ...]
    adjacency: dict = field(hash=False, compare=False, default=None)

    def adjacent_supergroups(self, h: GroupId) -> tuple[GroupId, ...]:
        if h not in self.adjacency:
            raise GroupError(f"{h} is not a node of this slice")
        return self.adjacency[h]


def candidate_groups(n_max: int) -> list[GroupId]:
    """All catalogued groups with parameter at most n_max."""
    out = [GroupId(f) for f in (Family.C1, Family.Ci, Family.Cs, Family.T,
                                Family.Td, Family.Th, Family.O, Family.Oh,
                                Family.Y, Family.Yh, Family.Cinf, Family.Cinfh,
                                Family.Cinfv, Family.Dinf, Family.Dinfh,
                                Family.SO3, Family.O3)]
    for f in (Family.Cn, Family.Cnh, Family.Cnv, Family.S2n,
              Family.Dn, Family.Dnh, Family.Dnd):
        for n in range(2, n_max + 1):
            out.append(GroupId(f, n))
    return out


def _node_sort_key(g: GroupId):
    order = group_order(g)
    inf_rank = {Family.O3: 0, Family.SO3: 1, Family.Dinfh: 2, Family.Dinf: 3,
                Family.Cinfv: 4, Family.Cinfh: 5, Family.Cinf: 6}
    if g.family in inf_rank:
        return (0, inf_rank[g.family], 0, "")
    return (1, 0, -order, g.family.value + f"{g.n or 0:03d}")


@lru_cache(maxsize=64)
def subgroups(parent: GroupId, n_max: int) -> LatticeSlice:
    """The slice of all catalogued subgroups of parent with n <= n_max."""
    if n_max < 2:
        raise GroupError("n_max must be >= 2")
    nodes = tuple(sorted((g for g in candidate_groups(n_max)
                          if is_subgroup(g, parent)), key=_node_sort_key))
    idx = {g: i for i, g in enumerate(nodes)}
    n = len(nodes)
    sub = np.zeros((n, n), dtype=bool)
    for i, a in enumerate(nodes):
        for j, b in enumerate(nodes):
            if i != j and is_subgroup(a, b):
                sub[i, j] = True
    # transitive reduction: drop edges with an intermediate node
    via = (sub.astype(np.int32) @ sub.astype(np.int32)) > 0
    adj = sub & ~via
    adjacency = {}
    for i, a in enumerate(nodes):
        adjacency[a] = tuple(nodes[j] for j in np.nonzero(adj[i])[0])
    return LatticeSlice(parent=parent, n_max=n_max, nodes=nodes,
                        adjacency=adjacency)


def adjacent_supergroups(h: GroupId, slice_: LatticeSlice) -> tuple[GroupId, ...]:
    return slice_.adjacent_supergroups(h)


def export_graph(slice_: LatticeSlice) -> str:
    """Render a slice as a text graph: one node or edge per line.

    Format: a header comment, then ``node <label>`` lines, then
    ``edge <subgroup> <supergroup>`` lines (adjacency edges only).
    """
    lines = [f"# lattice slice parent={slice_.parent} n_max={slice_.n_max}",
             f"# nodes={len(slice_.nodes)}"]
    for g in slice_.nodes:
        lines.append(f"node {g}")
    for g in slice_.nodes:
        for s in slice_.adjacency[g]:
            lines.append(f"edge {g} {s}")
    return "\n".join(lines) + "\n"
