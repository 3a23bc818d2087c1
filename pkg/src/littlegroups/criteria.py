"""Chain criteria for little-group identification.

Three criteria are implemented over the subgroup lattice: the plain
subduction-count comparison, its normalizer-corrected refinement, and the
massive chain criterion, which compares massive subduction frequencies
fm = c - f0 along every adjacent supergroup chain.  The massless count f0 is
the number of invariant components that are rotationally equivalent to other
invariants, min(c - 1, fbar) with fbar the axis-freedom count of the group.

The first two criteria are evaluated in their historical single-witness-chain
form by default (one adjacent supergroup with fewer invariants suffices),
which reproduces their documented false positives such as D2 at rank 3; the
massive criterion always checks every chain.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .groups import (Family, GroupId, dims, lie_dim, normalizer_dim,
                     group_order, inversion_lift, is_finite)
from .characters import (Irrep, SubductionResult, so3_irrep, o3_irrep,
                         subduction_frequency, rep_vectors,
                         RepVectorUnavailable, T_SUBDUCTION,
                         T_LATTICE_ADJACENCY)
from .lattice import LatticeSlice, subgroups


@dataclass(frozen=True)
class LittleGroupEntry:
    group: GroupId
    c: int
    f0: int
    fm: int
    stratum_dim: int
    rep_vector: tuple[str, ...] | None = None
    notes: tuple[str, ...] = ()


@dataclass(frozen=True)
class CriterionVerdict:
    group: GroupId
    passes: bool
    failing_chains: tuple[tuple[GroupId, int, int], ...]

    def __post_init__(self):
        assert self.passes == (len(self.failing_chains) == 0)


def massless_frequency(h: GroupId, irrep: Irrep) -> int:
    """f0 = min(c - 1, fbar) when c >= 1, else 0."""
    c = subduction_frequency(h, irrep)
    if c < 1:
        return 0
    return min(c - 1, dims(h).fbar)


def massive_frequency(h: GroupId, irrep: Irrep) -> int:
    c = subduction_frequency(h, irrep)
    return c - massless_frequency(h, irrep)


def michel(h: GroupId, irrep: Irrep, slice_: LatticeSlice,
           mode: str = "any_chain") -> CriterionVerdict:
    """Subduction-count chain criterion: c(H') < c(H) along the chain.

    mode "any_chain" (historical): one adjacent supergroup satisfying the
    inequality suffices.  mode "all_chains": every adjacent supergroup must.
    """
    return _chain_criterion(h, irrep, slice_, mode,
                            lambda g: subduction_frequency(g, irrep))


def ihrig_golubitsky(h: GroupId, irrep: Irrep, slice_: LatticeSlice,
                     mode: str = "any_chain") -> CriterionVerdict:
    """Normalizer-corrected chain criterion.

    Passes when c(H') - dimN(H') < c(H) - dimN(H, H') along the chain, with
    dimN(H, H') = dimN(H) + dim H' - dim H except for a finite single-axis
    group under an infinite axial one, where dimN(H, H') = dimN(H).
    """
    def lhs(sup):
        return subduction_frequency(sup, irrep) - normalizer_dim(sup)

    def rhs(sup):
        corr = _dim_n_pair(h, sup)
        return subduction_frequency(h, irrep) - corr

    return _chain_criterion(h, irrep, slice_, mode, None, lhs=lhs, rhs=rhs)


_SINGLE_AXIS_FINITE = {Family.Cn, Family.Cnh, Family.S2n, Family.Cs}


def _dim_n_pair(h: GroupId, sup: GroupId) -> int:
    if h.family in _SINGLE_AXIS_FINITE and lie_dim(sup) == 1:
        return normalizer_dim(h)
    return normalizer_dim(h) + lie_dim(sup) - lie_dim(h)


def massive(h: GroupId, irrep: Irrep, slice_: LatticeSlice) -> CriterionVerdict:
    """Massive chain criterion: fm(H') < fm(H) for every adjacent supergroup."""
    return _chain_criterion(h, irrep, slice_, "all_chains",
                            lambda g: massive_frequency(g, irrep))


def _chain_criterion(h, irrep, slice_, mode, score, lhs=None, rhs=None):
    if score is not None:
        lhs = score
        rhs = lambda sup: score(h)          # noqa: E731
    c = subduction_frequency(h, irrep)
    if c < 1:
        return CriterionVerdict(h, False, ((h, 0, 0),))
    sups = slice_.adjacent_supergroups(h)
    failures = tuple((sup, lhs(sup), rhs(sup))
                     for sup in sups if not lhs(sup) < rhs(sup))
    if mode == "all_chains":
        return CriterionVerdict(h, not failures, failures)
    if mode == "any_chain":
        if not sups or len(failures) < len(sups):
            return CriterionVerdict(h, True, ())
        return CriterionVerdict(h, False, failures)
    raise ValueError(f"unknown criterion mode {mode!r}")


# ---------------------------------------------------------------------------
# enumeration

def default_n_max(l: int) -> int:
    """Slice truncation for rank l: cyclic and dihedral groups gain nothing
    beyond n = l, and the margin keeps every candidate's true adjacent
    supergroups (such as C2n above Cn) inside the slice."""
    return max(2 * l + 1, 6)


def stratum_dimension(entry: LittleGroupEntry) -> int:
    """Orbit plus massive dimensions: (3 - dim H) + fm."""
    return (3 - lie_dim(entry.group)) + entry.fm


def _entry_for(h: GroupId, irrep: Irrep) -> LittleGroupEntry:
    c = subduction_frequency(h, irrep)
    f0 = massless_frequency(h, irrep)
    fm = c - f0
    notes = ()
    dimv = irrep.dim
    f0_paper = min(dimv - 1, dims(h).fbar) if c >= 1 else 0
    if f0_paper != f0:
        notes = (f"f0 variant: min(c-1,fbar)={f0} vs min(dimV-1,fbar)={f0_paper}",)
    try:
        vec = rep_vectors(h, irrep)
    except RepVectorUnavailable:
        vec = None
    entry = LittleGroupEntry(group=h, c=c, f0=f0, fm=fm, stratum_dim=0,
                             rep_vector=vec, notes=notes)
    return LittleGroupEntry(group=h, c=c, f0=f0, fm=fm,
                            stratum_dim=stratum_dimension(entry),
                            rep_vector=vec, notes=notes)


def _sort_key(entry: LittleGroupEntry):
    g = entry.group
    order = group_order(g)
    if not is_finite(g):
        rank = {Family.O3: 0, Family.SO3: 1, Family.Dinfh: 2, Family.Dinf: 3,
                Family.Cinfv: 4, Family.Cinfh: 5, Family.Cinf: 6}[g.family]
        return (0, rank, 0, "")
    return (1, 0, -order, g.family.value + f"{g.n or 0:03d}")


@lru_cache(maxsize=None)
def massive_little_groups(parent: GroupId, irrep: Irrep,
                          n_max: int | None = None) -> tuple[LittleGroupEntry, ...]:
    """All little groups of an SO(3) or O(3) irrep by the massive criterion.

    A subgroup is emitted when it has at least one invariant and its massive
    frequency strictly exceeds that of every adjacent supergroup in the slice.
    """
    if parent.family not in (Family.SO3, Family.O3):
        raise ValueError("parent must be SO3 or O3")
    if irrep.parent != parent:
        raise ValueError("irrep does not belong to the requested parent")
    l = irrep.l
    if n_max is None:
        n_max = default_n_max(l)
    slice_ = subgroups(parent, n_max)
    out = []
    for h in slice_.nodes:
        if subduction_frequency(h, irrep) < 1:
            continue
        if massive(h, irrep, slice_).passes:
            out.append(_entry_for(h, irrep))
    out.sort(key=_sort_key)
    return tuple(out)


def parity_lift(entries: tuple[LittleGroupEntry, ...]) -> tuple[LittleGroupEntry, ...]:
    """Map SO(3) little groups to the positive-parity O(3) ones.

    Each group goes to the group it generates with the inversion; frequencies
    and representation vectors are unchanged.
    """
    return tuple(
        LittleGroupEntry(group=inversion_lift(e.group), c=e.c, f0=e.f0,
                         fm=e.fm, stratum_dim=e.stratum_dim,
                         rep_vector=e.rep_vector, notes=e.notes)
        for e in entries)


def so3_little_groups(l: int, n_max: int | None = None):
    return massive_little_groups(GroupId(Family.SO3), so3_irrep(l), n_max)


def o3_little_groups(l: int, parity: int, n_max: int | None = None):
    return massive_little_groups(GroupId(Family.O3), o3_irrep(l, parity), n_max)


# ---------------------------------------------------------------------------
# finite worked example: little groups of the tetrahedral group itself

def tetrahedral_little_groups() -> dict[str, list[tuple[str, int]]]:
    """Little groups of the T irreps over the chain lattice T > D2, C3 > ...

    Multiplicities are the dimensions of the most general invariant vectors
    (no massless components arise for a finite parent).  Every chain is
    checked; for this lattice the single-chain reading agrees.
    """
    orders = {"T": 12, "D2": 4, "C3": 3, "C2": 2, "C1": 1}
    out = {}
    for irrep, c_map in T_SUBDUCTION.items():
        found = []
        for h, sups in T_LATTICE_ADJACENCY.items():
            c = c_map[h]
            if c < 1:
                continue
            if all(c_map[s] < c for s in sups):
                found.append((h, c))
        found.sort(key=lambda t: -orders[t[0]])
        out[irrep] = found
    return out
