"""Characters of SO(3)/O(3) irreps and subduction frequencies.

A subduction frequency c(H) counts the occurrences of the identity irrep of H
inside a rank-l irrep restricted to H.  Three routes are provided: the Weyl
trace formula over explicit elements, closed floor-function formulas, and
analytic counting for the infinite groups.  The closed forms and the trace
route are kept independent so they can cross-check each other.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from functools import lru_cache

from .groups import (Family, GroupError, GroupId, GroupElement, elements,
                     extended_rotation, contains_inversion, canonicalize_label,
                     group, is_finite, is_proper, rotation_part, inversion_lift)

SO3 = GroupId(Family.SO3)
O3 = GroupId(Family.O3)

_AXIAL_PARENTS = {Family.Cinf, Family.Cinfh, Family.Cinfv,
                  Family.Dinf, Family.Dinfh}


class IrrepError(ValueError):
    pass


class InternalConsistencyError(RuntimeError):
    """Two routes to the same quantity disagreed beyond tolerance."""


@dataclass(frozen=True)
class Irrep:
    """Irrep label of SO(3), O(3) or one of the infinite axial groups.

    label is: l for SO(3); (l, parity) for O(3); m for Cinf; (m, parity) for
    Cinfh; m >= 0 for Cinfv; "A1" | "A2" | ("E", n) for Dinf; and
    (name, parity) with the same names for Dinfh.
    """

    parent: GroupId
    label: object

    @property
    def l(self) -> int:
        if self.parent.family is Family.SO3:
            return self.label
        if self.parent.family is Family.O3:
            return self.label[0]
        raise IrrepError(f"no rank for irrep of {self.parent}")

    @property
    def parity(self) -> int:
        if self.parent.family is Family.O3:
            return self.label[1]
        raise IrrepError(f"no parity for irrep of {self.parent}")

    @property
    def dim(self) -> int:
        f = self.parent.family
        if f is Family.SO3:
            return 2 * self.label + 1
        if f is Family.O3:
            return 2 * self.label[0] + 1
        if f is Family.Cinf:
            return 1
        if f is Family.Cinfh:
            return 1
        if f is Family.Cinfv:
            return 1 if self.label == 0 else 2
        name = self.label if f is Family.Dinf else self.label[0]
        return 1 if name in ("A1", "A2") else 2

    def __str__(self):
        f = self.parent.family
        if f is Family.SO3:
            return str(self.label)
        if f is Family.O3:
            l, p = self.label
            return f"{l}{'+' if p > 0 else '-'}"
        if f is Family.Cinf or f is Family.Cinfv:
            return str(self.label)
        if f is Family.Cinfh:
            m, p = self.label
            return f"{m}{'+' if p > 0 else '-'}"
        if f is Family.Dinf:
            name = self.label
            return name if isinstance(name, str) else f"E{name[1]}"
        name, p = self.label
        text = name if isinstance(name, str) else f"E{name[1]}"
        return f"{text}{'+' if p > 0 else '-'}"


def so3_irrep(l: int) -> Irrep:
    if l < 0:
        raise IrrepError("l must be >= 0")
    return Irrep(SO3, l)


def o3_irrep(l: int, parity: int) -> Irrep:
    if l < 0 or parity not in (1, -1):
        raise IrrepError("need l >= 0 and parity +1/-1")
    return Irrep(O3, (l, parity))


def parse_irrep(parent: GroupId, text: str) -> Irrep:
    """Parse the command-line spelling of an irrep of the given parent."""
    s = text.strip()
    f = parent.family
    try:
        if f is Family.SO3:
            return so3_irrep(int(s))
        if f is Family.O3:
            return o3_irrep(int(s[:-1]), {"+": 1, "-": -1}[s[-1]])
        if f is Family.Cinf:
            return Irrep(parent, int(s))
        if f is Family.Cinfh:
            return Irrep(parent, (int(s[:-1]), {"+": 1, "-": -1}[s[-1]]))
        if f is Family.Cinfv:
            m = int(s)
            if m < 0:
                raise IrrepError("Cinfv labels are m >= 0")
            return Irrep(parent, m)
        if f in (Family.Dinf, Family.Dinfh):
            if f is Family.Dinfh:
                sign = {"+": 1, "-": -1}[s[-1]]
                s = s[:-1]
            name = s.upper()
            if name in ("A1", "A2"):
                lab = name
            elif name.startswith("E"):
                n = int(name[1:])
                if n < 1:
                    raise IrrepError("En needs n >= 1")
                lab = ("E", n)
            else:
                raise IrrepError(f"bad axial label {text!r}")
            return Irrep(parent, lab if f is Family.Dinf else (lab, sign))
    except (ValueError, KeyError, IndexError) as exc:
        raise IrrepError(f"cannot parse irrep {text!r} for {parent}") from exc
    raise IrrepError(f"{parent} has no irreps here")


# ---------------------------------------------------------------------------
# characters

def chi_rotation(l: int, phi: float) -> float:
    """Character of a rank-l rotation by phi: sin((l+1/2)phi)/sin(phi/2).

    Near phi = 0 mod 2pi the equivalent cosine sum is used to avoid 0/0.
    """
    s = math.sin(phi / 2.0)
    if abs(s) < 1e-6:
        return 1.0 + 2.0 * sum(math.cos(m * phi) for m in range(1, l + 1))
    return math.sin((l + 0.5) * phi) / s


def chi_o3(irrep: Irrep, e: GroupElement) -> float:
    """O(3) irrep character of an explicit element.

    Improper elements factor as inversion times a rotation, and the inversion
    contributes the parity sign; hence parity * chi_rotation(l, proper angle).
    """
    l, parity = irrep.label
    value = chi_rotation(l, e.angle)
    return parity * value if e.improper else value


def chi_element(irrep: Irrep, e: GroupElement) -> float:
    if irrep.parent.family is Family.SO3:
        if e.improper:
            raise IrrepError("SO(3) irreps have no improper elements")
        return chi_rotation(irrep.label, e.angle)
    if irrep.parent.family is Family.O3:
        return chi_o3(irrep, e)
    raise IrrepError(f"no character rule for irreps of {irrep.parent}")


class Method(Enum):
    TRACE = "trace"
    CLOSED_FORM = "closed_form"
    ANALYTIC_CONTINUOUS = "analytic_continuous"


@dataclass(frozen=True)
class SubductionResult:
    c: int
    method: Method


_INT_TOL = 1e-6


@lru_cache(maxsize=None)
def subduce_trace(h: GroupId, irrep: Irrep) -> SubductionResult:
    """Weyl trace formula: c = (1/|H|) sum over H of the character."""
    if not is_finite(h):
        raise GroupError(f"{h} is infinite; use subduce_continuous")
    total = sum(chi_element(irrep, e) for e in elements(h))
    avg = total / len(elements(h))
    c = round(avg)
    if abs(avg - c) > _INT_TOL:
        raise InternalConsistencyError(
            f"trace average {avg} for ({h}, {irrep}) is not an integer")
    return SubductionResult(int(c), Method.TRACE)


def _c_proper(g: GroupId, l: int) -> int:
    """Closed-form SO(3) subduction frequency of a proper group."""
    f, n = g.family, g.n
    if f is Family.C1:
        return 2 * l + 1
    if f is Family.Cn:
        return 2 * (l // n) + 1
    if f is Family.Dn:
        return l // n + (1 if l % 2 == 0 else 0)
    if f is Family.T:
        return 2 * (l // 3) + l // 2 - l + 1
    if f is Family.O:
        return l // 4 + l // 3 + l // 2 - l + 1
    if f is Family.Y:
        return l // 5 + l // 3 + l // 2 - l + 1
    if f is Family.Cinf:
        return 1
    if f is Family.Dinf:
        return 1 if l % 2 == 0 else 0
    if f is Family.SO3:
        return 1 if l == 0 else 0
    raise GroupError(f"{g} is not a proper rotation group")


class UnsupportedClosedForm(GroupError):
    pass


def subduce_closed(h: GroupId, irrep: Irrep) -> SubductionResult:
    """Floor-function subduction formulas (tabulated families).

    For SO(3) irreps these are the proper-group formulas; for O(3) the
    negative-parity forms of the improper families are included.  The Cs
    frequency is the n = 1 case of the Cnh formula (the tabulated form leaves
    n undefined; the trace formula fixes it, see the discrepancy ledger).
    """
    pf = irrep.parent.family
    f, n = h.family, h.n
    if pf is Family.SO3:
        if not is_proper(h):
            raise UnsupportedClosedForm(
                f"{h} is not a subgroup of SO(3)")
        return SubductionResult(_c_proper(h, irrep.label), Method.CLOSED_FORM)
    if pf is not Family.O3:
        raise UnsupportedClosedForm(f"no closed forms for parent {irrep.parent}")
    l, parity = irrep.label
    if is_proper(h):
        return SubductionResult(_c_proper(h, l), Method.CLOSED_FORM)
    if contains_inversion(h):
        c = _c_proper(rotation_part(h), l) if parity > 0 else 0
        return SubductionResult(c, Method.CLOSED_FORM)
    # improper without inversion
    if parity > 0:
        return SubductionResult(_c_proper(extended_rotation(h), l),
                                Method.CLOSED_FORM)
    if f is Family.Td:
        c = (l + 2) // 4 + l // 3 + (l + 1) // 2 - l
    elif f is Family.Cs:
        c = l if l % 2 == 0 else l + 1          # Cnh formula at n = 1
    elif f is Family.Cnv:
        c = l // n + (0 if l % 2 == 0 else 1)
    elif f in (Family.Cnh, Family.S2n):
        c = 2 * ((l + n) // (2 * n))
    elif f in (Family.Dnd, Family.Dnh):
        c = (l + n) // (2 * n)
    else:
        raise UnsupportedClosedForm(f"no closed form for {h}")
    return SubductionResult(c, Method.CLOSED_FORM)


def subduce_continuous(h: GroupId, irrep: Irrep) -> SubductionResult:
    """Analytic counting for the infinite subgroups of O(3)."""
    pf = irrep.parent.family
    f = h.family
    if pf is Family.SO3:
        l = irrep.label
        if f not in (Family.Cinf, Family.Dinf, Family.SO3):
            raise GroupError(f"{h} is not a subgroup of SO(3)")
        return SubductionResult(_c_proper(h, l), Method.ANALYTIC_CONTINUOUS)
    if pf is not Family.O3:
        raise GroupError(f"no continuous counting for parent {irrep.parent}")
    l, parity = irrep.label
    natural = 1 if parity == (-1) ** l else 0
    table = {
        Family.Cinf: 1,
        Family.Cinfv: natural,
        Family.Cinfh: 1 if parity > 0 else 0,
        Family.Dinf: 1 if l % 2 == 0 else 0,
        Family.Dinfh: 1 if (l % 2 == 0 and parity > 0) else 0,
        Family.SO3: 1 if l == 0 else 0,
        Family.O3: 1 if (l == 0 and parity > 0) else 0,
    }
    if f not in table:
        raise GroupError(f"{h} is not an infinite subgroup of O(3)")
    return SubductionResult(table[f], Method.ANALYTIC_CONTINUOUS)


def subduce(h: GroupId, irrep: Irrep) -> SubductionResult:
    """Subduction frequency via the best available route."""
    if not is_finite(h):
        return subduce_continuous(h, irrep)
    try:
        return subduce_closed(h, irrep)
    except UnsupportedClosedForm:
        return subduce_trace(h, irrep)


def subduction_frequency(h: GroupId, irrep: Irrep) -> int:
    return subduce(h, irrep).c


# ---------------------------------------------------------------------------
# representation vectors (most general massive coefficient patterns)

class RepVectorUnavailable(GroupError):
    pass


def _sign_for(l: int, m: int) -> str:
    # the sign that keeps the secondary twofold axis along x
    return "+" if (l + m) % 2 == 0 else "-"


def _pattern_dn(l: int, n: int) -> tuple[str, ...]:
    ms = [k * n for k in range(1, l // n + 1)]
    core = tuple(f"{m}{_sign_for(l, m)}" for m in ms)
    return (("0",) + core) if l % 2 == 0 else core


def _pattern_cn(l: int, n: int) -> tuple[str, ...]:
    out = ["0"]
    for k in range(1, l // n + 1):
        m = k * n
        out.append(f"{m}+")
        if k > 1:
            out.append(f"{m}-")
    return tuple(out)


def _pattern_c1(l: int) -> tuple[str, ...]:
    out = ["0", "2+"]
    for m in range(3, l + 1):
        out.append(f"{m}+")
        out.append(f"{m}-")
    return tuple(out)


def _y_special(l: int) -> bool:
    return l in (6, 10, 12, 15, 16, 18) or 20 <= l <= 22 or 24 <= l <= 28


def is_tabulated_little_group(h: GroupId, irrep: Irrep) -> bool:
    """Little-group applicability ranges of the closed-form tables."""
    pf = irrep.parent.family
    f, n = h.family, h.n
    if pf is Family.SO3:
        l = irrep.label
        if f is Family.SO3:
            return l == 0
        if f is Family.Y:
            return l >= 30 or _y_special(l)
        if f is Family.O:
            return l >= 12 or l in (4, 6, 8, 9, 10)
        if f is Family.T:
            return l >= 9 or l in (3, 6, 7)
        if f is Family.Dinf:
            return l % 2 == 0 and l >= 2
        if f is Family.Cinf:
            return l % 2 == 1
        if f is Family.Dn:
            if l % 2 == 1:
                return 2 <= n <= l and (l >= 4 or n == l == 3)
            return 2 <= n <= l and (l >= 4 or n == l == 2)
        if f is Family.Cn:
            return 2 <= n <= (l // 2 if l % 2 == 0 else l)
        if f is Family.C1:
            return l >= 3
        return False
    if pf is not Family.O3:
        return False
    l, parity = irrep.label
    if parity > 0:
        # inversion lifts of the SO(3) table
        try:
            proper = rotation_part(h)
        except GroupError:
            return False
        if not contains_inversion(h) and h.family is not Family.O3:
            return False
        if h.family is Family.O3:
            return l == 0
        if inversion_lift(proper) != h:
            return False
        return is_tabulated_little_group(proper, so3_irrep(l))
    if f is Family.SO3:
        return l == 0
    if f is Family.Y:
        return l > 0 and (l >= 30 or _y_special(l))
    if f is Family.O:
        return l >= 12 or l in (4, 6, 8, 9, 10)
    if f is Family.Td:
        return l >= 9 or l in (3, 6, 7)
    if f is Family.T:
        return l >= 12 or l in (6, 9, 10)
    if f is Family.Dinf:
        return l % 2 == 0 and l >= 2
    if f is Family.Cinfv:
        return l % 2 == 1
    if f is Family.Dnd:
        return n % 2 == 0 and 2 <= n <= l and (l >= 4 or n == l == 2)
    if f is Family.Dnh:
        return n % 2 == 1 and 2 <= n <= l and (l >= 4 or n == l == 3)
    if f is Family.Dn:
        return 2 <= n <= (l if l % 2 == 0 else l // 2)
    if f is Family.Cnv:
        return 2 <= n <= (l // 2 if l % 2 == 0 else l)
    if f is Family.Cnh:
        return n % 2 == 1 and 3 <= n <= l // 3
    if f is Family.S2n:
        return n % 2 == 0 and 2 <= n <= l // 3
    if f is Family.Cs:
        return l >= 3
    if f is Family.Cn:
        return 2 <= n <= l // 2
    if f is Family.C1:
        return l >= 3
    return False


def rep_vectors(h: GroupId, irrep: Irrep) -> tuple[str, ...]:
    """Tesseral labels of the most general massive vector for (h, irrep).

    Signs follow the standard orientation (secondary twofold axis or mirror
    through x): the Z_m component keeps the sign that is even under that
    operation.  The single-axis families have one massless component removed,
    by convention the lowest minus label.
    """
    if not is_tabulated_little_group(h, irrep):
        raise RepVectorUnavailable(
            f"({h}, {irrep}) is not a tabulated little-group pair")
    f, n = h.family, h.n
    pf = irrep.parent.family
    if f in (Family.T, Family.O, Family.Y, Family.Td, Family.Th,
             Family.Oh, Family.Yh):
        raise RepVectorUnavailable(
            f"{h} vectors are special combinations; use invariant_basis")
    if pf is Family.SO3:
        l = irrep.label
        if f is Family.SO3:
            return ()
        if f in (Family.Dinf, Family.Cinf):
            return ("0",)
        if f is Family.Dn:
            return _pattern_dn(l, n)
        if f is Family.Cn:
            return _pattern_cn(l, n)
        if f is Family.C1:
            return _pattern_c1(l)
    l, parity = irrep.label
    if parity > 0:
        if h.family is Family.O3:
            return ()
        return rep_vectors(rotation_part(h), so3_irrep(l))
    if f is Family.SO3:
        return ()
    if f in (Family.Dinf, Family.Cinfv):
        return ("0",)
    if f is Family.Dn:
        return _pattern_dn(l, n)
    if f is Family.Cn:
        return _pattern_cn(l, n)
    if f is Family.C1:
        return _pattern_c1(l)
    if f in (Family.Dnd, Family.Dnh):
        ms = [k * n for k in range(1, l // n + 1, 2)]
        return tuple(f"{m}{_sign_for(l, m)}" for m in ms)
    if f is Family.Cnv:
        ms = [k * n for k in range(1, l // n + 1)]
        if l % 2 == 0:
            return tuple(f"{m}-" for m in ms)
        return ("0",) + tuple(f"{m}+" for m in ms)
    if f in (Family.Cnh, Family.S2n):
        out = [f"{n}+"]
        for k in range(3, l // n + 1, 2):
            out.append(f"{k * n}+")
            out.append(f"{k * n}-")
        return tuple(out)
    if f is Family.Cs:
        if l % 2 == 0:
            return tuple(f"{m}-" for m in range(2, l + 1))
        return ("0",) + tuple(f"{m}+" for m in range(2, l + 1))
    raise RepVectorUnavailable(f"no vector pattern for ({h}, {irrep})")


# ---------------------------------------------------------------------------
# character data of the tetrahedral group (for the finite worked example)

# subduction frequencies of the T irreps on the subgroup chain
# T > D2 > C2 > C1 and T > C3 > C1
T_SUBDUCTION = {
    "A": {"T": 1, "D2": 1, "C3": 1, "C2": 1, "C1": 1},
    "E": {"T": 0, "D2": 1, "C3": 0, "C2": 1, "C1": 1},
    "F": {"T": 0, "D2": 0, "C3": 1, "C2": 1, "C1": 3},
}

T_LATTICE_ADJACENCY = {
    "C1": ("C2", "C3"),
    "C2": ("D2",),
    "C3": ("T",),
    "D2": ("T",),
    "T": (),
}
