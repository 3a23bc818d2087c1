"""Element-level embedding oracle for finite groups.

Searches for an orthogonal conjugation mapping the elements of one finite
group into another's element set, by aligning pairs of symmetry axes.  Used
to validate the rule-based subgroup relation; slower but assumption-free.
"""

from __future__ import annotations

import math
from functools import lru_cache

import numpy as np

from .groups import GroupId, elements, group_order, is_finite


def _axis_of(e) -> np.ndarray:
    return np.asarray(e.axis)


def _feature_elements(g: GroupId):
    """Non-identity elements sorted by decreasing selectivity (rotation
    angle closest to a high order first)."""
    feats = [e for e in elements(g)
             if not (abs(e.angle) < 1e-12 and not e.improper)]
    feats = [e for e in feats if abs(e.angle) > 1e-12 or e.improper]
    # drop the pure inversion: it is conjugation invariant
    feats = [e for e in feats if abs(e.angle) > 1e-12]
    feats.sort(key=lambda e: (e.improper, -abs(e.angle)))
    return feats


def _type_key(e) -> tuple:
    return (e.improper, round(abs(e.angle), 9))


def _frame(u: np.ndarray, v: np.ndarray) -> np.ndarray | None:
    w = v - (v @ u) * u
    n = np.linalg.norm(w)
    if n < 1e-8:
        return None
    w = w / n
    return np.column_stack([u, w, np.cross(u, w)])


@lru_cache(maxsize=None)
def _mats(g: GroupId) -> np.ndarray:
    return np.array([e.matrix() for e in elements(g)])


def _contained(r: np.ndarray, hm: np.ndarray, km: np.ndarray,
               tol: float = 1e-6) -> bool:
    moved = np.einsum("ab,nbc,dc->nad", r, hm, r)
    diff = moved[:, None, :, :] - km[None, :, :, :]
    dist = np.sqrt(np.einsum("nkab,nkab->nk", diff, diff))
    return bool(np.all(dist.min(axis=1) < tol))


def embeds(h: GroupId, k: GroupId) -> bool:
    """Whether some rotation maps every element of h into k's element set."""
    if not (is_finite(h) and is_finite(k)):
        raise ValueError("embedding oracle handles finite groups only")
    if group_order(k) % group_order(h):
        return False
    hm, km = _mats(h), _mats(k)
    hf = _feature_elements(h)
    if not hf:
        # C1 or Ci: inversion maps to itself
        return _contained(np.eye(3), hm, km)
    kf = _feature_elements(k)
    a = hf[0]
    ka = [e for e in kf if _type_key(e) == _type_key(a)]
    if not ka:
        return False
    ua = _axis_of(a)
    # second feature with an axis not collinear with the first
    b = None
    for cand in hf[1:]:
        if abs(float(_axis_of(cand) @ ua)) < 1.0 - 1e-9:
            b = cand
            break
    if b is None:
        # single-axis group: align the axis, azimuth is free
        for ea in ka:
            va = _axis_of(ea)
            for sv in (va, -va):
                r = _frame(np.array([0.0, 0.0, 1.0]),
                           np.array([1.0, 0.0, 0.0]))
                # rotation taking ua to sv via orthonormal frames
                fu = _frame(ua, _any_perp(ua))
                fv = _frame(sv, _any_perp(sv))
                if fu is None or fv is None:
                    continue
                r = fv @ fu.T
                if _contained(r, hm, km):
                    return True
        return False
    ub = _axis_of(b)
    cos_ab = abs(float(ua @ ub))
    kb = [e for e in kf if _type_key(e) == _type_key(b)]
    fu = _frame(ua, ub)
    if fu is None:
        return False
    for ea in ka:
        for sa in (1.0, -1.0):
            va = sa * _axis_of(ea)
            for eb in kb:
                for sb in (1.0, -1.0):
                    vb = sb * _axis_of(eb)
                    if abs(abs(float(va @ vb)) - cos_ab) > 1e-7:
                        continue
                    if abs(float(va @ vb) - float(ua @ ub)) > 1e-7:
                        continue
                    fv = _frame(va, vb)
                    if fv is None:
                        continue
                    r = fv @ fu.T
                    if _contained(r, hm, km):
                        return True
    return False


def _any_perp(u: np.ndarray) -> np.ndarray:
    a = np.array([0.0, 0.0, 1.0]) if abs(u[2]) < 0.9 else np.array([1.0, 0.0, 0.0])
    w = np.cross(u, a)
    return w / np.linalg.norm(w)
