"""Numerical verification layer: tesseral harmonics, representation matrices,
group-averaged projectors, maximal-symmetry detection with free axes, rank-2
diagonalization and Euler-angle canonicalization.

Symmetry detection works on the per-axis azimuthal power spectrum of the
coefficient vector: in a frame whose z axis is a candidate axis, the residual
of a rotation by theta is sum_m 2(1-cos(m theta)) rho_m and the residual of an
improper operation (for a negative-parity vector) is
4 rho_0 + sum_m 2(1+cos(m theta)) rho_m, both closed forms in the spectrum
rho_m.  Candidate axes come from a Fibonacci sphere grid and are polished by a
small Newton iteration on the tangent plane.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from functools import lru_cache

import numpy as np
from scipy.special import lpmv

from .groups import (Family, GroupError, GroupId, GroupElement, group,
                     elements, is_finite, inversion_lift, rotation_matrix_3d)
from .characters import (Irrep, so3_irrep, InternalConsistencyError,
                         subduce_trace, subduce_continuous, rep_vectors)
from .rotations import (real_labels, label_index, rotation_matrix_real,
                        rep_matrix, frame_components, m_power_spectrum,
                        apply_z_rotation)

TOL_MATRIX = 1e-9
TOL_RANK = 1e-8
TOL_SYMMETRY = 1e-7


class ZeroVectorError(ValueError):
    pass


class CanonicalizationError(RuntimeError):
    pass


# ---------------------------------------------------------------------------
# coefficient vectors

@dataclass
class CoeffVector:
    """Real coefficients over the tesseral basis of one O(3)/SO(3) irrep.

    coeffs is ordered by the labels 0, 1+, 1-, ..., l+, l-.  parity is +1 or
    -1; rotation-only queries can ignore it.
    """

    l: int
    parity: int
    coeffs: np.ndarray

    def __post_init__(self):
        self.coeffs = np.asarray(self.coeffs, dtype=float)
        if self.coeffs.shape != (2 * self.l + 1,):
            raise ValueError(f"need {2 * self.l + 1} coefficients for l={self.l}")
        if self.parity not in (1, -1):
            raise ValueError("parity must be +1 or -1")

    @property
    def labels(self) -> list[str]:
        return real_labels(self.l)

    def norm(self) -> float:
        return float(np.linalg.norm(self.coeffs))

    @classmethod
    def from_dict(cls, data: dict) -> "CoeffVector":
        try:
            l = int(data["l"])
            parity = {"+": 1, "-": -1, 1: 1, -1: -1}[data["parity"]]
            raw = dict(data.get("coeffs", {}))
        except (KeyError, TypeError, ValueError) as exc:
            raise ValueError(f"malformed coefficient vector: {exc}") from exc
        coeffs = np.zeros(2 * l + 1)
        for label, value in raw.items():
            coeffs[label_index(l, str(label))] = float(value)
        return cls(l=l, parity=parity, coeffs=coeffs)

    def to_dict(self) -> dict:
        return {"l": self.l, "parity": "+" if self.parity > 0 else "-",
                "coeffs": {lab: float(c)
                           for lab, c in zip(self.labels, self.coeffs)
                           if c != 0.0}}

    @classmethod
    def from_json(cls, text: str) -> "CoeffVector":
        return cls.from_dict(json.loads(text))

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)

    @classmethod
    def from_labels(cls, l: int, parity: int, values: dict) -> "CoeffVector":
        coeffs = np.zeros(2 * l + 1)
        for label, value in values.items():
            coeffs[label_index(l, label)] = value
        return cls(l=l, parity=parity, coeffs=coeffs)


# ---------------------------------------------------------------------------
# tesseral harmonics

def tesseral_eval(l: int, label: str, theta, phi):
    """Real orthonormal spherical harmonic Z_label^l at (theta, phi).

    Z_0 is the zonal harmonic, Z_m+ goes with cos(m phi) and Z_m- with
    sin(m phi); Condon-Shortley phases are absorbed so all values are real
    and the set is orthonormal on the unit sphere.
    """
    theta = np.asarray(theta, dtype=float)
    phi = np.asarray(phi, dtype=float)
    if label == "0":
        m = 0
    else:
        m = int(label[:-1])
    nrm = math.sqrt((2 * l + 1) / (4 * math.pi)
                    * math.factorial(l - m) / math.factorial(l + m))
    leg = (-1.0) ** m * lpmv(m, l, np.cos(theta))   # strip Condon-Shortley
    if label == "0":
        return nrm * leg * np.ones_like(phi, dtype=float)
    if label.endswith("+"):
        return math.sqrt(2.0) * nrm * leg * np.cos(m * phi)
    return math.sqrt(2.0) * nrm * leg * np.sin(m * phi)


def evaluate(cv: CoeffVector, theta, phi):
    """Pointwise value of the coefficient vector as a function on the sphere."""
    total = 0.0
    for lab, c in zip(cv.labels, cv.coeffs):
        if c != 0.0:
            total = total + c * tesseral_eval(cv.l, lab, theta, phi)
    return total


def rotation_matrix(l: int, parity: int, e: GroupElement) -> np.ndarray:
    """Real-basis representation matrix of a group element (see rotations)."""
    return rep_matrix(l, parity, e)


def fibonacci_sphere(n: int) -> np.ndarray:
    """Deterministic quasi-uniform directions on the unit sphere, (n, 3)."""
    i = np.arange(n) + 0.5
    z = 1.0 - 2.0 * i / n
    r = np.sqrt(np.maximum(0.0, 1.0 - z * z))
    golden = math.pi * (3.0 - math.sqrt(5.0))
    phi = golden * i
    return np.stack([r * np.cos(phi), r * np.sin(phi), z], axis=1)


# ---------------------------------------------------------------------------
# invariant subspaces by group averaging

def _witness_generators(h: GroupId, l: int) -> list[GroupElement]:
    """Finite generator witnesses whose fixed space equals that of an
    infinite group on rank-l functions (azimuthal content is capped at l,
    so an order 2l+1 rotation pins the full axial rotation group)."""
    f = h.family
    step = 2 * math.pi / (2 * l + 1)
    rz = GroupElement((0.0, 0.0, 1.0), step, False)
    rx = GroupElement((1.0, 0.0, 0.0), step, False)
    c2x = GroupElement((1.0, 0.0, 0.0), math.pi, False)
    inv = GroupElement((0.0, 0.0, 1.0), 0.0, True)
    sigma_v = GroupElement((0.0, 1.0, 0.0), math.pi, True)   # xz plane
    if f is Family.Cinf:
        return [rz]
    if f is Family.Cinfh:
        return [rz, inv]
    if f is Family.Cinfv:
        return [rz, sigma_v]
    if f is Family.Dinf:
        return [rz, c2x]
    if f is Family.Dinfh:
        return [rz, c2x, inv]
    if f is Family.SO3:
        return [rz, rx]
    if f is Family.O3:
        return [rz, rx, inv]
    raise GroupError(f"{h} is finite; average over its elements instead")


def _parity_of(irrep: Irrep) -> int:
    return irrep.parity if irrep.parent.family is Family.O3 else 1


def invariant_projector(h, irrep: Irrep) -> np.ndarray:
    """Group-averaged projector P = (1/|H|) sum_g D(g).

    h may be a GroupId or an explicit element iterable (for re-oriented
    copies).  Infinite groups are replaced by finite witness generator sets
    and the projector onto their joint fixed space is returned.
    """
    l, parity = irrep.l, _parity_of(irrep)
    if isinstance(h, GroupId) and not is_finite(h):
        gens = _witness_generators(h, l)
        dim = 2 * l + 1
        rows = np.vstack([rep_matrix(l, parity, g) - np.eye(dim)
                          for g in gens])
        _, s, vt = np.linalg.svd(rows)
        s = np.concatenate([s, np.zeros(dim - len(s))])
        null = vt[s < TOL_RANK]
        return null.T @ null
    elems = elements(h) if isinstance(h, GroupId) else tuple(h)
    mats = [rep_matrix(l, parity, e) for e in elems]
    p = np.mean(mats, axis=0)
    if np.linalg.norm(p @ p - p) > 1e-9 * max(1.0, np.linalg.norm(p)):
        raise InternalConsistencyError(
            f"group average for {h} is not idempotent")
    return p


def _basis_from_projector(p: np.ndarray) -> np.ndarray:
    s, u = np.linalg.eigh(p)
    cols = u[:, s > 0.5]
    basis = []
    for j in range(cols.shape[1]):
        vec = cols[:, j]
        k = int(np.argmax(np.abs(vec)))
        if vec[k] < 0:
            vec = -vec
        basis.append(vec)
    basis.sort(key=lambda v: tuple(np.round(v, 9)))
    return np.array(basis)


def _expected_rank(h: GroupId, irrep: Irrep) -> int:
    if is_finite(h):
        return subduce_trace(h, irrep).c
    return subduce_continuous(h, irrep).c


def projector_rank(h: GroupId, irrep: Irrep) -> int:
    """Rank of the invariant projector, cross-checked against subduction."""
    p = invariant_projector(h, irrep)
    s = np.linalg.svd(p, compute_uv=False)
    rank = int(np.sum(s > TOL_RANK))
    expected = _expected_rank(h, irrep)
    if rank != expected:
        raise InternalConsistencyError(
            f"projector rank {rank} != subduction frequency {expected} "
            f"for ({h}, {irrep})")
    return rank


def invariant_basis(h, irrep: Irrep) -> list[CoeffVector]:
    """Orthonormal basis of the fixed-point space of h in the irrep."""
    p = invariant_projector(h, irrep)
    if isinstance(h, GroupId):
        s = np.linalg.svd(p, compute_uv=False)
        rank = int(np.sum(s > TOL_RANK))
        expected = _expected_rank(h, irrep)
        if rank != expected:
            raise InternalConsistencyError(
                f"projector rank {rank} != subduction frequency {expected} "
                f"for ({h}, {irrep})")
    basis = _basis_from_projector(p)
    parity = _parity_of(irrep)
    return [CoeffVector(irrep.l, parity, v) for v in basis]


# ---------------------------------------------------------------------------
# spectrum helpers for axis searches

def _axis_spectrum(l: int, v: np.ndarray, axis: np.ndarray) -> np.ndarray:
    comps = frame_components(l, v, axis[None, :])
    return m_power_spectrum(l, comps)[:, 0]


def _rot_weights(l: int, k: int) -> np.ndarray:
    m = np.arange(l + 1)
    w = 2.0 * (1.0 - np.cos(2.0 * math.pi * m / k))
    w[0] = 0.0
    return w


def _anti_weights(l: int, theta: float) -> np.ndarray:
    m = np.arange(l + 1)
    w = 2.0 * (1.0 + np.cos(m * theta))
    w[0] = 4.0
    return w


def _tangent_frame(axis: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    a = np.array([0.0, 0.0, 1.0]) if abs(axis[2]) < 0.9 else np.array([1.0, 0.0, 0.0])
    t1 = np.cross(axis, a)
    t1 /= np.linalg.norm(t1)
    t2 = np.cross(axis, t1)
    return t1, t2


def _refine_axis(l: int, v: np.ndarray, axis0: np.ndarray, weights: np.ndarray,
                 iters: int = 14) -> tuple[np.ndarray, float]:
    """Newton polish of an axis against a weighted spectrum objective."""
    axis = axis0 / np.linalg.norm(axis0)

    def f(n):
        return float(weights @ _axis_spectrum(l, v, n))

    value = f(axis)
    for _ in range(iters):
        t1, t2 = _tangent_frame(axis)
        h = max(1e-7, 0.02 * math.sqrt(max(value, 1e-30)))
        h = min(h, 1e-3)

        def at(u1, u2):
            n = axis + u1 * t1 + u2 * t2
            return f(n / np.linalg.norm(n))

        f0 = value
        fp1, fm1 = at(h, 0), at(-h, 0)
        fp2, fm2 = at(0, h), at(0, -h)
        g = np.array([(fp1 - fm1) / (2 * h), (fp2 - fm2) / (2 * h)])
        h11 = (fp1 + fm1 - 2 * f0) / h ** 2
        h22 = (fp2 + fm2 - 2 * f0) / h ** 2
        h12 = (at(h, h) + at(-h, -h) - at(h, -h) - at(-h, h)) / (4 * h ** 2)
        hess = np.array([[h11, h12], [h12, h22]])
        try:
            d = -np.linalg.solve(hess + 1e-12 * np.eye(2), g)
        except np.linalg.LinAlgError:
            d = -g
        if not np.all(np.isfinite(d)):
            break
        step = np.linalg.norm(d)
        if step > 0.2:
            d *= 0.2 / step
        new_axis = axis + d[0] * t1 + d[1] * t2
        new_axis /= np.linalg.norm(new_axis)
        new_value = f(new_axis)
        if new_value <= value:
            axis, value = new_axis, new_value
        else:
            # damped fallback
            new_axis = axis - 0.2 * (g[0] * t1 + g[1] * t2)
            new_axis /= np.linalg.norm(new_axis)
            nv = f(new_axis)
            if nv < value:
                axis, value = new_axis, nv
            else:
                break
        if value < 1e-26:
            break
    return axis, value


def _cluster_axes(cands: list[tuple[np.ndarray, float]],
                  min_angle: float = 0.12) -> list[np.ndarray]:
    """Greedy axis clustering (axes are sign-free); keeps best score first."""
    cands = sorted(cands, key=lambda t: t[1])
    kept = []
    cos_thr = math.cos(min_angle)
    for axis, _ in cands:
        if all(abs(float(axis @ b)) < cos_thr for b in kept):
            kept.append(axis)
    return kept


def _canonical_sign(axis: np.ndarray) -> np.ndarray:
    for x in axis:
        if x > 1e-9:
            return axis
        if x < -1e-9:
            return -axis
    return axis


# ---------------------------------------------------------------------------
# symmetry detection

@dataclass
class SymmetryReport:
    group: GroupId
    orientation: np.ndarray
    witnesses: tuple = ()
    warnings: tuple = ()
    axes: dict = field(default_factory=dict)


INF_ORDER = -1


def detect_symmetry(a: CoeffVector, tol: float = TOL_SYMMETRY,
                    proper_only: bool = False,
                    grid_points: int = 2000) -> SymmetryReport:
    """Maximal subgroup of O(3) (or SO(3)) leaving the vector invariant.

    Axes are free: candidate axes come from a Fibonacci grid, are refined by
    Newton steps, and the surviving element set is classified into a group by
    an axis and order census.  For negative parity the improper extensions
    are tested as inversion-rotation composites; for positive parity every
    rotational symmetry lifts with the inversion automatically.  The final
    classification is confirmed by checking every element of the claimed
    group (finite witnesses for the infinite ones) in the detected frame.
    """
    nrm = a.norm()
    if nrm <= 0.0:
        raise ZeroVectorError("symmetry of the zero vector is undefined")
    l, parity = a.l, a.parity
    v = a.coeffs / nrm
    warnings: list[str] = []

    if l == 0:
        if proper_only or parity < 0:
            gid = GroupId(Family.SO3)
        else:
            gid = GroupId(Family.O3)
        return _verified_report(a, gid, tol, proper_only, warnings)

    kmax = max(l, 6)
    axes = fibonacci_sphere(grid_points)
    comps = frame_components(l, v, axes)
    rho = m_power_spectrum(l, comps)

    # candidate proper axes: for each order keep the most promising grid
    # points, then cluster (axes are sign-free and well separated)
    orders = list(range(2, kmax + 1)) + [2 * l + 1]
    weights = {k: _rot_weights(l, k) for k in orders}
    cands = []
    for k in orders:
        scores = weights[k] @ rho
        take = np.argsort(scores)[:40]
        for i in take:
            if scores[i] < 1.2:
                cands.append((axes[i], float(scores[i])))
    starts = _cluster_axes(cands)[:48]

    inf_axes: list[np.ndarray] = []
    fin_axes: list[tuple[np.ndarray, int]] = []
    w_inf = weights[2 * l + 1]
    tol2 = tol * tol

    def near_known(n):
        return any(abs(float(n @ b)) > 1.0 - 2e-4 for b in inf_axes) or \
            any(abs(float(n @ b)) > 1.0 - 2e-4 for b, _ in fin_axes)

    for start in starts:
        if near_known(start):
            continue
        spec0 = _axis_spectrum(l, v, start)
        # refine against the most selective plausible order, then read all
        # orders off the refined axis spectrum
        plaus = [k for k in orders if float(weights[k] @ spec0) < 1.2]
        if not plaus:
            continue
        k_star = min(plaus, key=lambda k: float(weights[k] @ spec0))
        axis, _ = _refine_axis(l, v, start, weights[k_star])
        if near_known(axis):
            continue
        spec = _axis_spectrum(l, v, axis)
        if math.sqrt(max(float(w_inf @ spec), 0.0)) < tol:
            _push_axis(inf_axes, fin_axes, axis, INF_ORDER)
            continue
        passing = [k for k in range(2, kmax + 1)
                   if float(weights[k] @ spec) < tol2]
        for k in range(2, kmax + 1):
            r = math.sqrt(max(float(weights[k] @ spec), 0.0))
            if tol <= r < 10 * tol:
                warnings.append(f"ambiguous order-{k} axis near "
                                f"{np.round(axis, 4).tolist()} "
                                f"(residual {r:.2e})")
        if passing:
            _push_axis(inf_axes, fin_axes, axis, max(passing))

    rot_group, feats = _classify_rotations(l, v, inf_axes, fin_axes, tol,
                                           warnings)

    if proper_only:
        gid = rot_group
    elif parity > 0:
        gid = inversion_lift(rot_group)
    else:
        gid = _improper_extension(l, v, rot_group, feats, tol, warnings,
                                  rho, axes)
    return _verified_report(a, gid, tol, proper_only, warnings, feats)


def _push_axis(inf_axes, fin_axes, axis, order):
    axis = _canonical_sign(axis)
    for other in inf_axes:
        if abs(float(axis @ other)) > 1.0 - 1e-9:
            return
    if order == INF_ORDER:
        inf_axes.append(axis)
        fin_axes[:] = [(b, k) for (b, k) in fin_axes
                       if abs(float(axis @ b)) < 1.0 - 1e-9]
        return
    for i, (other, k) in enumerate(fin_axes):
        if abs(float(axis @ other)) > 1.0 - 1e-7:
            if order > k:
                fin_axes[i] = (axis, order)
            return
    fin_axes.append((axis, order))


def _classify_rotations(l, v, inf_axes, fin_axes, tol, warnings):
    """Axis census to a rotation group plus the frame features."""
    feats = {"primary": None, "secondary": [], "c2": []}
    if len(inf_axes) >= 2:
        return GroupId(Family.SO3), feats
    if len(inf_axes) == 1:
        u = inf_axes[0]
        feats["primary"] = u
        perp = _any_perp(u)
        if math.sqrt(float(_rot_weights(l, 2) @ _axis_spectrum(l, v, perp))) < tol:
            feats["secondary"] = [perp]
            return GroupId(Family.Dinf), feats
        return GroupId(Family.Cinf), feats
    if not fin_axes:
        return GroupId(Family.C1), feats
    counts: dict[int, list[np.ndarray]] = {}
    for axis, k in fin_axes:
        counts.setdefault(k, []).append(axis)
    census = {k: len(v_) for k, v_ in counts.items()}
    feats["c2"] = counts.get(2, [])
    if census == {3: 4, 2: 3}:
        feats["primary"] = counts[2][0]
        feats["secondary"] = counts[2]
        return GroupId(Family.T), feats
    if census == {4: 3, 3: 4, 2: 6}:
        feats["primary"] = counts[4][0]
        feats["secondary"] = counts[4]
        return GroupId(Family.O), feats
    if census == {5: 6, 3: 10, 2: 15}:
        feats["primary"] = counts[2][0]
        feats["secondary"] = counts[2]
        return GroupId(Family.Y), feats
    if census == {2: 3} and _mutually_perp(counts[2]):
        feats["primary"] = counts[2][0]
        feats["secondary"] = counts[2][1:]
        return group(Family.Dn, 2), feats
    if len(census) == 1 and list(census.values()) == [1]:
        k = next(iter(census))
        feats["primary"] = counts[k][0]
        return group(Family.Cn, k) if k >= 2 else GroupId(Family.C1), feats
    ks = sorted(census, reverse=True)
    if len(ks) == 2 and ks[1] == 2 and census[ks[0]] == 1 \
            and census[2] == ks[0]:
        n = ks[0]
        feats["primary"] = counts[n][0]
        feats["secondary"] = counts[2]
        return group(Family.Dn, n), feats
    warnings.append(f"unrecognized axis census {census}; "
                    "falling back to the best single axis")
    k = max(census)
    feats["primary"] = counts[k][0]
    return (group(Family.Cn, k) if k >= 2 else GroupId(Family.C1)), feats


def _mutually_perp(axes) -> bool:
    return all(abs(float(a @ b)) < 1e-5
               for i, a in enumerate(axes) for b in axes[i + 1:])


def _any_perp(u: np.ndarray) -> np.ndarray:
    t1, _ = _tangent_frame(u)
    return t1


def _anti_residual(l, v, axis, theta) -> float:
    spec = _axis_spectrum(l, v, np.asarray(axis, float))
    return math.sqrt(max(float(_anti_weights(l, theta) @ spec), 0.0))


def _improper_extension(l, v, rot_group, feats, tol, warnings,
                        rho, grid_axes):
    """Negative-parity classification of mirror/rotoreflection extensions."""
    f, n = rot_group.family, rot_group.n
    if f is Family.C1:
        w = _anti_weights(l, math.pi)
        scores = w @ rho
        order = np.argsort(scores)[:20]
        best = None
        for i in order:
            axis, val = _refine_axis(l, v, grid_axes[i], w)
            if math.sqrt(max(val, 0.0)) < tol:
                best = axis
                break
        if best is not None:
            feats["primary"] = _canonical_sign(best)
            return GroupId(Family.Cs)
        return rot_group
    if f is Family.Cinf:
        u = feats["primary"]
        if _anti_residual(l, v, _any_perp(u), math.pi) < tol:
            return GroupId(Family.Cinfv)
        return rot_group
    if f is Family.Cn:
        u = feats["primary"]
        has_s = _anti_residual(l, v, u, math.pi / n) < tol
        mirror = _find_vertical_mirror(l, v, u, tol)
        if has_s and mirror is not None:
            warnings.append("both rotoreflection and vertical mirror "
                            "survive a cyclic rotation group; check input")
        if mirror is not None:
            feats["secondary"] = [mirror]
            return group(Family.Cnv, n)
        if has_s:
            return group(Family.Cnh, n) if n % 2 else group(Family.S2n, n)
        return rot_group
    if f is Family.Dn:
        # for D2 any of the three twofold axes can carry the rotoreflection
        principals = [feats["primary"]] if n > 2 else list(feats["c2"])
        for u in principals:
            if _anti_residual(l, v, u, math.pi / n) < tol:
                feats["primary"] = u
                feats["secondary"] = [b for b in feats["c2"]
                                      if abs(float(b @ u)) < 1.0 - 1e-7]
                return (group(Family.Dnd, n) if n % 2 == 0
                        else group(Family.Dnh, n))
        return rot_group
    if f is Family.T:
        axis = feats["secondary"][0]
        if _anti_residual(l, v, axis, math.pi / 2) < tol:
            return GroupId(Family.Td)
        return rot_group
    return rot_group


def _find_vertical_mirror(l, v, u, tol):
    """Search mirror planes containing the axis u (normals perpendicular)."""
    t1, t2 = _tangent_frame(u)
    psis = np.linspace(0.0, math.pi, 360, endpoint=False)
    normals = np.outer(np.cos(psis), t1) + np.outer(np.sin(psis), t2)
    spec = m_power_spectrum(l, frame_components(l, v, normals))
    scores = _anti_weights(l, math.pi) @ spec
    i = int(np.argmin(scores))
    axis, val = _refine_axis(l, v, normals[i], _anti_weights(l, math.pi))
    if math.sqrt(max(val, 0.0)) < tol:
        return axis
    return None


# ---------------------------------------------------------------------------
# orientation and final verification

def _frame_from_zx(zdir, xdir) -> np.ndarray:
    z = np.asarray(zdir, float)
    z = z / np.linalg.norm(z)
    x = np.asarray(xdir, float)
    x = x - (x @ z) * z
    if np.linalg.norm(x) < 1e-8:
        raise GroupError("degenerate frame")
    x = x / np.linalg.norm(x)
    y = np.cross(z, x)
    return np.column_stack([x, y, z])


def _frame_from_z(zdir) -> np.ndarray:
    z = np.asarray(zdir, float)
    z = z / np.linalg.norm(z)
    t1, _ = _tangent_frame(z)
    return _frame_from_zx(z, t1)


def _frame_candidates(gid: GroupId, feats: dict):
    f = gid.family
    primary = feats.get("primary")
    secondary = feats.get("secondary") or []
    if f in (Family.C1, Family.Ci, Family.SO3, Family.O3):
        yield np.eye(3)
        return
    if f in (Family.Cs,):
        yield _frame_from_z(primary)
        yield _frame_from_z(-primary)
        return
    if f in (Family.Cn, Family.Cnh, Family.S2n, Family.Cinf, Family.Cinfh):
        yield _frame_from_z(primary)
        yield _frame_from_z(-primary)
        return
    if f in (Family.Cnv, Family.Cinfv):
        u = primary
        for sgn_u in (u, -u):
            if not secondary:
                yield _frame_from_z(sgn_u)
                continue
            for nrm_ in secondary:
                x = np.cross(nrm_, sgn_u)
                for sx in (x, -x):
                    yield _frame_from_zx(sgn_u, sx)
        return
    if f in (Family.Dn, Family.Dnh, Family.Dnd, Family.Dinf, Family.Dinfh):
        u = primary
        for sgn_u in (u, -u):
            for c2 in (secondary or [_any_perp(u)]):
                for sx in (c2, -c2):
                    yield _frame_from_zx(sgn_u, sx)
        return
    if f in (Family.T, Family.Td, Family.Th, Family.O, Family.Oh,
             Family.Y, Family.Yh):
        axes = secondary or feats.get("c2") or []
        for i, za in enumerate(axes):
            for xa in axes:
                if abs(float(za @ xa)) > 1e-4:
                    continue
                for sz in (za, -za):
                    for sx in (xa, -xa):
                        yield _frame_from_zx(sz, sx)
        return
    yield np.eye(3)


@lru_cache(maxsize=None)
def _verification_stack(gid: GroupId, l: int, parity: int, proper_only: bool):
    if is_finite(gid):
        elems = elements(gid)
    else:
        step = 2 * math.pi / (2 * l + 1)
        elems = [GroupElement((0.0, 0.0, 1.0), step, False),
                 GroupElement((0.0, 0.0, 1.0), 2 * step, False)]
        f = gid.family
        if f in (Family.Dinf, Family.Dinfh, Family.SO3, Family.O3):
            elems.append(GroupElement((1.0, 0.0, 0.0),
                                      math.pi if f in (Family.Dinf, Family.Dinfh)
                                      else step, False))
        if f in (Family.Cinfh, Family.Dinfh, Family.O3):
            elems.append(GroupElement((0.0, 0.0, 1.0), 0.0, True))
        if f in (Family.Cinfv, Family.Dinfh):
            elems.append(GroupElement((0.0, 1.0, 0.0), math.pi, True))
        elems = tuple(elems)
    use_parity = 1 if proper_only else parity
    mats = [rep_matrix(l, use_parity, e) for e in elems
            if not (proper_only and e.improper)]
    kept = [e for e in elems if not (proper_only and e.improper)]
    return tuple(kept), np.stack(mats)


def _frame_residual(l, parity, v, gid, frame, proper_only):
    elems, stack = _verification_stack(gid, l, parity, proper_only)
    w = rotation_matrix_real(l, *_axis_angle(frame.T)) @ v \
        if not np.allclose(frame, np.eye(3)) else v
    resid = np.linalg.norm(stack @ w - w, axis=1)
    return elems, resid


def _axis_angle(rot3: np.ndarray):
    from .groups import element_from_matrix
    e = element_from_matrix(rot3)
    return np.array(e.axis), e.angle


def _verified_report(a: CoeffVector, gid: GroupId, tol, proper_only,
                     warnings, feats=None) -> SymmetryReport:
    """Confirm a classification by checking every element of the claimed
    group in some detected frame; witnesses are the standard-orientation
    elements (conjugate by the orientation to get the detected ones)."""
    l, parity = a.l, a.parity
    v = a.coeffs / a.norm()
    feats = feats or {}
    best = None
    for cand in _frame_candidates(gid, feats):
        try:
            elems, resid = _frame_residual(l, parity, v, gid, cand,
                                           proper_only)
        except GroupError:
            continue
        worst = float(resid.max()) if len(resid) else 0.0
        if best is None or worst < best[0]:
            best = (worst, cand, elems, resid)
        if worst < tol:
            break
    if best is None:
        raise InternalConsistencyError(f"no frame candidates for {gid}")
    worst, frame, elems, resid = best
    if worst >= tol:
        raise InternalConsistencyError(
            f"classification {gid} failed verification "
            f"(worst residual {worst:.3e})")
    witnesses = tuple(zip(elems, (float(r) for r in resid)))
    return SymmetryReport(group=gid, orientation=frame, witnesses=witnesses,
                          warnings=tuple(warnings), axes=dict(feats))


# ---------------------------------------------------------------------------
# canonicalization and the rank-2 special case

def canonicalize(a: CoeffVector, zero_target: str = "2-",
                 grid_points: int = 2000,
                 starts: int = 8) -> tuple[np.ndarray, CoeffVector]:
    """Rotate so the 1+ and 1- coefficients vanish, then use the residual
    z-angle freedom to zero one more coefficient (default 2-).

    The 1-pair vanishes exactly at critical points of the zonal component
    over frame directions, which coincide with critical points of the
    function itself; candidates are grid extrema polished by Newton steps.
    """
    if a.l < 1:
        raise ValueError("canonicalize needs l >= 1")
    l = a.l
    nrm = a.norm()
    if nrm <= 0:
        raise ZeroVectorError("cannot canonicalize the zero vector")
    v = a.coeffs / nrm
    axes = fibonacci_sphere(grid_points)
    comps = frame_components(l, v, axes)
    zonal = np.abs(comps[0])
    order = np.argsort(-zonal)[:60]
    start_axes = _cluster_axes([(axes[i], -float(zonal[i])) for i in order])
    tried = []
    for start in start_axes[:starts]:
        axis, resid2 = _refine_axis(l, v, start, _pair1_weights(l))
        resid = math.sqrt(max(resid2, 0.0))
        signed = float(frame_components(l, v, axis[None, :])[0, 0])
        tried.append((axis, resid, signed))
        if resid < 1e-10 and len(tried) >= 2:
            break
    # deterministic choice: smallest residual, largest signed zonal part,
    # remaining ties towards the z axis then lexicographically
    tried.sort(key=lambda t: (round(t[1] * 1e9), -round(t[2] * 1e9),
                              -round(t[0][2] * 1e9), -round(t[0][0] * 1e9),
                              -round(t[0][1] * 1e9)))
    axis, resid, _ = tried[0]
    if resid >= 1e-7:
        raise CanonicalizationError(
            f"could not zero the 1+/1- pair; best residual {resid:.3e} "
            f"after {len(tried)} starts")
    rot3 = _geodesic_to_z(axis)
    b = rotation_matrix_real(l, *_axis_angle(rot3)) @ a.coeffs
    if l >= 2:
        i_p = label_index(l, zero_target.replace("-", "+"))
        i_m = label_index(l, zero_target)
        m = int(zero_target[:-1])
        gamma = -math.atan2(b[i_m], b[i_p]) / m
        b = apply_z_rotation(l, np.array(gamma), b)
        rot3 = rotation_matrix_3d(np.array([0.0, 0.0, 1.0]), gamma) @ rot3
    return rot3, CoeffVector(l, a.parity, b)


def _pair1_weights(l: int) -> np.ndarray:
    w = np.zeros(l + 1)
    w[1] = 1.0
    return w


def _geodesic_to_z(axis: np.ndarray) -> np.ndarray:
    """Shortest rotation taking the axis to z (identity when axis is z)."""
    u = np.cross(axis, [0.0, 0.0, 1.0])
    s = np.linalg.norm(u)
    ang = math.atan2(s, float(axis[2]))
    if s < 1e-12:
        if axis[2] > 0:
            return np.eye(3)
        return rotation_matrix_3d(np.array([1.0, 0.0, 0.0]), math.pi)
    return rotation_matrix_3d(u, ang)


@dataclass
class L2Diagonalization:
    rotation: np.ndarray
    eigenvalues: np.ndarray
    rotated: CoeffVector
    degenerate: bool


def diagonalize_l2(a: CoeffVector) -> L2Diagonalization:
    """Diagonalize the traceless symmetric matrix behind a rank-2 vector.

    Returns the proper eigenvector rotation, the ascending eigenvalues
    (summing to zero), the coefficients in the eigenframe (supported on 0 and
    2+), and a near-degeneracy flag (two eigenvalues within 1e-8, the
    uniaxial case).
    """
    if a.l != 2:
        raise ValueError("diagonalize_l2 needs l = 2")
    c0, c1p, c1m, c2p, c2m = a.coeffs
    q = c0 / math.sqrt(3.0)
    m = np.array([[c2p - q, c2m, c1p],
                  [c2m, -c2p - q, c1m],
                  [c1p, c1m, 2.0 * q]])
    w, vecs = np.linalg.eigh(m)
    if np.linalg.det(vecs) < 0:
        vecs = vecs.copy()
        vecs[:, 2] *= -1.0
    rot = vecs
    b = rotation_matrix_real(2, *_axis_angle(rot.T)) @ a.coeffs
    scale = max(1.0, float(np.max(np.abs(w))))
    degenerate = bool(min(w[1] - w[0], w[2] - w[1]) < 1e-8 * scale)
    return L2Diagonalization(rotation=rot, eigenvalues=w,
                             rotated=CoeffVector(2, a.parity, b),
                             degenerate=degenerate)


# ---------------------------------------------------------------------------
# representation-vector verification

@dataclass
class RepVectorCheck:
    group: GroupId
    irrep: Irrep
    trials: int
    failures: tuple

    @property
    def passed(self) -> bool:
        return not self.failures


def random_rep_vector(h: GroupId, irrep: Irrep, rng) -> CoeffVector:
    labels = rep_vectors(h, irrep)
    l = irrep.l
    parity = _parity_of(irrep)
    values = {}
    for lab in labels:
        mag = rng.uniform(0.35, 1.0)
        values[lab] = mag * (1 if rng.random() < 0.5 else -1)
    return CoeffVector.from_labels(l, parity, values)


def verify_rep_vectors(h: GroupId, irrep: Irrep, trials: int = 10,
                       seed: int = 0, tol: float = TOL_SYMMETRY) -> RepVectorCheck:
    """Detect the symmetry of random draws over the tabulated vector labels;
    every draw must come back as exactly h (orientation free)."""
    rng = np.random.default_rng(seed)
    proper_only = irrep.parent.family is Family.SO3
    failures = []
    for t in range(trials):
        cv = random_rep_vector(h, irrep, rng)
        report = detect_symmetry(cv, tol=tol, proper_only=proper_only)
        if report.group != h:
            failures.append((t, str(report.group)))
    return RepVectorCheck(group=h, irrep=irrep, trials=trials,
                          failures=tuple(failures))
