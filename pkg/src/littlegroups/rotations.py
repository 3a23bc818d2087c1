"""Representation matrices of O(3) on the real (tesseral) harmonic basis.

The rank-l matrices are built from the angular momentum generators: a rotation
by ``angle`` about ``axis`` is exp(-i*angle*(axis . J)) in the complex |l m>
basis, conjugated into the real basis ordered 0, 1+, 1-, ..., l+, l-.  An
improper element (inversion times rotation) is the rotation matrix times the
parity of the irrep.

The convention is active: coefficients a' = D(R) a describe the rotated
function f(R^{-1} x).
"""

from __future__ import annotations

import math
from functools import lru_cache

import numpy as np

from .groups import GroupElement


def real_labels(l: int) -> list[str]:
    """Tesseral labels in storage order: 0, 1+, 1-, 2+, 2-, ..."""
    out = ["0"]
    for m in range(1, l + 1):
        out.append(f"{m}+")
        out.append(f"{m}-")
    return out


def label_index(l: int, label: str) -> int:
    if label == "0":
        return 0
    m, sign = int(label[:-1]), label[-1]
    if not 1 <= m <= l or sign not in "+-":
        raise ValueError(f"bad tesseral label {label!r} for l={l}")
    return 2 * m - 1 + (0 if sign == "+" else 1)


@lru_cache(maxsize=None)
def _jmatrices(l: int) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Jx, Jy, Jz on the complex basis |l m>, m = -l..l ascending."""
    dim = 2 * l + 1
    m = np.arange(-l, l + 1)
    jz = np.diag(m.astype(float))
    jp = np.zeros((dim, dim))
    for i in range(dim - 1):
        mm = m[i]
        jp[i + 1, i] = math.sqrt(l * (l + 1) - mm * (mm + 1))
    jm = jp.T
    jx = (jp + jm) / 2.0
    jy = (jp - jm) / 2.0j
    return jx.astype(complex), jy, jz.astype(complex)


@lru_cache(maxsize=None)
def _real_to_complex(l: int) -> np.ndarray:
    """Columns express each real harmonic in the complex |l m> basis.

    Z_0 = |0>;  Z_m+ = ((-1)^m |m> + |-m>)/sqrt2;
    Z_m- = ((-1)^m |m> - |-m>)/(i sqrt2), Condon-Shortley phases included
    in |m> so all Z are real functions.
    """
    dim = 2 * l + 1
    u = np.zeros((dim, dim), dtype=complex)

    def ci(m):          # complex index of |l m>
        return m + l

    u[ci(0), 0] = 1.0
    s2 = math.sqrt(2.0)
    for m in range(1, l + 1):
        cs = (-1) ** m
        u[ci(m), label_index(l, f"{m}+")] = cs / s2
        u[ci(-m), label_index(l, f"{m}+")] = 1.0 / s2
        u[ci(m), label_index(l, f"{m}-")] = cs / (1j * s2)
        u[ci(-m), label_index(l, f"{m}-")] = -1.0 / (1j * s2)
    return u


@lru_cache(maxsize=None)
def _gy_eig(l: int) -> tuple[np.ndarray, np.ndarray]:
    """Eigen-decomposition of the real-basis y generator (eigenvalues -l..l)."""
    u = _real_to_complex(l)
    _, jy, _ = _jmatrices(l)
    gy = u.conj().T @ jy @ u
    w, v = np.linalg.eigh(gy)
    return w, v


def apply_z_rotation(l: int, angle, coeffs: np.ndarray) -> np.ndarray:
    """Active z rotation on coefficient columns; angle may be an array.

    Matches rotation_matrix_real(l, z, angle): the m block (m+, m-) picks up
    Z_m+ -> cos(m a) Z_m+ + sin(m a) Z_m-.
    """
    angle = np.asarray(angle, dtype=float)
    a = np.asarray(coeffs, dtype=float)
    single = a.ndim == 1
    if single:
        a = a[:, None]
    shape = (a.shape[0],) + np.broadcast_shapes(a.shape[1:], angle.shape)
    out = np.empty(shape, dtype=float)
    out[0] = a[0]
    for m in range(1, l + 1):
        c, s = np.cos(m * angle), np.sin(m * angle)
        i, j = 2 * m - 1, 2 * m
        out[i] = c * a[i] - s * a[j]
        out[j] = s * a[i] + c * a[j]
    return out[:, 0] if single and angle.ndim == 0 else out


def _dy_real(l: int, angle: float) -> np.ndarray:
    w, v = _gy_eig(l)
    d = (v * np.exp(-1j * angle * w)) @ v.conj().T
    return d.real


@lru_cache(maxsize=16384)
def _rotation_matrix_cached(l: int, key: tuple) -> np.ndarray:
    axis = np.array(key[:3])
    angle = key[3]
    jx, jy, jz = _jmatrices(l)
    h = axis[0] * jx + axis[1] * jy + axis[2] * jz
    w, v = np.linalg.eigh(h)
    dc = (v * np.exp(-1j * angle * w)) @ v.conj().T
    u = _real_to_complex(l)
    d = (u.conj().T @ dc @ u).real
    d.setflags(write=False)
    return d


def rotation_matrix_real(l: int, axis, angle: float) -> np.ndarray:
    """Real-basis (2l+1) x (2l+1) matrix of the rotation R(axis, angle)."""
    n = np.asarray(axis, dtype=float)
    n = n / np.linalg.norm(n)
    key = tuple(np.round(n, 12)) + (round(float(angle), 12),)
    return _rotation_matrix_cached(l, key)


def rep_matrix(l: int, parity: int, e: GroupElement) -> np.ndarray:
    """Representation matrix of a group element on the rank-l irrep.

    Improper elements factor as inversion times rotation; the inversion acts
    as the parity times the identity, so the matrix is parity * D(rotation).
    """
    d = rotation_matrix_real(l, np.array(e.axis), e.angle)
    if e.improper:
        if parity not in (1, -1):
            raise ValueError("parity must be +1 or -1 for O(3) irreps")
        return parity * d
    return d


def frame_components(l: int, coeffs: np.ndarray,
                     axes: np.ndarray) -> np.ndarray:
    """Coefficients of the same function in frames with z along each axis.

    axes is (N, 3); returns (2l+1, N).  Column j equals D(R_j) coeffs where
    R_j maps axes[j] to z (the frame rotation Ry(-theta) Rz(-phi)).
    """
    axes = np.asarray(axes, dtype=float)
    axes = axes / np.linalg.norm(axes, axis=1, keepdims=True)
    theta = np.arccos(np.clip(axes[:, 2], -1.0, 1.0))
    phi = np.arctan2(axes[:, 1], axes[:, 0])
    b = apply_z_rotation(l, -phi, np.asarray(coeffs, float)[:, None])
    w, v = _gy_eig(l)
    c = v.conj().T @ b
    c = np.exp(1j * np.outer(w, theta)) * c
    return (v @ c).real


def m_power_spectrum(l: int, comps: np.ndarray) -> np.ndarray:
    """Per-|m| power of frame components: (l+1, N), row m sums the m+/m- pair."""
    comps = np.asarray(comps)
    if comps.ndim == 1:
        comps = comps[:, None]
    out = np.empty((l + 1, comps.shape[1]))
    out[0] = comps[0] ** 2
    for m in range(1, l + 1):
        out[m] = comps[2 * m - 1] ** 2 + comps[2 * m] ** 2
    return out
