import math

import numpy as np
import pytest

from littlegroups.groups import (Family, GroupDims, GroupError, GroupId,
                                 canonicalize_label, dims, elements, group,
                                 group_order, element_from_matrix,
                                 rotation_matrix_3d, inversion_lift,
                                 contains_inversion, rotation_part,
                                 extended_rotation)


def test_alias_resolution():
    assert canonicalize_label("C1v") == GroupId(Family.Cs)
    assert canonicalize_label("C1h") == GroupId(Family.Cs)
    assert canonicalize_label("D1") == GroupId(Family.Cn, 2)
    assert canonicalize_label("D1h") == GroupId(Family.Cnv, 2)
    assert canonicalize_label("D1d") == GroupId(Family.Cnh, 2)
    assert canonicalize_label("S2") == GroupId(Family.Ci)
    # odd-n improper cyclic groups carry the Cni label
    assert canonicalize_label("C3i") == GroupId(Family.S2n, 3)
    assert canonicalize_label("S6") == GroupId(Family.S2n, 3)
    assert canonicalize_label("S6").label == "C3i"
    assert canonicalize_label("S4") == GroupId(Family.S2n, 2)
    # an odd rotoreflection generates Cnh
    assert canonicalize_label("S3") == GroupId(Family.Cnh, 3)
    assert canonicalize_label("Cinfv").label == "Cinfv"
    assert canonicalize_label("SO(3)") == GroupId(Family.SO3)


def test_unknown_label_raises():
    for bad in ("Qx", "C0", "D4x", "", "Sinf"):
        with pytest.raises(GroupError):
            canonicalize_label(bad)


def test_group_orders():
    expected = {"C1": 1, "Ci": 2, "Cs": 2, "C5": 5, "C4h": 8, "C6v": 12,
                "S4": 4, "C3i": 6, "D4": 8, "D4h": 16, "D3d": 12,
                "T": 12, "Td": 24, "Th": 24, "O": 24, "Oh": 48,
                "Y": 60, "Yh": 120}
    for lab, order in expected.items():
        assert group_order(canonicalize_label(lab)) == order
    assert group_order(canonicalize_label("Cinf")) == math.inf


def test_dims_against_branching_table():
    assert dims(canonicalize_label("C1")) == GroupDims(0, 3)
    assert dims(canonicalize_label("Ci")) == GroupDims(0, 3)
    assert dims(canonicalize_label("Cinf")) == GroupDims(1, 0)
    assert dims(canonicalize_label("C4h")) == GroupDims(0, 1)
    assert dims(canonicalize_label("Cs")) == GroupDims(0, 1)
    assert dims(canonicalize_label("S4")) == GroupDims(0, 1)
    assert dims(canonicalize_label("C2v")) == GroupDims(0, 0)
    assert dims(canonicalize_label("SO3")) == GroupDims(3, 0)
    assert dims(canonicalize_label("Dinfh")) == GroupDims(1, 0)


def test_element_counts():
    for lab in ("C1", "Ci", "Cs", "C7", "C4v", "C5h", "S8", "C5i", "D6",
                "D3d", "D5h", "T", "Td", "Th", "O", "Oh", "Y", "Yh"):
        g = canonicalize_label(lab)
        assert len(elements(g)) == group_order(g)


def test_tetrahedral_element_census():
    # 1 identity, 8 threefold rotations, 3 twofold rotations
    elems = elements(canonicalize_label("T"))
    angles = sorted(round(abs(e.angle), 6) for e in elems)
    assert angles.count(0.0) == 1
    assert angles.count(round(2 * math.pi / 3, 6)) == 8
    assert angles.count(round(math.pi, 6)) == 3
    assert not any(e.improper for e in elems)


def test_group_axioms_numerically():
    for lab in ("D4h", "Td", "C3i", "S8", "D5d", "C6v"):
        mats = [e.matrix() for e in elements(canonicalize_label(lab))]
        keys = {tuple(np.round(m, 9).ravel()) for m in mats}
        for a in mats:
            assert tuple(np.round(a.T, 9).ravel()) in keys     # inverses
            for b in mats[::3]:
                assert tuple(np.round(a @ b, 9).ravel()) in keys
            assert np.linalg.norm(a @ a.T - np.eye(3)) < 1e-12


def test_element_from_matrix_roundtrip():
    rng = np.random.default_rng(2)
    for _ in range(40):
        axis = rng.normal(size=3)
        axis /= np.linalg.norm(axis)
        angle = rng.uniform(-math.pi, math.pi)
        for improper in (False, True):
            m = rotation_matrix_3d(axis, angle) * (-1 if improper else 1)
            e = element_from_matrix(m)
            assert e.improper == improper
            assert np.linalg.norm(e.matrix() - m) < 1e-9


def test_infinite_groups_have_no_elements():
    with pytest.raises(GroupError):
        elements(canonicalize_label("Cinf"))


def test_structure_descriptors():
    cases = {
        "Cs": ("C1", "C2", False), "S4": ("C2", "C4", False),
        "C3i": ("C3", "C3", True), "C3h": ("C3", "C6", False),
        "C4v": ("C4", "D4", False), "D3h": ("D3", "D6", False),
        "D4d": ("D4", "D8", False), "D3d": ("D3", "D3", True),
        "Td": ("T", "O", False), "Th": ("T", "T", True),
        "Cinfv": ("Cinf", "Dinf", False), "O3": ("SO3", "SO3", True),
    }
    for lab, (rot, ext, has_i) in cases.items():
        g = canonicalize_label(lab)
        assert rotation_part(g).label == rot
        assert extended_rotation(g).label == ext
        assert contains_inversion(g) == has_i


def test_inversion_lift():
    cases = {"C1": "Ci", "C2": "C2h", "C3": "C3i", "C4": "C4h",
             "D2": "D2h", "D3": "D3d", "T": "Th", "O": "Oh", "Y": "Yh",
             "Cinf": "Cinfh", "Dinf": "Dinfh", "SO3": "O3"}
    for src, dst in cases.items():
        assert inversion_lift(canonicalize_label(src)).label == dst
