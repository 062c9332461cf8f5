"""Surface models, curve classes, pairing and quadratic forms."""

import pytest
from hypothesis import given
from hypothesis import strategies as st

from twistbench import (
    CurveClass,
    QuadraticFormZ2,
    SurfaceModel,
    arf,
    curve,
    pairing,
    q_eval,
)

S22 = SurfaceModel(2, 2)  # rank 5: two handles plus one boundary direction


def test_rank_formula():
    assert SurfaceModel(0, 0).rank == 0
    assert SurfaceModel(2, 0).rank == 4
    assert SurfaceModel(2, 1).rank == 4
    assert SurfaceModel(2, 4).rank == 7
    assert SurfaceModel(9, 0, 1).rank == 18


def test_parameter_validation():
    with pytest.raises(ValueError):
        SurfaceModel(-1)
    with pytest.raises(ValueError):
        SurfaceModel(1, -2)


def test_basis_layout():
    s = SurfaceModel(2, 3)
    assert [s.alpha_index(i) for i in (1, 2)] == [0, 2]
    assert [s.beta_index(i) for i in (1, 2)] == [1, 3]
    assert [s.delta_index(j) for j in (1, 2)] == [4, 5]
    assert [s.basis_name(i) for i in range(6)] == ["a1", "b1", "a2", "b2", "d1", "d2"]
    with pytest.raises(IndexError):
        s.alpha_index(3)
    with pytest.raises(IndexError):
        s.beta_index(0)
    with pytest.raises(IndexError):
        s.delta_index(3)


def test_boundary_classes():
    s = SurfaceModel(0, 3)
    assert s.boundary_class(1).coords == (1, 0)
    assert s.boundary_class(2).coords == (0, 1)
    # the last component's class is -(d1 + d2); sign normalization
    # stores it with positive leading coordinate
    assert s.boundary_class(3).coords == (1, 1)
    assert SurfaceModel(1, 1).boundary_class(1).is_zero
    with pytest.raises(IndexError):
        s.boundary_class(4)
    with pytest.raises(IndexError):
        SurfaceModel(1, 0).boundary_class(1)


def test_class_normalization():
    assert CurveClass((-1, 2)).coords == (1, -2)
    assert CurveClass((0, -3, 1)).coords == (0, 3, -1)
    assert CurveClass((0, 0)).coords == (0, 0)
    assert CurveClass((0, 0)).is_zero
    assert not CurveClass((0, 1)).is_zero


def test_class_mod2_and_relabel():
    c = CurveClass((-3, 2, 1), label="x")
    assert c.coords == (3, -2, -1)
    assert c.mod2() == (1, 0, 1)
    assert c.relabel("y").label == "y"
    assert c.relabel(None).coords == c.coords
    assert len(c) == 3


def test_describe():
    s = SurfaceModel(1, 2)
    assert curve(s, (1, -1, 2)).describe(s) == "+a1-b1+2d1"
    assert curve(s, (0, 0, 0)).describe(s) == "0"


def test_curve_checks_rank():
    with pytest.raises(ValueError):
        curve(SurfaceModel(1), (1, 0, 0))


def test_pairing_values():
    s = SurfaceModel(2, 2)
    a1 = (1, 0, 0, 0, 0)
    b1 = (0, 1, 0, 0, 0)
    a2 = (0, 0, 1, 0, 0)
    d1 = (0, 0, 0, 0, 1)
    assert pairing(a1, b1, s) == 1
    assert pairing(b1, a1, s) == -1
    assert pairing(a1, a2, s) == 0
    assert pairing(d1, b1, s) == 0
    assert pairing(d1, d1, s) == 0
    assert pairing(CurveClass(a1), CurveClass(b1), s) == 1
    with pytest.raises(ValueError):
        pairing((1, 0), b1, s)


coords5 = st.tuples(*[st.integers(-6, 6)] * 5)


@given(coords5, coords5)
def test_pairing_antisymmetry(x, y):
    assert pairing(x, y, S22) == -pairing(y, x, S22)


@given(coords5, coords5, st.tuples(*[st.integers(0, 1)] * 5))
def test_q_additivity(x, y, values):
    q = QuadraticFormZ2(values)
    xy = tuple(a + b for a, b in zip(x, y))
    want = (q_eval(q, x, S22) + q_eval(q, y, S22) + pairing(x, y, S22)) & 1
    assert q_eval(q, xy, S22) == want


def test_q_eval_hand_case():
    s = SurfaceModel(1)
    q = QuadraticFormZ2((1, 0))
    assert q_eval(q, (1, 0), s) == 1
    assert q_eval(q, (0, 1), s) == 0
    # q(a + b) = q(a) + q(b) + <a, b>
    assert q_eval(q, (1, 1), s) == 0
    with pytest.raises(ValueError):
        q_eval(q, (1, 0, 0), s)


def test_form_values_reduced_mod2():
    assert QuadraticFormZ2((3, -2, 5)).values == (1, 0, 1)


def test_arf_genus_one():
    s = SurfaceModel(1)
    got = {vals: arf(QuadraticFormZ2(vals), s) for vals in
           ((0, 0), (0, 1), (1, 0), (1, 1))}
    assert got == {(0, 0): 0, (0, 1): 0, (1, 0): 0, (1, 1): 1}


def test_arf_ignores_boundary_directions():
    s = SurfaceModel(1, 3)
    assert arf(QuadraticFormZ2((1, 1, 1, 1)), s) == 1
    assert arf(QuadraticFormZ2((1, 0, 1, 1)), s) == 0
    with pytest.raises(ValueError):
        arf(QuadraticFormZ2((1, 1)), s)
