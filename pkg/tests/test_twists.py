"""Twist terms, word actions and word surgery operations."""

import random

import pytest

from twistbench import (
    CurveClass,
    Factorization,
    LedgerEntry,
    SurfaceModel,
    cancel_pairs,
    cap_boundary,
    conjugate_global,
    curve,
    cyclic_permute,
    dehn,
    factor_matrix,
    fiber_sum,
    homological_triviality,
    hurwitz_move,
    substitute,
    transvection,
    transvection_matrix,
)
from twistbench.lattice import identity, matmul
from twistbench.relations import builtin_relation, identity_embedding
from twistbench.twists import (
    TwistTerm,
    apply_transvection,
    factor_matrix_mod2,
    is_symplectic,
    word_matrix,
)

T2 = SurfaceModel(1)


def _cls(*coords):
    return CurveClass(tuple(coords))


def _rand_class(rng, rank):
    while True:
        c = tuple(rng.randint(-2, 2) for _ in range(rank))
        if any(c):
            return CurveClass(c)


def _rand_word(rng, surface, length):
    return tuple(
        dehn(_rand_class(rng, surface.rank), rng.choice((1, -1)))
        for _ in range(length)
    )


def test_term_validation():
    with pytest.raises(ValueError):
        TwistTerm("spin", _cls(1, 0))
    with pytest.raises(ValueError):
        TwistTerm("dehn", _cls(1, 0), sign=2)


def test_term_acts():
    assert dehn(_cls(1, 0)).acts
    assert not dehn(_cls(0, 0)).acts
    assert not TwistTerm("boundary", _cls(1, 0)).acts
    assert not TwistTerm("point_push", _cls(1, 0)).acts


def test_label_component():
    assert TwistTerm("boundary", CurveClass((1, 0), label="delta2")).label_component == 2
    assert TwistTerm("boundary", CurveClass((1, 0), label="rim")).label_component is None
    assert dehn(_cls(1, 0)).label_component is None


def test_transvection_direction():
    # T_c(x) = x + <x, c> c; the image of b1 under the a1 twist is b1 - a1
    a1, b1 = (1, 0), (0, 1)
    assert apply_transvection(b1, a1, T2) == (-1, 1)
    assert apply_transvection(a1, b1, T2) == (1, 1)
    assert apply_transvection(a1, a1, T2) == (1, 0)
    # inverse twist flips the correction term
    assert apply_transvection(b1, a1, T2, sign=-1) == (1, 1)


def test_transvection_wrapper():
    got = transvection(_cls(1, 0), (0, 1), T2)
    assert got == (-1, 1)
    cc = transvection(_cls(1, 0), _cls(0, 1), T2)
    # CurveClass output is sign-normalized
    assert cc.coords == (1, -1)
    assert isinstance(cc, CurveClass)


def test_transvection_matrix_columns():
    rng = random.Random(2)
    for _ in range(100):
        s = SurfaceModel(rng.randint(1, 2), rng.choice((0, 2)))
        c = _rand_class(rng, s.rank)
        sign = rng.choice((1, -1))
        m = transvection_matrix(c, s, sign)
        for j in range(s.rank):
            e = tuple(1 if i == j else 0 for i in range(s.rank))
            img = apply_transvection(e, c.coords, s, sign)
            assert tuple(m[i][j] for i in range(s.rank)) == img
        assert is_symplectic(m, s)


def test_word_matrix_rightmost_first():
    rng = random.Random(3)
    for _ in range(50):
        s = SurfaceModel(2)
        w = _rand_word(rng, s, 4)
        mats = [transvection_matrix(t.curve, s, t.sign) for t in w]
        prod = identity(s.rank)
        for m in mats:
            prod = matmul(prod, m)
        assert word_matrix(w, s) == prod


def test_factorization_validation():
    with pytest.raises(ValueError):
        Factorization(T2, (dehn(_cls(1, 0, 0)),))
    with pytest.raises(ValueError):
        Factorization(SurfaceModel(1, 2), (), target=(1,))
    with pytest.raises(ValueError):
        Factorization(T2, (), coefficients="Q")


def test_mod2_words_refuse_integer_ops():
    f = Factorization(T2, (dehn(_cls(1, 0)),), coefficients="Z2")
    with pytest.raises(ValueError):
        factor_matrix(f)
    assert factor_matrix_mod2(f) == [[1, 1], [0, 1]]


def test_triviality_of_torus_relator():
    f = builtin_relation("chain_2").as_factorization()
    assert f.target == (1,)
    assert homological_triviality(f)
    # dropping one twist breaks it
    broken = Factorization(f.surface, f.terms[:-1], target=f.target)
    assert not homological_triviality(broken)


def test_classes_filter():
    f = Factorization(
        T2,
        (dehn(_cls(1, 0)), TwistTerm("point_push", _cls(0, 1))),
    )
    assert f.dehn_count == 1
    assert len(f.classes()) == 1
    assert len(f.classes(kind=None)) == 2


def test_hurwitz_preserves_product():
    rng = random.Random(7)
    for _ in range(200):
        s = SurfaceModel(rng.randint(1, 2), rng.choice((0, 3)))
        f = Factorization(s, _rand_word(rng, s, rng.randint(2, 6)))
        i = rng.randrange(len(f.terms) - 1)
        before = word_matrix(f.terms, s)
        moved = hurwitz_move(f, i, rng.choice(("right", "left")))
        assert word_matrix(moved.terms, s) == before


def test_hurwitz_left_inverts_right():
    rng = random.Random(8)
    s = SurfaceModel(2)
    f = Factorization(s, _rand_word(rng, s, 5))
    for i in range(4):
        assert hurwitz_move(hurwitz_move(f, i, "right"), i, "left").terms == f.terms


def test_hurwitz_slides_unchanged_term():
    s = SurfaceModel(1)
    f = Factorization(s, (dehn(_cls(1, 0)), dehn(_cls(0, 1))))
    right = hurwitz_move(f, 0, "right")
    assert right.terms[0].curve.coords == (0, 1)
    left = hurwitz_move(f, 0, "left")
    assert left.terms[1].curve.coords == (1, 0)


def test_hurwitz_bounds_and_direction():
    f = Factorization(T2, (dehn(_cls(1, 0)), dehn(_cls(0, 1))))
    with pytest.raises(IndexError):
        hurwitz_move(f, 1)
    with pytest.raises(ValueError):
        hurwitz_move(f, 0, "up")


def test_cyclic_permute():
    terms = tuple(dehn(_cls(1, k)) for k in range(3))
    f = Factorization(SurfaceModel(1), terms)
    assert cyclic_permute(f, 1).terms == terms[1:] + terms[:1]
    assert cyclic_permute(f, -1).terms == terms[2:] + terms[:2]
    assert cyclic_permute(f, 3).terms == terms
    assert cyclic_permute(Factorization(T2, ()), 2).terms == ()


def test_cancel_pairs():
    a = dehn(_cls(1, 0))
    a_inv = dehn(_cls(1, 0), sign=-1)
    b = dehn(_cls(0, 1))
    f = Factorization(T2, (b, a, a_inv, b))
    assert cancel_pairs(f).terms == (b, b)
    # cascading cancellation through the stack
    g = Factorization(T2, (a, b, dehn(_cls(0, 1), sign=-1), a_inv))
    assert cancel_pairs(g).terms == ()
    # same sign does not cancel
    h = Factorization(T2, (a, a))
    assert cancel_pairs(h).terms == (a, a)


def test_conjugate_global_matches_classwise_action():
    rng = random.Random(9)
    s = SurfaceModel(2)
    f = Factorization(s, _rand_word(rng, s, 4))
    w = _rand_word(rng, s, 2)
    m = word_matrix(w, s)
    got = conjugate_global(f, w)
    for before, after in zip(f.terms, got.terms):
        img = tuple(
            sum(m[i][j] * before.curve.coords[j] for j in range(s.rank))
            for i in range(s.rank)
        )
        assert after.curve.coords == CurveClass(img).coords
        assert after.sign == before.sign


def test_conjugate_global_rejects_nonsymplectic_matrix():
    f = Factorization(T2, (dehn(_cls(1, 0)),))
    with pytest.raises(ValueError):
        conjugate_global(f, [[2, 0], [0, 2]])
    assert conjugate_global(f, ()).terms == f.terms


def test_conjugation_preserves_triviality():
    rng = random.Random(10)
    f = builtin_relation("hyperelliptic", 1).as_factorization()
    w = _rand_word(rng, f.surface, 3)
    assert homological_triviality(conjugate_global(f, w))


def test_is_symplectic():
    assert is_symplectic(identity(2), T2)
    assert not is_symplectic([[1, 1], [1, 1]], T2)
    # boundary directions must stay decoupled
    s = SurfaceModel(1, 2)
    m = identity(3)
    m[0][2] = 1
    assert not is_symplectic(m, s)


def test_fiber_sum_concatenates_and_merges_ledgers():
    t = builtin_relation("hyperelliptic", 1)
    f1 = t.as_factorization()
    f1 = Factorization(
        f1.surface, f1.terms, ledger=(LedgerEntry("lantern", 2),)
    )
    f2 = Factorization(
        f1.surface, f1.terms, ledger=(LedgerEntry("lantern", 1),)
    )
    total = fiber_sum(f1, f2)
    assert len(total.terms) == 2 * len(f1.terms)
    assert total.ledger == (LedgerEntry("lantern", 3),)
    assert homological_triviality(total)


def test_fiber_sum_twisted_glue():
    t = builtin_relation("hyperelliptic", 1)
    f = t.as_factorization()
    glued = fiber_sum(f, f, glue=(dehn(_cls(1, 0)),))
    assert homological_triviality(glued)
    # second summand's classes were conjugated
    assert glued.terms[len(f.terms):] != f.terms


def test_fiber_sum_requirements():
    f = builtin_relation("hyperelliptic", 1).as_factorization()
    other = builtin_relation("hyperelliptic", 2).as_factorization()
    with pytest.raises(ValueError):
        fiber_sum(f, other)
    pencil = builtin_relation("chain_2").as_factorization()
    with pytest.raises(ValueError):
        fiber_sum(pencil, pencil)


def test_substitute_lantern_roundtrip():
    t = builtin_relation("lantern")
    f = t.as_factorization()
    emb = identity_embedding(f.surface)
    # splice the relation out: the three twist classes become the four
    # boundary twists, and the ledger records the removal
    out = substitute(f, 0, 3, t, emb, side="lhs")
    assert len(out.terms) == 4
    assert [tt.curve.label for tt in out.terms] == [
        "delta1",
        "delta2",
        "delta3",
        "delta4",
    ]
    assert out.ledger[0].kind == "custom"
    assert out.ledger[0].name == "lantern_inverse"
    assert out.ledger[0].total == -1
    # splice it back in
    back = substitute(out, 0, 4, t, emb, side="rhs")
    assert [tt.curve.coords for tt in back.terms] == [
        tt.curve.coords for tt in f.terms
    ]
    assert back.ledger[0].total == -1
    assert back.ledger[1] == LedgerEntry("lantern", 1)


def test_substitute_rejects_misaligned_segment():
    t = builtin_relation("lantern")
    f = t.as_factorization()
    emb = identity_embedding(f.surface)
    with pytest.raises(ValueError):
        substitute(f, 0, 2, t, emb, side="lhs")
    swapped = Factorization(
        f.surface, (f.terms[1], f.terms[0], f.terms[2]), target=f.target
    )
    with pytest.raises(ValueError):
        substitute(swapped, 0, 3, t, emb, side="lhs")
    with pytest.raises(IndexError):
        substitute(f, 0, 9, t, emb, side="lhs")
    with pytest.raises(ValueError):
        substitute(f, 0, 3, t, emb, side="top")


def test_substitute_sign_mismatch():
    t = builtin_relation("lantern")
    f = t.as_factorization()
    flipped = Factorization(
        f.surface,
        (TwistTerm("dehn", f.terms[0].curve, -1),) + f.terms[1:],
        target=f.target,
    )
    with pytest.raises(ValueError):
        substitute(flipped, 0, 3, t, identity_embedding(f.surface), side="lhs")


def test_substitute_needs_ledger_entry_for_plain_templates():
    t = builtin_relation("hyperelliptic", 1)
    f = t.as_factorization()
    emb = identity_embedding(f.surface)
    with pytest.raises(ValueError):
        substitute(f, 0, len(f.terms), t, emb, side="lhs")
    custom = LedgerEntry("custom", name="hyperelliptic_out", value=0)
    out = substitute(f, 0, len(f.terms), t, emb, side="lhs", ledger_entry=custom)
    assert out.ledger == (custom,)


def test_cap_boundary_projects_classes():
    f = builtin_relation("odd_chain", 1).as_factorization()
    assert f.surface.boundary == 2
    capped = cap_boundary(f, (1, 2))
    assert capped.surface == SurfaceModel(1, 0)
    assert capped.target == ()
    assert len(capped.terms) == len(f.terms)
    # the top chain curve wound around a hole; capped it is plain a1
    assert {t.curve.coords for t in capped.terms} == {(1, 0), (0, 1)}
    assert homological_triviality(capped)


def test_cap_single_component():
    f = builtin_relation("odd_chain", 1).as_factorization()
    capped = cap_boundary(f, (1,))
    assert capped.surface == SurfaceModel(1, 1)
    assert capped.target == (1,)
    # d1 dies with the capped hole, so the winding chain curve is a1 now
    assert {t.curve.coords for t in capped.terms} == {(1, 0), (0, 1)}


def test_cap_deletes_boundary_twists():
    s = SurfaceModel(1, 2)
    f = Factorization(
        s,
        (
            TwistTerm("boundary", s.boundary_class(1)),
            TwistTerm("boundary", s.boundary_class(2)),
            dehn(curve(s, (1, 0, 0))),
        ),
    )
    capped = cap_boundary(f, (1,))
    kinds = [t.kind for t in capped.terms]
    assert kinds == ["boundary", "dehn"]
    # the survivor is the only hole left, so its class is zero
    assert capped.terms[0].curve.is_zero


def test_cap_bounds():
    f = builtin_relation("odd_chain", 1).as_factorization()
    with pytest.raises(IndexError):
        cap_boundary(f, (3,))
