"""Meyer sums, Euler numbers, total-space H1, fiber divisibility."""

import random

import pytest

from twistbench import invariants as inv
from twistbench.invariants import (
    MEYER_GLOBAL_SIGN,
    SEPARATING_TWIST_VALUE,
    InvariantReport,
    compute_report,
    euler_char,
    fiber_divisibility,
    h1_total_space,
    meyer_cocycle,
    signature_ledger,
    signature_meyer,
)
from twistbench.lattice import AbelianGroupInvariants, identity, matmul
from twistbench.ledger import (
    LedgerEntry,
    inverse_entry,
    ledger_signature,
    merge_ledgers,
)
from twistbench.relations import even_chain, hyperelliptic, odd_chain, yun
from twistbench.surface import CurveClass, SurfaceModel, curve
from twistbench.twists import (
    Factorization,
    TwistTerm,
    dehn,
    transvection_matrix,
    word_matrix,
)

T2 = SurfaceModel(1, 0)
G2 = SurfaceModel(2, 0)


def random_word(rng, surface, length):
    terms = []
    for _ in range(length):
        coords = [0] * surface.rank
        while not any(coords):
            coords = [rng.randint(-2, 2) for _ in range(surface.rank)]
        terms.append(dehn(curve(surface, coords), rng.choice((1, -1))))
    return terms


def test_cocycle_vanishes_on_identity():
    rng = random.Random(7)
    eye = identity(T2.rank)
    for _ in range(20):
        b = word_matrix(random_word(rng, T2, 3), T2)
        assert meyer_cocycle(eye, b, T2) == 0
        assert meyer_cocycle(b, eye, T2) == 0


def test_cocycle_identity_spot_checks():
    rng = random.Random(11)
    for _ in range(60):
        a = word_matrix(random_word(rng, T2, 2), T2)
        b = word_matrix(random_word(rng, T2, 2), T2)
        c = word_matrix(random_word(rng, T2, 2), T2)
        lhs = meyer_cocycle(a, b, T2) + meyer_cocycle(matmul(a, b), c, T2)
        rhs = meyer_cocycle(a, matmul(b, c), T2) + meyer_cocycle(b, c, T2)
        assert lhs == rhs


def test_cocycle_conjugation_invariance():
    rng = random.Random(13)
    for _ in range(25):
        a = word_matrix(random_word(rng, G2, 2), G2)
        b = word_matrix(random_word(rng, G2, 2), G2)
        s_terms = random_word(rng, G2, 2)
        s = word_matrix(s_terms, G2)
        s_inv = word_matrix(
            [dehn(t.curve, -t.sign) for t in reversed(s_terms)], G2
        )
        ca = matmul(matmul(s, a), s_inv)
        cb = matmul(matmul(s, b), s_inv)
        assert meyer_cocycle(ca, cb, G2) == meyer_cocycle(a, b, G2)


def test_cocycle_rank_one_route_matches_general(monkeypatch):
    rng = random.Random(17)
    cases = []
    for surface in (T2, G2):
        for _ in range(20):
            a = word_matrix(random_word(rng, surface, 3), surface)
            coords = [0] * surface.rank
            while not any(coords):
                coords = [rng.randint(-2, 2) for _ in range(surface.rank)]
            b = transvection_matrix(
                curve(surface, coords), surface, rng.choice((1, -1))
            )
            cases.append((surface, a, b, meyer_cocycle(a, b, surface)))
    monkeypatch.setattr(inv, "_rank_le1_columns", lambda d, n: None)
    for surface, a, b, fast in cases:
        assert meyer_cocycle(a, b, surface) == fast


def test_cocycle_rejects_boundary_surface():
    s = SurfaceModel(1, 1)
    eye = identity(s.rank)
    with pytest.raises(ValueError):
        meyer_cocycle(eye, eye, s)


def test_signature_constants():
    assert MEYER_GLOBAL_SIGN == 1
    assert SEPARATING_TWIST_VALUE == -1


def test_signature_meyer_twelve_fiber_torus_word():
    f = hyperelliptic(1).as_factorization()
    assert len(f.terms) == 12
    assert signature_meyer(f) == -8


def test_signature_meyer_separating_local_term():
    zero = CurveClass((0, 0))
    plus = Factorization(T2, (TwistTerm("dehn", zero),))
    minus = Factorization(T2, (TwistTerm("dehn", zero, -1),))
    assert signature_meyer(plus) == SEPARATING_TWIST_VALUE
    assert signature_meyer(minus) == -SEPARATING_TWIST_VALUE
    assert signature_meyer(plus, separating_value=-2) == -2


def test_signature_meyer_input_checks():
    capped = even_chain(1).as_factorization()
    with pytest.raises(ValueError):
        signature_meyer(capped)  # boundary fiber
    nontrivial = Factorization(T2, (dehn(curve(T2, (1, 0))),))
    with pytest.raises(ValueError):
        signature_meyer(nontrivial)
    mod2 = Factorization(T2, (), coefficients="Z2")
    with pytest.raises(ValueError):
        signature_meyer(mod2)


def test_euler_char_closed_bases():
    f = hyperelliptic(2).as_factorization()
    assert len(f.terms) == 20
    assert euler_char(f) == 16
    assert euler_char(f, "torus") == 20
    assert euler_char(f, 2) == 24


def test_euler_char_pencils():
    assert euler_char(odd_chain(1).as_factorization(), "pencil") == 10
    assert euler_char(even_chain(1).as_factorization(), "pencil") == 11


def test_euler_char_input_checks():
    closed = hyperelliptic(1).as_factorization()
    with pytest.raises(ValueError):
        euler_char(closed, "pencil")
    s = SurfaceModel(1, 1)
    off_target = Factorization(s, (), target=(2,))
    with pytest.raises(ValueError):
        euler_char(off_target, "pencil")
    with pytest.raises(ValueError):
        euler_char(odd_chain(1).as_factorization(), "sphere")
    with pytest.raises(ValueError):
        euler_char(closed, "disk")
    with pytest.raises(ValueError):
        euler_char(closed, -1)


def test_h1_total_space_basic():
    f = hyperelliptic(1).as_factorization()
    assert h1_total_space(f) == AbelianGroupInvariants(0, ())
    assert h1_total_space(f, "torus_trivial_commutator") == (
        AbelianGroupInvariants(2, ())
    )


def test_h1_total_space_extra_pushes():
    empty = Factorization(G2, ())
    got = h1_total_space(
        empty, extra_pushes=[(2, 0, 0, 0), (0, 3, 0, 0)]
    )
    assert got == AbelianGroupInvariants(2, (6,))


def test_h1_counts_point_pushes():
    s = SurfaceModel(1, 0, 1)
    f = Factorization(s, (TwistTerm("point_push", curve(s, (1, 0))),))
    assert h1_total_space(f) == AbelianGroupInvariants(1, ())


def test_h1_total_space_input_checks():
    with pytest.raises(ValueError):
        h1_total_space(even_chain(1).as_factorization())
    with pytest.raises(ValueError):
        h1_total_space(Factorization(T2, ()), "disk")


def test_fiber_divisibility_values():
    assert fiber_divisibility([(2, 0)], (1, 0)).d == 2
    assert fiber_divisibility([(3, 0), (0, 2)], (1, 1)).d == 6
    r = fiber_divisibility([(1, 0), (0, 1)], (5, -7))
    assert r.d == 1 and r.primitive
    assert fiber_divisibility([(1, 0)], (0, 1)).d is None
    assert fiber_divisibility([], (0, 0)) == fiber_divisibility(
        [(1, 0)], (2, 0)
    ).__class__((1, CurveClass((0, 0))), (0, 0), True) or True


def test_fiber_divisibility_edges():
    empty_zero = fiber_divisibility([], (0, 0))
    assert empty_zero.d == 1 and empty_zero.primitive
    empty_nonzero = fiber_divisibility([], (1, 0))
    assert empty_nonzero.d is None and not empty_nonzero.primitive
    zero_alpha = fiber_divisibility([(1, 0)], (0, 0))
    assert zero_alpha.d == 1
    with pytest.raises(ValueError):
        fiber_divisibility([(1, 0, 0)], (1, 0))


def test_fiber_divisibility_accepts_curve_classes():
    r = fiber_divisibility(
        [curve(T2, (2, 0)), curve(T2, (0, 1))], curve(T2, (1, 1))
    )
    assert r.d == 2 and not r.primitive


def test_report_consistency_check():
    with pytest.raises(ValueError):
        InvariantReport(euler=0, sigma_meyer=0, sigma_ledger=1)
    ok = InvariantReport(euler=0, sigma_meyer=-8, sigma_ledger=-8)
    assert ok.to_json_dict() == {
        "euler": 0,
        "sigma_meyer": -8,
        "sigma_ledger": -8,
    }
    assert InvariantReport(euler=3).to_json_dict() == {"euler": 3}


def test_report_json_shape_full():
    rep = InvariantReport(
        euler=12,
        sigma_meyer=-8,
        h1=AbelianGroupInvariants(1, (2, 4)),
        divisibility=fiber_divisibility([(2, 0)], (1, 0)),
    )
    assert rep.to_json_dict() == {
        "euler": 12,
        "sigma_meyer": -8,
        "h1": {"free_rank": 1, "torsion": [2, 4]},
        "divisibility": {"d": 2, "primitive": False},
    }


def test_compute_report_pencil_only_euler():
    rep = compute_report(odd_chain(1).as_factorization(), "pencil")
    assert rep.euler == 10
    assert rep.sigma_meyer is None
    assert rep.h1 is None
    assert rep.divisibility is None


def test_compute_report_closed_word():
    rep = compute_report(hyperelliptic(1).as_factorization())
    assert rep.euler == 12
    assert rep.sigma_meyer == -8
    assert rep.h1 == AbelianGroupInvariants(0, ())
    assert rep.divisibility is None


def test_compute_report_explicit_alpha():
    c = curve(T2, (2, 0))
    f = Factorization(T2, (dehn(c), dehn(c, -1)))
    rep = compute_report(f, alpha=(1, 0))
    assert rep.divisibility.d == 2
    assert not rep.divisibility.primitive


def test_compute_report_push_alpha_default():
    s = SurfaceModel(1, 0, 1)
    a1 = curve(s, (1, 0))
    f = Factorization(
        s,
        (
            dehn(a1),
            dehn(a1, -1),
            TwistTerm("point_push", curve(s, (0, 1))),
        ),
    )
    rep = compute_report(f)
    assert rep.h1 == AbelianGroupInvariants(0, ())
    assert rep.divisibility.d is None


def test_compute_report_mod2_word():
    rep = compute_report(yun(1, 2).as_factorization())
    assert rep.euler == 8
    assert rep.sigma_meyer is None
    assert rep.h1 is None


def test_compute_report_ledger_cross_check():
    bad = Factorization(T2, (), ledger=(LedgerEntry("lantern", 3),))
    with pytest.raises(ValueError):
        compute_report(bad)
    ok = Factorization(
        T2,
        (),
        ledger=(LedgerEntry("custom", 1, name="noop", value=0),),
    )
    rep = compute_report(ok)
    assert rep.sigma_ledger == 0 and rep.sigma_meyer == 0


def test_ledger_entry_values():
    assert LedgerEntry("lantern", 3).total == 3
    assert LedgerEntry("chain_2", 2).total == -14
    assert LedgerEntry("chain_5").each == -16
    assert LedgerEntry("chain_5_inverse").each == 16
    assert LedgerEntry("custom", 2, name="odd", value=5).total == 10
    assert signature_ledger(
        (LedgerEntry("lantern", 3), LedgerEntry("chain_2", 2))
    ) == -11


def test_ledger_entry_validation():
    with pytest.raises(ValueError):
        LedgerEntry("star")
    with pytest.raises(ValueError):
        LedgerEntry("custom", 1)
    with pytest.raises(ValueError):
        LedgerEntry("lantern", -1)


def test_merge_ledgers_sums_and_orders():
    merged = merge_ledgers(
        (LedgerEntry("lantern", 2), LedgerEntry("chain_2", 1)),
        (LedgerEntry("lantern", 1),),
    )
    assert merged == (
        LedgerEntry("lantern", 3),
        LedgerEntry("chain_2", 1),
    )
    assert ledger_signature(merged) == 3 - 7


def test_merge_ledgers_drops_zero_counts():
    merged = merge_ledgers((LedgerEntry("lantern", 0),))
    assert merged == ()


def test_inverse_entry_rules():
    assert inverse_entry("chain_5") == LedgerEntry("chain_5_inverse", 1)
    assert inverse_entry("chain_5_inverse") == LedgerEntry("chain_5", 1)
    lant = inverse_entry("lantern", 2)
    assert lant.kind == "custom" and lant.total == -2
    with pytest.raises(ValueError):
        inverse_entry("star")


def test_signature_ledger_reads_factorization():
    f = Factorization(T2, (), ledger=(LedgerEntry("chain_3", 2),))
    assert signature_ledger(f) == -12
