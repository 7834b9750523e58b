import itertools

import pytest
from hypothesis import given, settings, strategies as st

from calihecke.calibration import enumerate_cali
from calihecke.cyclotomics import Cyc
from calihecke.multipartitions import Charge
from calihecke.seminormal import (
    admissible_transposition,
    class_form_signs,
    cyclotomic_membership,
    enumerate_calibrated_classes,
    form_signs,
    form_values,
    is_calibrated_weight,
    is_unitary_class,
    seminormal_module,
    verify_form_invariance,
    verify_hecke_relations,
    weight_class,
)


def test_calibrated_weight_examples():
    assert is_calibrated_weight((0, 1, 2), 4)
    assert is_calibrated_weight((0, 2), 4)
    assert not is_calibrated_weight((0, 0), 4)
    assert not is_calibrated_weight((0, 1, 0), 4)  # only +1 lies between
    # at e = 2 the two neighbours coincide, so one value between suffices
    assert is_calibrated_weight((0, 1, 0), 2)
    # generic q: no reduction mod e at all
    assert not is_calibrated_weight((0, 2, 0), 0)
    assert is_calibrated_weight((0, 1, 2, 3), 0)


def test_weight_class_rejects_uncalibrated():
    with pytest.raises(ValueError):
        weight_class((0, 0), 3)


def test_weight_class_generic_staircase_is_singleton():
    assert weight_class((0, 1, 2, 3), 0) == [(0, 1, 2, 3)]


def test_weight_class_known_sizes():
    assert weight_class((0, 1), 3) == [(0, 1)]
    assert weight_class((0, 2), 4) == [(0, 2), (2, 0)]
    assert weight_class((0, 2, 1), 3) == [(0, 2, 1)]
    # the class of the column reading weight of (2,1) is 2-dimensional for e >= 4
    assert len(weight_class((0, 1, 3), 4)) == 2
    assert weight_class((0, 1, 4), 5) == [(0, 1, 4), (0, 4, 1)]


def test_scalar_modules_n2():
    # (0,1): T_1 acts by q; (1,0): T_1 acts by -1
    mod = seminormal_module([(0, 1)], 3)
    assert mod.T[0] == [[(0, mod.q)]]
    mod = seminormal_module([(1, 0)], 3)
    assert mod.T[0] == [[(0, Cyc.from_rational(3, -1))]]


def test_hecke_relations_on_known_classes():
    for cls, e, a in [
        (weight_class((0, 2), 4), 4, 1),
        (weight_class((0, 2, 1), 3), 3, 1),
        (weight_class((0, 1, 3), 5), 5, 1),
        (weight_class((0, 1, 4), 5), 5, 2),
        (weight_class((0, 2, 1, 3), 4), 4, 1),
    ]:
        mod = seminormal_module(cls, e, a)
        report = verify_hecke_relations(mod)
        assert all(report.values()), report


def test_form_invariance_on_known_classes():
    for m, e, a in [((0, 2), 4, 1), ((0, 1, 3), 5, 1), ((0, 1, 4), 5, 2),
                    ((0, 2, 1, 3), 4, 1)]:
        mod = seminormal_module(weight_class(m, e), e, a)
        report = verify_form_invariance(mod)
        assert all(report.values()), report


def test_form_values_are_real():
    mod = seminormal_module(weight_class((0, 2, 1, 3), 4), 4)
    for v in form_values(mod):
        assert v.conj() == v
        assert not v.is_zero()


def test_signs_match_numeric_form_values():
    for m, e, a in [((0, 2), 4, 1), ((0, 1, 3), 5, 1), ((0, 1, 4), 5, 2)]:
        mod = seminormal_module(weight_class(m, e), e, a)
        signs = form_signs(mod)
        vals = form_values(mod)
        for j, wt in enumerate(mod.cls):
            x = vals[j].to_complex()
            assert abs(x.imag) < 1e-9
            assert (1 if x.real > 0 else -1) == signs[wt]


def test_unitary_verdicts():
    assert is_unitary_class(seminormal_module(weight_class((0, 2), 4), 4))
    # same class, but q = zeta^2 on Z/5 flips a sign
    cls = weight_class((0, 1, 4), 5)
    assert is_unitary_class(seminormal_module(cls, 5, a=1))
    assert not is_unitary_class(seminormal_module(cls, 5, a=2))


def test_class_form_signs_matches_module_route():
    for m, e, a in [((0, 2), 4, 1), ((0, 2, 1, 3), 4, 1), ((0, 1, 4), 5, 2)]:
        cls = weight_class(m, e)
        assert class_form_signs(cls, e, a) == form_signs(seminormal_module(cls, e, a))


def test_cyclotomic_membership():
    mod = seminormal_module(weight_class((0, 2), 4), 4)
    assert cyclotomic_membership(mod, Charge((0, 2), 4))
    # the class contains weights starting at 0 and at 2, so a single Q_i
    # cannot absorb both
    assert not cyclotomic_membership(mod, Charge((0,), 4))
    assert not cyclotomic_membership(mod, Charge((1, 3), 4))


def test_corrupted_operator_fails_relations():
    mod = seminormal_module(weight_class((0, 2), 4), 4)
    assert all(verify_hecke_relations(mod).values())
    j, c = mod.T[0][0][0]
    mod.T[0][0][0] = (j, c + 1)
    report = verify_hecke_relations(mod)
    assert not all(report.values())


def test_class_count_matches_calibrated_multipartitions():
    # classes with the right cyclotomic eigenvalues are in bijection with
    # the calibrated multipartitions of the same size
    for e in (2, 3):
        for ell, s in [(1, (0,)), (2, (0, 1))]:
            ch = Charge(s[:ell], e)
            for n in range(1, 5):
                member = 0
                for cls in enumerate_calibrated_classes(n, e):
                    mod = seminormal_module(cls, e)
                    if cyclotomic_membership(mod, ch):
                        member += 1
                assert member == len(enumerate_cali(n, ch))


@given(st.integers(min_value=2, max_value=5), st.integers(min_value=2, max_value=4))
@settings(max_examples=20, deadline=None)
def test_all_classes_satisfy_relations(e, n):
    for cls in enumerate_calibrated_classes(n, e)[:6]:
        mod = seminormal_module(cls, e)
        assert all(verify_hecke_relations(mod).values())
        assert all(verify_form_invariance(mod).values())
