import json

import pytest

from sl2conc.matrixcon import commutator_t
from sl2conc.verify import (
    SpanReport,
    gl_orbit_span,
    verify_algebra_generation,
    verify_D0_generation,
    verify_D_generation,
    verify_highest_weight,
    verify_module_decomposition,
)


def passed(reports):
    return all(r.passed for r in reports)


def test_generation_d2_t_only():
    reports = verify_algebra_generation(2, 2, 3)
    assert passed(reports)
    assert all(r.theorem == "algebra_generation[t]" for r in reports)


def test_generation_d3():
    assert passed(verify_algebra_generation(2, 3, 4))


def test_t_only_deficient_for_d3():
    r = verify_algebra_generation(2, 3, 2, use_u=False)[2]
    assert r.verdict == "deficient" and r.span_dim < r.oracle_dim


def test_enlarging_generators_never_shrinks_span():
    for small, big in zip(verify_algebra_generation(2, 4, 4, use_u=False), verify_algebra_generation(2, 4, 4, use_u=True)):
        assert small.span_dim <= big.span_dim <= big.oracle_dim


def test_module_decomposition_d3():
    reports = verify_module_decomposition(2, 3, 4)
    assert passed(reports)
    assert all(r.detail["direct"] for r in reports)
    with pytest.raises(ValueError):
        verify_module_decomposition(1, 3, 2)


def test_D0_generation():
    reports = verify_D0_generation(2, 4)
    assert reports[2].span_dim == 3 and passed(reports)
    reports = verify_D0_generation(3, 3)
    assert reports[3].detail["rank_drop"] == {"E123": 1}
    assert passed(reports)
    ones = verify_D0_generation(1, 6)
    assert [r.span_dim for r in ones] == [1, 0, 1, 0, 1, 0, 1]


def test_D_generation():
    assert verify_D_generation(3, 2, 1)[1].span_dim == 3
    assert passed(verify_D_generation(2, 2, 4))
    assert all(r.span_dim == r.oracle_dim == 0 for r in verify_D_generation(2, 3, 4))


@pytest.mark.parametrize("d", [2, 3, 4])
def test_highest_weight(d):
    for s in range(1, d):
        assert verify_highest_weight(2, d, s)
    with pytest.raises(ValueError):
        verify_highest_weight(2, d, d)


def test_commutator_changes_sign_under_swap():
    from sl2conc.classical import glm_act

    C = commutator_t(1, 2, 3, 2)
    assert glm_act(C, [[0, 1], [1, 0]]) == -C


def test_orbit_span_size():
    from sl2conc.matrixcon import t

    assert len(gl_orbit_span(t(1, 3, 3) ** 2)) == 6


def test_report_json_fields():
    r = verify_algebra_generation(2, 3, 1)[1]
    data = r.to_json()
    assert {"theorem", "m", "d_or_q", "degree", "span_dim", "oracle_dim", "verdict"} <= set(data)
    json.dumps(data)


def test_report_guard():
    from sl2conc.verify import _report

    with pytest.raises(AssertionError):
        _report("x", 1, 1, 1, 5, 4, [])
    assert isinstance(_report("x", 1, 1, 1, 4, 4, []), SpanReport)
