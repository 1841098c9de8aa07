"""Example registry and the end-to-end verification reports."""

import pytest

from twobridge.registry import EXAMPLE_IDS, FAMILY_TO_ID, get_example
from twobridge.deformations import build_family, specialize_family
from twobridge.presentations import two_bridge
from twobridge.riley import riley_polynomial
from twobridge.verify import run_example, verify_example

BASE_ROW_NAMES = (
    "riley",
    "certificate",
    "trace-axioms",
    "chain-contraction",
    "residual-det-g2",
    "alexander-residual",
    "alexander-residual-at-1",
    "char-point",
    "adjoint-cohomology",
    "delta0",
    "l-function",
    "torsion",
    "vanishing-link",
)

SPECIALIZED_ROW_NAMES = (
    "minors-closed-form",
    "specialized-det-g2",
    "specialized-alexander",
    "specialized-alexander-at-1",
)


def test_registry_ids():
    assert EXAMPLE_IDS == ("4.5.1", "4.5.2", "4.5.3a", "4.5.3b")
    assert FAMILY_TO_ID == {
        "rho1": "4.5.1",
        "rho2": "4.5.2",
        "rho3": "4.5.3a",
        "rho4": "4.5.3b",
    }
    with pytest.raises(ValueError):
        get_example("4.5.9")


@pytest.mark.parametrize("example_id", EXAMPLE_IDS)
def test_registry_psi_terms_match_riley(example_id):
    ex = get_example(example_id)
    psi = riley_polynomial(two_bridge(ex.m, ex.n)).psi
    assert psi.terms == ex.psi_terms


@pytest.mark.parametrize("example_id", ["4.5.3a", "4.5.3b"])
def test_registry_specialized_data_consistent(example_id):
    # the frozen Delta polynomial evaluates at t=1 to the frozen Delta(1)
    ex = get_example(example_id)
    fam = build_family(ex.family_key)
    spec = specialize_family(fam, ex.x_rat)
    delta = ex.expected_spec_delta(spec)
    at_one = ex.expected_spec_delta_at_one(spec)
    assert delta.evaluate(1) == at_one
    assert not at_one.is_zero
    assert len(ex.expected_minors(fam)) == 6


def test_run_example_451():
    report = run_example("4.5.1")
    assert report.ok
    assert tuple(r.name for r in report.rows) == BASE_ROW_NAMES
    assert (report.l_form.mu, report.l_form.lam) == (0, 0)
    js = report.to_json()
    assert js["ok"] is True and js["example_id"] == "4.5.1"
    assert len(js["rows"]) == len(BASE_ROW_NAMES)


def test_run_example_453a_has_specialized_rows():
    report = run_example("4.5.3a")
    assert report.ok
    names = tuple(r.name for r in report.rows)
    for name in SPECIALIZED_ROW_NAMES:
        assert name in names
    assert (report.l_form.mu, report.l_form.lam) == (0, 2)


def test_verify_example_stability():
    report = verify_example("4.5.1", N=6, D=6)
    assert report.ok
    assert report.stable
    assert (report.escalated.N, report.escalated.D) == (10, 10)
    js = report.to_json()
    assert js["stable"] is True and js["base"]["N"] == 6
