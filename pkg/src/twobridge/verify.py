"""End-to-end check of one worked example against its reference data.

run_example computes every pipeline stage at one precision and returns
a row-per-check report; verify_example repeats the run at escalated
precision and additionally requires the L normal form to be stable.
"""

from __future__ import annotations

from dataclasses import dataclass

from .deformations import (
    build_family,
    specialize_family,
    trace_axioms,
    universality_certificate,
)
from .homology import (
    ad_cohomology,
    chain_contraction,
    delta0_h0,
    l_function,
    torsion_criterion,
    twisted_alexander,
    vanishing_link,
)
from .laurent import LaurentPoly, eq_up_to_unit
from .matrices import Mat2
from .padics import DivisorNormalForm
from .presentations import two_bridge
from .registry import ExampleSpec, get_example
from .riley import char_points, riley_polynomial
from .words import gen


@dataclass(frozen=True)
class CheckRow:
    name: str
    passed: bool
    detail: str

    def to_json(self) -> dict:
        return {"name": self.name, "passed": self.passed, "detail": self.detail}


@dataclass(frozen=True)
class RunReport:
    example_id: str
    N: int
    D: int
    rows: tuple[CheckRow, ...]
    l_form: DivisorNormalForm | None

    @property
    def ok(self) -> bool:
        return all(r.passed for r in self.rows)

    def to_json(self) -> dict:
        return {
            "example_id": self.example_id,
            "N": self.N,
            "D": self.D,
            "rows": [r.to_json() for r in self.rows],
            "l": self.l_form.to_json() if self.l_form else None,
            "ok": self.ok,
        }


def run_example(example_id: str, N: int = 8, D: int = 8) -> RunReport:
    ex = get_example(example_id)
    rows: list[CheckRow] = []

    def row(name: str, passed: bool, detail: str = "") -> None:
        rows.append(CheckRow(name=name, passed=bool(passed), detail=detail))

    pres = two_bridge(ex.m, ex.n)

    data = riley_polynomial(pres)
    got_terms = {(i, j): c for i, j, c in data.psi.sorted_terms()}
    row(
        "riley",
        got_terms == ex.psi_terms,
        "psi(x,y) = %s" % data.psi.text(("x", "y")),
    )

    fam = build_family(ex.family_key, N=N, D=D)
    cert = universality_certificate(fam)
    row(
        "certificate",
        cert.ok,
        "trace=%s relation=%s residual=%s point=%s dPsi/dy=%d"
        % (cert.trace_ok, cert.relation_ok, cert.residual_ok, cert.point_ok, cert.psi_derivative),
    )

    axioms = trace_axioms(fam.rep, max_len=3, budget=40)
    row("trace-axioms", axioms.ok, "checks=%s" % axioms.checks)

    contraction = chain_contraction(pres, fam.rep)
    contraction_zero = all(e.is_zero for r in contraction.rows() for e in r)
    row("chain-contraction", contraction_zero, "sum rho(dr/dg_i)(rho(g_i)-1) = 0")

    res_rep = fam.rep.residual()
    res_ident = Mat2.identity(res_rep.one, res_rep.zero)
    det_g2 = (res_rep(gen(2)) - res_ident).det()
    row(
        "residual-det-g2",
        det_g2.residue() == ex.residual_det_g2 % ex.p,
        "det(rho(g2)-I) = %d mod %d" % (det_g2.residue(), ex.p),
    )

    ta = twisted_alexander(pres, res_rep)
    expected_poly = LaurentPoly(res_rep.ring, dict(ex.residual_delta_coeffs))
    prim = ta.primary()
    if prim.quotient is not None:
        delta_match = eq_up_to_unit(prim.quotient, expected_poly)
    else:
        delta_match = eq_up_to_unit(prim.numerator, expected_poly * prim.denominator)
    row("alexander-residual", delta_match, "Delta = %s (up to unit)" % (prim.quotient or prim.numerator))

    delta1 = ta.value_at_one()
    row(
        "alexander-residual-at-1",
        delta1.residue() == ex.residual_delta_at_one_residue % ex.p,
        "Delta(1) = %d mod %d" % (delta1.residue(), ex.p),
    )

    pts = char_points(pres, ex.p)
    flagged = {(pt.x, pt.y) for pt in pts if pt.absolutely_irreducible}
    row(
        "char-point",
        ex.char_point in flagged,
        "(%d, %d) absolutely irreducible over F_%d" % (*ex.char_point, ex.p),
    )

    coh = ad_cohomology(pres, res_rep)
    row(
        "adjoint-cohomology",
        coh.h0 == 0 and coh.h1 == coh.h2 and coh.h2 >= 1 and coh.euler == 0,
        "h0=%d h1=%d h2=%d" % (coh.h0, coh.h1, coh.h2),
    )

    d0 = delta0_h0(pres, fam.rep)
    d0_unit = (
        d0.kind == "proper"
        and isinstance(d0.normal_form, DivisorNormalForm)
        and d0.normal_form.is_unit_form()
        and d0.normal_form.certified
    )
    row("delta0", d0_unit == ex.expected_delta0_unit, "Delta_0(H_0) unit: %s" % d0_unit)

    lres = l_function(pres, fam.rep)
    nf = lres.normal_form
    row(
        "l-function",
        (nf.mu, nf.lam) == ex.expected_l and nf.certified,
        "L = p^%d T^%d certified=%s" % (nf.mu, nf.lam, nf.certified),
    )

    if ex.expected_minors is not None:
        expected = ex.expected_minors(fam)
        row(
            "minors-closed-form",
            list(lres.minors) == list(expected),
            "six 2-minors match closed forms coefficientwise",
        )

    if ex.x_rat is not None:
        spec = specialize_family(fam, ex.x_rat)
        spec_ident = Mat2.identity(spec.rep.one, spec.rep.zero)
        sdet = (spec.rep(gen(2)) - spec_ident).det()
        row(
            "specialized-det-g2",
            sdet == ex.spec_det_g2,
            "det(rho(g2)-I) = %s at x=%d" % (sdet, ex.x_rat),
        )
        sta = twisted_alexander(pres, spec.rep)
        sprim = sta.primary()
        sexp = ex.expected_spec_delta(spec)
        if sprim.quotient is not None:
            smatch = eq_up_to_unit(sprim.quotient, sexp)
        else:
            smatch = eq_up_to_unit(sprim.numerator, sexp * sprim.denominator)
        row("specialized-alexander", smatch, "Delta at x=%d matches (up to unit)" % ex.x_rat)
        sdelta1 = sta.value_at_one()
        sexp1 = ex.expected_spec_delta_at_one(spec)
        row(
            "specialized-alexander-at-1",
            sdelta1 == sexp1 and not sdelta1.is_zero,
            "Delta(1) = %s nonzero" % sdelta1,
        )
        tors = torsion_criterion(pres, spec.rep)
    else:
        tors = torsion_criterion(pres, res_rep)
    row(
        "torsion",
        tors.holds,
        "witness %s, det = %s, Delta(1) = %s" % (tors.witness, tors.witness_det, tors.delta_at_one),
    )

    link = vanishing_link(pres, fam.rep, res_rep)
    row(
        "vanishing-link",
        link.consistent,
        "Delta_0 unit=%s, L=(mu=%d,lam=%d), residual Delta(1)=%s"
        % (link.delta0_unit, link.l_form.mu, link.l_form.lam, link.residual_delta_at_one),
    )

    return RunReport(example_id=example_id, N=N, D=D, rows=tuple(rows), l_form=nf)


@dataclass(frozen=True)
class VerifyReport:
    base: RunReport
    escalated: RunReport
    stable: bool

    @property
    def ok(self) -> bool:
        return self.base.ok and self.escalated.ok and self.stable

    def to_json(self) -> dict:
        return {
            "base": self.base.to_json(),
            "escalated": self.escalated.to_json(),
            "stable": self.stable,
            "ok": self.ok,
        }


def verify_example(example_id: str, N: int = 8, D: int = 8, step: int = 4) -> VerifyReport:
    base = run_example(example_id, N=N, D=D)
    escalated = run_example(example_id, N=N + step, D=D + step)
    stable = (
        base.l_form is not None
        and escalated.l_form is not None
        and base.l_form.same_divisor(escalated.l_form)
        and base.l_form.certified == escalated.l_form.certified
    )
    return VerifyReport(base=base, escalated=escalated, stable=stable)
