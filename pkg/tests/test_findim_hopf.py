import pytest

from braidpbw.braided_space import is_categorical
from braidpbw.findim_hopf import (
    StructureBialgebra,
    check_antipode,
    check_braided_algebra,
    check_commutator_coproduct,
    check_commutator_coproduct_all,
    is_c_cocommutative,
    is_c_commutative,
    kernel_of_counit_rows,
    run_all_checks,
)
from braidpbw.linalg import Subspace
from braidpbw.scalars import MINUS_ONE, ONE, Scalar


def test_corpus_passes_all_checkers(corpus):
    for name, h in corpus.items():
        for checker_name, report in run_all_checks(h).items():
            assert report.ok, f"{name}/{checker_name}:\n{report.summary()}"


def _mutate(h: StructureBialgebra, **overrides) -> StructureBialgebra:
    fields = dict(
        names=h.names, unit=h.unit, mult=h.mult, counit=h.counit,
        comult=h.comult, braiding=h.braiding, antipode=h.antipode,
        grading=h.grading, truncation=h.truncation, trunc_grading=h.trunc_grading,
    )
    fields.update(overrides)
    return StructureBialgebra(**fields)


def test_mutated_product_fails_algebra_or_bialgebra_check(h4):
    # set x*g := +gx instead of -gx
    mult = [list(row) for row in h4.mult]
    ix, ig, igx = h4.names.index("x"), h4.names.index("g"), h4.names.index("gx")
    mult[ix] = list(mult[ix])
    mult[ix][ig] = {igx: ONE}
    bad = _mutate(h4, mult=tuple(tuple(row) for row in mult))
    reports = run_all_checks(bad)
    assert not all(r.ok for r in reports.values())
    assert not reports["algebra"].ok or not reports["bialgebra"].ok


def test_mutated_coproduct_fails_bialgebra_check(h4):
    # swap the skew-primitive coproduct of x to x(x)g + 1(x)x
    comult = list(h4.comult)
    i1, ig, ix = h4.names.index("1"), h4.names.index("g"), h4.names.index("x")
    comult[ix] = {(ix, ig): ONE, (i1, ix): ONE}
    bad = _mutate(h4, comult=tuple(comult))
    reports = run_all_checks(bad)
    assert reports["algebra"].ok
    assert not reports["bialgebra"].ok or not reports["coalgebra"].ok


def test_mutated_antipode_fails_with_witness(h4):
    antipode = list(h4.antipode)
    ix = h4.names.index("x")
    antipode[ix] = {ix: MINUS_ONE}
    bad = _mutate(h4, antipode=tuple(antipode))
    report = check_antipode(bad)
    assert not report.ok
    assert report.violations[0].witness


def test_missing_antipode_raises(h4):
    bad = _mutate(h4, antipode=None)
    with pytest.raises(ValueError):
        check_antipode(bad)


def test_commutator_examples(h4, corpus):
    kc2 = corpus["kc2"]
    ig = kc2.names.index("g")
    assert kc2.commutator({ig: ONE}, {ig: ONE}) == {}
    ig, ix, igx = h4.names.index("g"), h4.names.index("x"), h4.names.index("gx")
    out = h4.commutator({ig: ONE}, {ix: ONE})
    assert out == {igx: Scalar.from_rational(2)}


def test_c_commutativity_flags(corpus, h4):
    assert is_c_commutative(corpus["poly_plane"])
    assert is_c_cocommutative(corpus["poly_plane"])
    assert not is_c_commutative(h4)
    assert is_c_commutative(corpus["super_line"])
    assert is_c_commutative(corpus["color_plane"])
    assert not is_c_commutative(corpus["solvable_pair"])


def test_c_commutative_iff_all_commutators_vanish(corpus):
    for name in ("poly_plane", "super_line", "color_plane"):
        h = corpus[name]
        for i in range(h.dim):
            for j in range(h.dim):
                if not h.gate_ok(i, j):
                    continue
                assert h.commutator(h.basis_vec(i), h.basis_vec(j)) == {}


def test_commutator_coproduct_identity_exhaustive(corpus):
    for name, h in corpus.items():
        report = check_commutator_coproduct_all(h)
        assert report.ok, f"{name}:\n{report.summary()}"


def test_commutator_coproduct_single_pairs(h4, corpus):
    ig, ix = h4.names.index("g"), h4.names.index("x")
    assert check_commutator_coproduct(h4, {ig: ONE}, {ix: ONE})
    sl = corpus["super_line"]
    ith = sl.names.index("th")
    assert check_commutator_coproduct(sl, {ith: ONE}, {ith: ONE})


def test_counit_kernel_is_categorical(corpus):
    for name, h in corpus.items():
        rows = kernel_of_counit_rows(h)
        sub = Subspace.span(h.dim, rows)
        assert is_categorical(h.braiding, sub), name


def test_gate_skips_above_truncation(corpus):
    h = corpus["solvable_pair"]
    report = check_braided_algebra(h)
    assert report.skipped > 0
    assert "degree-aware" in report.note


def test_validation_report_rendering(h4):
    report = check_braided_algebra(h4)
    assert "braided algebra" in report.summary()
    doc = report.to_json()
    assert doc["ok"] and doc["checked"] > 0
