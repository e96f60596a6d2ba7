import json

import pytest

from padichyper.errors import PreconditionFailed
from padichyper.fields import build_field, phi
from padichyper.verify import (
    AlphaValue,
    RangeSpec,
    run_suite,
    verify_bs1,
    verify_cor2,
    verify_eq29_record,
    verify_gauss_dh_record,
    verify_gauss_gk_record,
    verify_gauss_theta_record,
    verify_hessian,
    verify_lemma5_record,
    verify_lemma31_record,
    verify_mc,
    verify_mt1,
    verify_ortho_record,
)


class TestAlpha:
    def test_branches(self):
        assert AlphaValue.for_field(build_field(11, 1)).value == 1
        assert AlphaValue.for_field(build_field(13, 1)).value == -1

    def test_verbatim_formula_equals_minus_one_when_q_1_mod_3(self):
        # 5 - 6 phi(-3) with phi(-3) forced to +1
        for (p, r) in [(7, 1), (13, 1), (31, 1), (5, 2), (11, 2)]:
            f = build_field(p, r)
            if f.q % 3 == 1:
                assert AlphaValue.for_field(f).value == -1


class TestMT1:
    def test_passes_at_p11(self):
        for d in (2, 3, 4, 5, 8, 10):
            rec = verify_mt1(11, 1, d)
            assert rec.passed and rec.theorem == "MT1"

    def test_passes_at_r2(self):
        rec = verify_mt1(5, 2, [2, 1])
        assert rec.passed

    def test_gate_d_cubed(self):
        with pytest.raises(PreconditionFailed) as e:
            verify_mt1(11, 1, 1)
        assert e.value.gate == "d_cubed_is_one"

    def test_gate_d_zero(self):
        with pytest.raises(PreconditionFailed) as e:
            verify_mt1(11, 1, 0)
        assert e.value.gate == "d_is_zero"

    def test_gate_m_zero(self):
        # at p = 7 every d with d^3 != 1 has d^3 = -1, so m = -27d(d^3+8) = 0
        with pytest.raises(PreconditionFailed) as e:
            verify_mt1(7, 1, 3)
        assert e.value.gate == "m_is_zero"

    def test_gate_small_p(self):
        with pytest.raises(PreconditionFailed) as e:
            verify_mt1(3, 1, 2)
        assert e.value.gate == "p_too_small"

    def test_symmetric_verdict(self):
        # the comparison is an equality of p-adic numbers: swapping the
        # rendered sides cannot change the verdict
        rec = verify_mt1(11, 1, 2)
        assert rec.passed == (rec.lhs == rec.rhs)

    def test_reproducible_records(self):
        a = verify_mt1(13, 2, [5, 1])
        b = verify_mt1(13, 2, [5, 1])
        assert (a.theorem, a.params, a.lhs, a.rhs, a.passed) == (
            b.theorem,
            b.params,
            b.lhs,
            b.rhs,
            b.passed,
        )


class TestCOR2:
    def find_branch1_instance(self, p):
        field = build_field(p, 1)
        from padichyper.curves import hessian_bridge

        for di in range(2, p):
            d = field.from_index(di)
            if (d**3 - 1).is_zero:
                continue
            m, n = hessian_bridge(d)
            if m.is_zero or n.is_zero or -27 * n * n / (4 * m**3) == field.one:
                continue
            target = -m / 3
            s = field.dlog[target.idx]
            if s % 2 == 0:
                k = field.from_index(field.exp[s // 2])
                return d, k
        return None

    def test_branch1_scan_and_pass(self):
        found = self.find_branch1_instance(11)
        assert found is not None
        d, k = found
        rec = verify_cor2(1, 11, 1, d, k)
        assert rec.passed and rec.theorem == "COR2_1"

    def test_branch2_scan_and_pass(self):
        field = build_field(17, 1)
        from padichyper.curves import hessian_bridge

        hits = 0
        for di in range(2, 17):
            d = field.from_index(di)
            if (d**3 - 1).is_zero:
                continue
            m, n = hessian_bridge(d)
            if m.is_zero or n.is_zero or -27 * n * n / (4 * m**3) == field.one:
                continue
            for hi in range(1, 17):
                h = field.from_index(hi)
                if (h**3 + m * h + n).is_zero and not (3 * h * h + m).is_zero:
                    rec = verify_cor2(2, 17, 1, d, h)
                    assert rec.passed and rec.theorem == "COR2_2"
                    hits += 1
        assert hits > 0

    def test_branch_equation_gate(self):
        with pytest.raises(PreconditionFailed) as e:
            verify_cor2(1, 11, 1, 2, 1)
        assert e.value.gate == "branch_equation"


class TestBS1:
    def test_branch1_p7_k1(self):
        # a = -3; pick the first b passing the gates
        field = build_field(7, 1)
        a = field.element(-3)
        for bi in range(1, 7):
            b = field.from_index(bi)
            if -27 * b * b / (4 * a**3) == field.one:
                continue
            if (field.one**3 + a + b).is_zero:
                continue
            rec = verify_bs1(1, 7, 1, a, b, 1)
            assert rec.passed
            return
        raise AssertionError("no admissible b found")

    def test_branch2_p11_h1(self):
        field = build_field(11, 1)
        h = field.one
        for ai in range(1, 11):
            a = field.from_index(ai)
            b = -(h**3 + a * h)
            if b.is_zero or (3 * h * h + a).is_zero:
                continue
            if -27 * b * b / (4 * a**3) == field.one:
                continue
            rec = verify_bs1(2, 11, 1, a, b, h)
            assert rec.passed
            return
        raise AssertionError("no admissible a found")

    def test_b_zero_gate(self):
        with pytest.raises(PreconditionFailed) as e:
            verify_bs1(1, 7, 1, -3, 0, 1)
        assert e.value.gate == "b_is_zero"

    def test_branch2_character_needs_cube_root_twist(self):
        # dropping the phi(3h) factor flips the verdict exactly when
        # phi(3h) = -1 and the series value is nonzero
        from padichyper.hyper import profile_for
        from padichyper.verify import PARAMS_HALF_QUARTER, PARAMS_QUARTER_THIRD
        from padichyper.fields import uctx_for
        from padichyper.padic import default_precision

        p = 7
        field = build_field(p, 1)
        K = default_precision(p, 1)
        uctx = uctx_for(field, K)
        flipped = 0
        for hi in range(1, p):
            h = field.from_index(hi)
            if phi(3 * h) != -1:
                continue
            for ai in range(1, p):
                a = field.from_index(ai)
                b = -(h**3 + a * h)
                if b.is_zero or (3 * h * h + a).is_zero:
                    continue
                t1 = -27 * b * b / (4 * a**3)
                if t1 == field.one:
                    continue
                w = 3 * h * h + a
                lhs = profile_for(PARAMS_QUARTER_THIRD, field, uctx).eval_qg(t1)
                variant = (
                    profile_for(PARAMS_HALF_QUARTER, field, uctx)
                    .eval_qg(4 * w / (9 * h * h))
                    .scale_int(phi(-b * w))
                )
                if lhs.exact_zero or variant.exact_zero:
                    continue
                assert not lhs.agrees_to(variant, K)
                assert verify_bs1(2, p, 1, a, b, h).passed
                flipped += 1
        assert flipped > 0


class TestMC:
    def test_p7_curve_1_1(self):
        rec = verify_mc(7, 1, 1, 1)
        assert rec.passed
        assert rec.lhs == "3"

    def test_q25_sample(self):
        field = build_field(5, 2)
        rec = verify_mc(5, 2, field.from_index(7), field.from_index(9))
        assert rec.passed

    def test_gate_j_zero(self):
        with pytest.raises(PreconditionFailed) as e:
            verify_mc(7, 1, 0, 1)
        assert e.value.gate == "j_is_zero"


class TestHessianCheck:
    def test_p7_all(self):
        field = build_field(7, 1)
        for a in range(2, 7):
            if (field.element(a) ** 3 - 1).is_zero:
                continue
            rec = verify_hessian(7, 1, a)
            assert rec.passed

    def test_p5_requires_override(self):
        with pytest.raises(PreconditionFailed) as e:
            verify_hessian(5, 1, 2)
        assert e.value.gate == "p_too_small"
        assert verify_hessian(5, 1, 2, allow_small_p=True).passed

    def test_p11_a2(self):
        rec = verify_hessian(11, 1, 2)
        assert rec.passed and rec.lhs == "17"

    def test_gate_a_cubed(self):
        with pytest.raises(PreconditionFailed) as e:
            verify_hessian(11, 1, 1)
        assert e.value.gate == "a_cubed_is_one"


class TestCubicExtension:
    def test_checks_hold_at_q_125(self):
        # r = 3 exercises the general Frobenius-twist product paths
        field = build_field(5, 3)
        assert verify_mc(5, 3, field.from_index(7), field.from_index(13)).passed
        hits = 0
        for di in range(2, 40):
            try:
                rec = verify_mt1(5, 3, field.from_index(di))
            except PreconditionFailed:
                continue
            assert rec.passed
            hits += 1
        assert hits > 0


class TestLemmaRecords:
    def test_lemma31(self):
        rec = verify_lemma31_record(7, 1, 2, 3)
        assert rec.passed and rec.theorem == "LEMMA31"

    def test_eq29(self):
        rec = verify_eq29_record(5, 2, 7)
        assert rec.passed

    def test_lemma5(self):
        rec = verify_lemma5_record(11, 2, 37, 1)
        assert rec.passed

    def test_gauss_records(self):
        assert verify_gauss_gk_record(7, 1, 1).passed
        assert verify_gauss_theta_record(5, 2, 7).passed
        assert verify_gauss_dh_record(7, 1, 2, 1).passed
        assert verify_ortho_record(7, 1).passed


class TestSuite:
    def test_small_run_all_pass(self):
        spec = RangeSpec(
            theorems=("mt1", "lemma5", "ortho"), pmin=7, pmax=13, r_values=(1,)
        )
        report = run_suite(spec)
        assert report.summary["failed"] == 0
        assert report.summary["total"] == report.summary["passed"] == len(report.records)
        assert report.all_passed

    def test_empty_prime_range_rejected(self):
        with pytest.raises(ValueError):
            run_suite(RangeSpec(theorems=("mt1",), pmin=24, pmax=28))

    def test_unknown_theorem_rejected(self):
        with pytest.raises(ValueError):
            run_suite(RangeSpec(theorems=("nope",)))

    def test_json_schema(self):
        spec = RangeSpec(theorems=("lemma5",), pmin=7, pmax=7, r_values=(1,))
        doc = json.loads(run_suite(spec).to_json())
        assert set(doc) == {"suite", "started_at", "config", "records", "summary"}
        assert set(doc["summary"]) == {"total", "passed", "failed", "skipped"}
        rec = doc["records"][0]
        assert list(rec) == [
            "theorem",
            "p",
            "r",
            "K",
            "params",
            "lhs",
            "rhs",
            "pass",
            "elapsed_ms",
        ]

    def test_csv_header_and_rows(self):
        spec = RangeSpec(theorems=("lemma5",), pmin=7, pmax=7, r_values=(1,))
        report = run_suite(spec)
        lines = report.to_csv().strip().splitlines()
        assert lines[0] == "theorem,p,r,K,params,lhs,rhs,pass,elapsed_ms"
        assert len(lines) == len(report.records) + 1

    def test_sampling_is_deterministic(self):
        spec = RangeSpec(theorems=("eq29",), pmin=13, pmax=13, r_values=(1,), sample=4, seed=9)
        r1 = run_suite(spec)
        r2 = run_suite(spec)
        assert [rec.params for rec in r1.records] == [rec.params for rec in r2.records]
        assert len(r1.records) == 4

    def test_hessian_skips_small_p_without_override(self):
        spec = RangeSpec(theorems=("hessian",), pmin=5, pmax=5, r_values=(1,))
        report = run_suite(spec)
        assert report.summary["total"] == 0
        assert report.summary["skipped"] == 4  # every unit a in F_5

    def test_cor2_counts_both_branches(self):
        spec = RangeSpec(theorems=("cor2",), pmin=11, pmax=17, r_values=(1,))
        report = run_suite(spec)
        names = {rec.theorem for rec in report.records}
        assert names == {"COR2_1", "COR2_2"}
        assert report.all_passed
