"""The property-check harness and its deterministic sampler."""

import pytest

from conftest import TEST_ALGEBRA_MAKERS, one_dim_pre, so3_post
from rblie.enveloping import EnvContext
from rblie.free_rb import FreeRBContext
from rblie.pcls import LSContext
from rblie.rng import XorShift64
from rblie.terms import Alphabet
from rblie.verify import (
    PROPERTIES,
    check_enum_oracles,
    run_property,
    sample_basis,
    witt_count,
)


class TestXorShift:
    def test_update_rule(self):
        # one hand-computed step of the 13/7/17 xorshift
        rng = XorShift64(1)
        x = 1
        x ^= (x << 13) & ((1 << 64) - 1)
        x ^= x >> 7
        x ^= (x << 17) & ((1 << 64) - 1)
        assert rng.next64() == x

    def test_zero_seed_is_replaced(self):
        rng = XorShift64(0)
        assert rng.state == 0x9E3779B97F4A7C15

    def test_determinism(self):
        a = XorShift64(42)
        b = XorShift64(42)
        assert [a.next64() for _ in range(20)] == [b.next64() for _ in range(20)]

    def test_seed_masked_to_64_bits(self):
        assert XorShift64(1 << 64).state == 0x9E3779B97F4A7C15
        assert XorShift64((1 << 64) + 5).state == 5

    def test_randrange_bounds(self):
        rng = XorShift64(3)
        draws = [rng.randrange(7) for _ in range(200)]
        assert set(draws) <= set(range(7))
        assert len(set(draws)) > 1
        with pytest.raises(ValueError):
            rng.randrange(0)

    def test_choice_empty(self):
        with pytest.raises(ValueError):
            XorShift64(1).choice([])


class TestSampler:
    def test_replay(self, ab):
        ctx = FreeRBContext(ab)
        one = sample_basis(ctx, 3, 1, seed=9, count=50, arity=3)
        two = sample_basis(ctx, 3, 1, seed=9, count=50, arity=3)
        assert one == two
        assert len(one) == 50 and all(len(t) == 3 for t in one)

    def test_different_seeds_differ(self, ab):
        ctx = FreeRBContext(ab)
        one = sample_basis(ctx, 3, 1, seed=1, count=50, arity=2)
        two = sample_basis(ctx, 3, 1, seed=2, count=50, arity=2)
        assert one != two

    def test_empty_pool_is_an_error(self):
        ctx = EnvContext(so3_post())
        with pytest.raises(ValueError):
            # weight 1 words of positive operator degree need deg >= 1;
            # a zero-degree box holds nothing
            sample_basis(ctx, 0, 0, seed=1, count=1, arity=2)


class TestWittCount:
    @pytest.mark.parametrize(
        "k,n,want",
        [(2, 1, 2), (2, 2, 1), (2, 3, 2), (2, 4, 3), (2, 5, 6), (2, 6, 9),
         (3, 1, 3), (3, 2, 3), (3, 3, 8), (3, 4, 18), (3, 5, 48), (3, 6, 116)],
    )
    def test_table(self, k, n, want):
        assert witt_count(k, n) == want


class TestRunProperty:
    def test_unknown_property(self, ab):
        with pytest.raises(ValueError):
            run_property("curvature", FreeRBContext(ab))

    def test_operator_properties_reject_plain_contexts(self, ab):
        for prop in ("rb", "derived-pre", "reduce-hom"):
            with pytest.raises(ValueError):
                run_property(prop, LSContext(ab))

    def test_weight_gating(self, ab):
        with pytest.raises(ValueError):
            run_property("derived-post", FreeRBContext(ab, weight=0))
        with pytest.raises(ValueError):
            run_property("derived-pre", FreeRBContext(ab, weight=1))

    def test_env_only_properties(self, ab):
        for prop in ("pbw", "reduce-hom"):
            with pytest.raises(ValueError):
                run_property(prop, FreeRBContext(ab))

    def test_enum_oracles_pass(self):
        report = check_enum_oracles()
        assert report.passed
        assert report.checked == 8

    @pytest.mark.parametrize("prop", ["anticomm", "jacobi", "rb", "assump"])
    def test_free_contexts_pass(self, ab, prop):
        for weight in (0, 1):
            ctx = FreeRBContext(ab, weight=weight)
            report = run_property(prop, ctx, seed=1, count=60, max_deg=3, max_rdeg=1)
            assert report.passed, report.line()

    def test_derived_laws_pass(self, ab):
        r0 = run_property("derived-pre", FreeRBContext(ab, weight=0),
                          seed=1, count=40, max_deg=2, max_rdeg=1)
        r1 = run_property("derived-post", FreeRBContext(ab, weight=1),
                          seed=1, count=40, max_deg=2, max_rdeg=1)
        assert r0.passed and r1.passed

    @pytest.mark.parametrize("name", sorted(TEST_ALGEBRA_MAKERS))
    def test_env_contexts_pass_everything(self, name):
        ctx = EnvContext(TEST_ALGEBRA_MAKERS[name]())
        derived = "derived-post" if ctx.weight else "derived-pre"
        for prop in ("anticomm", "jacobi", "rb", derived, "assump", "pbw", "reduce-hom"):
            report = run_property(prop, ctx, seed=1, count=60, max_deg=3, max_rdeg=2)
            assert report.passed, "%s: %s" % (prop, report.line())

    def test_corrupted_rewrite_fails_jacobi_with_witness(self):
        ctx = EnvContext(one_dim_pre())
        ctx.corrupt_sign = True
        report = run_property("jacobi", ctx, seed=1, count=40, max_deg=3, max_rdeg=2)
        assert not report.passed
        line = report.line()
        assert line.startswith("FAIL jacobi")
        assert "witness=(" in line

    def test_report_line_shape(self, ab):
        report = run_property("anticomm", FreeRBContext(ab), count=25, max_deg=2, max_rdeg=1)
        assert report.line() == "PASS anticomm checked=25"
