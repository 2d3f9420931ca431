"""Tests for the check registry, the run engine, and the CLI wrapper."""

import json

import pytest

from surface_lab import checks as checks_mod
from surface_lab.checks import (
    CHECKS,
    DEFAULT_TAUS,
    CheckResult,
    RunConfig,
    UnknownCheck,
    canonical_names,
    exit_code,
    resolve_names,
    run,
)
from surface_lab.cli import format_tau, main, parse_tau, render_json, render_text

ALGEBRAIC_SUBSET = (
    "homology_h1",
    "commutator_table",
    "ks2_7",
    "picard_config",
    "character_decomposition",
)


class TestRegistry:
    def test_twenty_two_checks(self):
        assert len(CHECKS) == 22

    def test_canonical_names_sorted(self):
        names = canonical_names()
        assert names == sorted(names)
        assert "homology_h1" in names and "legendre_identities" in names

    def test_resolve_all(self):
        assert resolve_names(("all",)) == canonical_names()

    def test_resolve_subset_sorted_unique(self):
        assert resolve_names(("ks2_7", "homology_h1", "ks2_7")) == [
            "homology_h1",
            "ks2_7",
        ]

    def test_resolve_unknown(self):
        with pytest.raises(UnknownCheck):
            resolve_names(("definitely_not_a_check",))

    def test_anchor_strings_present(self):
        for name, (anchor, _) in CHECKS.items():
            assert anchor and isinstance(anchor, str), name


class TestRunConfig:
    def test_defaults(self):
        cfg = RunConfig()
        assert cfg.taus == DEFAULT_TAUS
        assert cfg.eps == 1e-9 and cfg.samples == 100 and cfg.seed == 0

    def test_validation(self):
        with pytest.raises(ValueError):
            RunConfig(eps=0.0)
        with pytest.raises(ValueError):
            RunConfig(checks=())
        with pytest.raises(ValueError):
            RunConfig(output_format="xml")


class TestRun:
    def test_full_suite_all_pass(self):
        results = run(RunConfig())
        assert len(results) == 22
        assert [r.name for r in results] == canonical_names()
        assert all(r.status == "pass" for r in results)
        assert exit_code(results) == 0

    def test_algebraic_checks_ignore_numeric_knobs(self):
        base = run(RunConfig(checks=ALGEBRAIC_SUBSET))
        tweaked = run(
            RunConfig(checks=ALGEBRAIC_SUBSET, taus=(), eps=0.5, samples=3, seed=99)
        )
        assert [(r.name, r.status, r.actual) for r in base] == [
            (r.name, r.status, r.actual) for r in tweaked
        ]

    def test_numeric_checks_skip_without_moduli(self):
        results = run(
            RunConfig(
                checks=("legendre_identities", "pencil_two_invariants"), taus=()
            )
        )
        assert all(r.status == "skipped" for r in results)
        assert exit_code(results) == 0

    def test_pencil_needs_three_moduli(self):
        results = run(RunConfig(checks=("pencil_two_invariants",), taus=(1j, 2j)))
        assert results[0].status == "skipped"

    def test_failure_reported_with_both_sides(self, monkeypatch):
        monkeypatch.setitem(
            checks_mod.CHECKS, "ks2_7", ("claim", lambda cfg: (False, "7", "6"))
        )
        results = run(RunConfig(checks=("ks2_7",)))
        assert results[0].status == "fail"
        assert results[0].expected == "7" and results[0].actual == "6"
        assert exit_code(results) == 1

    def test_timings_flag_controls_elapsed(self):
        untimed = run(RunConfig(checks=("ks2_7",)))
        timed = run(RunConfig(checks=("ks2_7",), timings=True))
        assert untimed[0].elapsed_ms is None
        assert isinstance(timed[0].elapsed_ms, float)

    def test_loose_tolerance_single_modulus(self):
        results = run(
            RunConfig(checks=("legendre_identities",), taus=(1j,), eps=1e-3, samples=20)
        )
        assert results[0].status == "pass"
        assert "residual" in results[0].actual


class TestTauParsing:
    def test_accepts_standard_forms(self):
        assert parse_tau("0+1i") == 1j
        assert parse_tau("2i") == 2j
        assert parse_tau("0.5+1.5i") == 0.5 + 1.5j
        assert parse_tau("-0.25+0.75i") == -0.25 + 0.75j

    def test_rejects_garbage_and_lower_half_plane(self):
        for bad in ("bogus", "1+2", "0-1i", "3+0i"):
            with pytest.raises(ValueError):
                parse_tau(bad)

    def test_format_round_trips(self):
        for tau in DEFAULT_TAUS:
            assert parse_tau(format_tau(tau)) == tau


class TestRenderers:
    def test_text_fail_line_has_both_sides(self):
        r = CheckResult("ks2_7", "fail", "7", "6", "claim")
        text = render_text([r])
        assert "expected 7" in text and "got 6" in text
        assert "1 failed" in text

    def test_text_summary_counts_skips(self):
        rs = [
            CheckResult("a", "pass", "x", "x", "c"),
            CheckResult("b", "skipped", "x", "no modulus", "c"),
        ]
        assert "1 passed, 0 failed, 1 skipped" in render_text(rs)

    def test_json_document_shape(self):
        cfg = RunConfig(checks=("ks2_7", "homology_h1"))
        results = run(cfg)
        doc = json.loads(render_json(cfg, results))
        assert doc["schema_version"] == "1"
        assert doc["config"]["eps"] == 1e-9
        assert len(doc["config"]["taus"]) == 4
        assert [r["name"] for r in doc["results"]] == ["homology_h1", "ks2_7"]
        for record in doc["results"]:
            assert set(record) == {
                "name",
                "status",
                "expected",
                "actual",
                "paper_anchor",
                "elapsed_ms",
            }
            assert record["elapsed_ms"] is None

    def test_json_byte_identical_across_runs(self):
        cfg = RunConfig(checks=("legendre_identities",), output_format="json")
        first = render_json(cfg, run(cfg))
        second = render_json(cfg, run(cfg))
        assert first == second


class TestMain:
    def test_subset_pass(self, capsys):
        assert main(["verify", "homology_h1", "ks2_7"]) == 0
        out = capsys.readouterr().out
        assert "2 checks: 2 passed" in out

    def test_list_prints_names(self, capsys):
        assert main(["verify", "--list"]) == 0
        lines = capsys.readouterr().out.strip().splitlines()
        assert lines == canonical_names()

    def test_unknown_check_is_usage_error(self, capsys):
        assert main(["verify", "nope"]) == 2
        assert "unknown check" in capsys.readouterr().err

    def test_bad_tau_is_usage_error(self, capsys):
        assert main(["verify", "legendre_identities", "--tau", "wat"]) == 2
        assert "modulus" in capsys.readouterr().err

    def test_bad_eps_is_usage_error(self, capsys):
        assert main(["verify", "ks2_7", "--eps", "-1"]) == 2
        assert "eps" in capsys.readouterr().err

    def test_no_default_taus_skips(self, capsys):
        assert main(["verify", "legendre_identities", "--no-default-taus"]) == 0
        assert "skipped" in capsys.readouterr().out

    def test_explicit_tau_loose_eps(self, capsys):
        code = main(
            ["verify", "legendre_identities", "--eps", "1e-3", "--tau", "0+1i"]
        )
        assert code == 0
        assert "pass" in capsys.readouterr().out

    def test_failure_exit_code(self, monkeypatch, capsys):
        monkeypatch.setitem(
            checks_mod.CHECKS, "ks2_7", ("claim", lambda cfg: (False, "7", "6"))
        )
        assert main(["verify", "ks2_7"]) == 1

    def test_json_output_parses(self, capsys):
        assert main(["verify", "ks2_7", "--format", "json"]) == 0
        doc = json.loads(capsys.readouterr().out)
        assert doc["results"][0]["status"] == "pass"

    def test_missing_subcommand_exits_2(self):
        with pytest.raises(SystemExit) as info:
            main([])
        assert info.value.code == 2
