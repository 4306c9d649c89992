"""
Test cases for the verification harness
"""

import pytest

from src.htgroups import successor, verify
from src.htgroups.models import SKIPPED_RANDOM
from src.htgroups.verify import SUITES, render_report, run_suite, run_verify


class TestRunVerify:
    """Test cases for running suites"""

    def test_zero_trials(self):
        """Test trials=0 keeps only the exhaustive parts"""
        report = run_verify(trials=0, seed=42)
        assert [suite.name for suite in report.suites] == list(SUITES)
        assert report.passed
        for suite in report.suites:
            assert suite.status == SKIPPED_RANDOM
            assert suite.trials == 0
        text = render_report(report)
        assert text.startswith("verify trials=0 seed=42\n")
        assert text.endswith("result: passed\n")

    @pytest.mark.parametrize("name", list(SUITES))
    def test_each_suite_passes(self, name):
        """Test every suite passes a few random trials"""
        result = run_suite(name, trials=3, seed=7)
        assert result.failures == []
        assert result.status == "passed"
        assert result.trials >= 3

    def test_determinism(self):
        """Test the same (trials, seed) renders the same report"""
        names = ["successor-restriction", "group-axioms", "serialization"]
        first = render_report(run_verify(trials=4, seed=42, suites=names))
        second = render_report(run_verify(trials=4, seed=42, suites=names))
        assert first == second

    def test_parallel_report_matches_serial(self):
        """Test worker processes render the same report in suite order"""
        names = ["group-axioms", "higman", "serialization"]
        serial = render_report(run_verify(trials=3, seed=3, suites=names, workers=1))
        parallel = render_report(run_verify(trials=3, seed=3, suites=names, workers=2))
        assert parallel == serial

    def test_conjugation_words_reach_length_three(self):
        """Test the code-substitution check covers tails of length 3"""
        tails = verify.words_up_to(5, verify.CONJUGATION_TAIL_LENGTH)
        assert len(tails) == 1 + 5 + 25 + 125
        assert max(len(t) for t in tails) == 3
        assert tails[0] == ()

    def test_exhaustive_counts(self):
        """Test exhaustive coverage of small binary codes"""
        result = run_suite("successor-image", trials=0, seed=1)
        # maximal binary codes with 2..6 members: 1 + 2 + 5 + 14 + 42
        assert result.exhaustive_cases == 64

    def test_unknown_suite(self):
        """Test unknown suite names are rejected"""
        with pytest.raises(ValueError):
            run_verify(trials=1, seed=1, suites=["no-such-suite"])

    def test_small_binary_elements(self):
        """Test the exhaustive element list is canonical and duplicate-free"""
        small = verify.small_binary_elements(2)
        assert [g.pairs for g in small] == [
            (((), ()),),
            (((0,), (1,)), ((1,), (0,))),
        ]


class TestMutation:
    """Test cases showing the harness catches a broken successor formula"""

    def test_corrupted_formula_is_caught(self, monkeypatch):
        """Test a wrong closed form fails with its seed recorded"""

        def corrupted(query):
            value = successor.successor_of(query.member, query.letter)
            if value is not None and len(query.code) > 3:
                return value + (0,)
            return value

        monkeypatch.setattr(successor, "succ_formula", corrupted)
        report = run_verify(trials=5, seed=42, suites=["successor-formula"])
        assert not report.passed
        failures = report.suites[0].failures
        assert any(f.seed is not None for f in failures)
        text = render_report(report)
        assert "successor-formula: failed" in text
        assert "  seed=" in text
        assert text.endswith(f"result: failed ({report.failure_count} failures)\n")
