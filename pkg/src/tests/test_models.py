"""
Test cases for report models
"""

from src.htgroups.models import SKIPPED_RANDOM, SuiteResult, TrialFailure, VerifyReport


class TestSuiteResult:
    """Test cases for SuiteResult"""

    def test_status(self):
        """Test status for skipped, passing and failing suites"""
        result = SuiteResult(name="higman")
        assert result.status == SKIPPED_RANDOM
        result.trials = 2
        assert result.status == "passed"
        result.add_failure("g=G2[->-]", "broken", seed=9)
        assert result.status == "failed"
        assert not result.passed
        assert result.failures == [TrialFailure(seed=9, inputs="g=G2[->-]", message="broken")]

    def test_exhaustive_failure_has_no_seed(self):
        """Test failures outside random trials"""
        result = SuiteResult(name="higman", trials=1)
        result.add_failure("K=4 k=3", "bad code")
        assert result.failures[0].seed is None


class TestVerifyReport:
    """Test cases for VerifyReport"""

    def test_failure_count(self):
        """Test failures are summed over suites"""
        bad = SuiteResult(name="a", trials=1)
        bad.add_failure("x", "y", seed=1)
        bad.add_failure("x", "z", seed=2)
        report = VerifyReport(trials=1, seed=0, suites=[bad, SuiteResult(name="b")])
        assert report.failure_count == 2
        assert not report.passed

    def test_empty_report_passes(self):
        """Test a report without suites"""
        assert VerifyReport(trials=0, seed=0).passed
