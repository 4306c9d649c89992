"""
Report models for the verification harness
"""

from pydantic import BaseModel, Field

SKIPPED_RANDOM = "skipped-random, exhaustive-only"


class TrialFailure(BaseModel):
    """One failing case, with what is needed to reproduce it"""

    seed: int | None = Field(
        default=None, description="Per-trial seed; None for exhaustive cases"
    )
    inputs: str
    message: str


class SuiteResult(BaseModel):
    """Outcome of one verification suite"""

    name: str
    exhaustive_cases: int = 0
    trials: int = 0
    failures: list[TrialFailure] = Field(default_factory=list)
    wall_time: float = 0.0

    @property
    def passed(self) -> bool:
        return not self.failures

    @property
    def status(self) -> str:
        if self.failures:
            return "failed"
        return "passed" if self.trials else SKIPPED_RANDOM

    def add_failure(self, inputs: str, message: str, seed: int | None = None) -> None:
        self.failures.append(TrialFailure(seed=seed, inputs=inputs, message=message))


class VerifyReport(BaseModel):
    """All suite results of one harness run"""

    trials: int
    seed: int
    suites: list[SuiteResult] = Field(default_factory=list)
    wall_time: float = 0.0

    @property
    def passed(self) -> bool:
        return all(suite.passed for suite in self.suites)

    @property
    def failure_count(self) -> int:
        return sum(len(suite.failures) for suite in self.suites)
