from dataclasses import asdict, dataclass, field

from django.db import models


class CheckStatus(models.TextChoices):
    PASS = 'pass', 'Pass'
    VACUOUS = 'vacuous', 'Vacuous pass'
    SKIPPED = 'skipped', 'Hypotheses not met'
    FAIL = 'fail', 'Fail'


@dataclass(frozen=True)
class CheckResult:
    lemma: str
    status: str
    slack: float = None
    k: int = None
    detail: dict = field(default_factory=dict)

    @property
    def failed(self):
        return self.status == CheckStatus.FAIL


@dataclass
class SweepSummary:
    checked: int = 0
    passed: int = 0
    vacuous: int = 0
    skipped: int = 0
    failed: int = 0
    worst_slack: float = None
    by_lemma: dict = field(default_factory=dict)
    failures: list = field(default_factory=list)

    def add(self, result):
        counts = self.by_lemma.setdefault(result.lemma, {status.value: 0 for status in CheckStatus})
        counts[result.status] += 1
        if result.status == CheckStatus.SKIPPED:
            self.skipped += 1
            return
        self.checked += 1
        if result.status == CheckStatus.PASS:
            self.passed += 1
        elif result.status == CheckStatus.VACUOUS:
            self.vacuous += 1
        else:
            self.failed += 1
            self.failures.append(asdict(result))
        if result.slack is not None and result.status != CheckStatus.VACUOUS:
            if self.worst_slack is None or result.slack < self.worst_slack:
                self.worst_slack = result.slack

    def as_dict(self):
        return asdict(self)
