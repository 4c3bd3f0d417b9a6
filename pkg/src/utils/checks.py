from dataclasses import dataclass

PASS = 'pass'
FAIL = 'FAIL'
INFO = 'info'
SKIPPED = 'skipped'

all_check_statuses_list = [PASS, FAIL, INFO, SKIPPED]


@dataclass(frozen=True)
class Violation:
    """One broken structural invariant, e.g. associativity at a basis triple."""
    invariant: str
    location: str
    detail: str = ''

    def __str__(self):
        text = f'{self.invariant} at {self.location}'
        return f'{text}: {self.detail}' if self.detail else text


@dataclass(frozen=True)
class Check:
    """One row of a report."""
    section: str
    subject: str
    value: str
    status: str

    @property
    def failed(self):
        return self.status == FAIL


def check(section, subject, holds, value=''):
    return Check(section, subject, str(value), PASS if holds else FAIL)


def info(section, subject, value):
    return Check(section, subject, str(value), INFO)


def skipped(section, subject, reason):
    return Check(section, subject, str(reason), SKIPPED)


def violations_to_checks(section, subject, violations):
    if not violations:
        return [Check(section, subject, 'ok', PASS)]
    return [Check(section, f'{subject}: {violation.invariant}', f'{violation.location} {violation.detail}'.strip(), FAIL)
            for violation in violations]
