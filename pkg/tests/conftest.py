import random

import pytest
from hypothesis import settings

from hyperbridge import Hypermatrix222, Hypermatrix2222

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")

_ACCEPTANCE: dict[str, tuple[bool, str]] = {}


def record_criterion(name: str, ok: bool, detail: str = "") -> None:
    _ACCEPTANCE[name] = (ok, detail)


@pytest.fixture
def rng():
    return random.Random(20240601)


def random_h222(rng, lo=-3, hi=3):
    return Hypermatrix222([rng.randint(lo, hi) for _ in range(8)])


def random_h2222(rng, lo=-3, hi=3):
    return Hypermatrix2222([rng.randint(lo, hi) for _ in range(16)])


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for name in sorted(_ACCEPTANCE):
        ok, detail = _ACCEPTANCE[name]
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  {name}  {detail}".rstrip())
