import random
from collections import defaultdict

import pytest

DEFAULT_SEED = 20261015


def pytest_addoption(parser):
    parser.addoption("--seed", type=int, default=DEFAULT_SEED, help="seed for randomized tests")


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): acceptance criterion covered by a test")
    config._criteria = defaultdict(list)
    config._criterion_titles = {}


@pytest.fixture
def seed(request):
    return request.config.getoption("--seed")


@pytest.fixture
def rng(seed):
    return random.Random(seed)


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marks = list(item.iter_markers("criterion"))
    if not marks:
        return
    if report.when == "call" or (report.when == "setup" and not report.passed):
        for m in marks:
            number, title = m.args
            item.config._criterion_titles[number] = title
            item.config._criteria[number].append((item.name, report.passed))


def pytest_terminal_summary(terminalreporter, config):
    if not config._criteria:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(config._criteria):
        results = config._criteria[number]
        ok = all(passed for _, passed in results)
        failed = [name for name, passed in results if not passed]
        line = f"criterion {number}: {'PASS' if ok else 'FAIL'}  {config._criterion_titles[number]}"
        if failed:
            line += f"  (failing: {', '.join(failed)})"
        terminalreporter.write_line(line)
