"""Collects ``acceptance(n)`` outcomes and prints one verdict line per criterion."""

from collections import defaultdict

CRITERIA = {
    1: "worked examples: eleven measures on three tables",
    2: "increments from a and d: exact values and Yes/Yes/Yes/No",
    3: "prior dependence: b* predictions agree with Bayes",
    4: "ravens: c*, converse c*, increments and their ratio",
    5: "property audits on 10,000 seeded tables in under a minute",
    6: "algebraic identities to 1e-10",
    7: "semantic information: grid optimum and log-likelihood identity",
    8: "classifier: fixed point, monotone trace, threshold-sweep optimum",
}

_outcomes = defaultdict(list)


def pytest_collection_modifyitems(items):
    for item in items:
        mark = item.get_closest_marker("acceptance")
        if mark is not None:
            item.user_properties.append(("acceptance", mark.args[0]))


def pytest_runtest_logreport(report):
    number = dict(report.user_properties).get("acceptance")
    if number is None:
        return
    if report.when == "call" or report.failed or report.skipped:
        _outcomes[number].append((report.nodeid, report.outcome))


def pytest_terminal_summary(terminalreporter):
    if not _outcomes:
        return
    terminalreporter.section("acceptance criteria")
    for number, title in CRITERIA.items():
        results = _outcomes.get(number)
        if not results:
            terminalreporter.write_line(f"criterion {number}: NOT RUN  {title}")
            continue
        failed = [nodeid for nodeid, outcome in results if outcome != "passed"]
        verdict = "FAIL" if failed else "PASS"
        terminalreporter.write_line(
            f"criterion {number}: {verdict}  {title} ({len(results) - len(failed)}/{len(results)})"
        )
        for nodeid in failed:
            terminalreporter.write_line(f"    failed: {nodeid.split('::', 1)[-1]}")
