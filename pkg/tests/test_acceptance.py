"""Acceptance gate: every criterion at its pinned tolerance, full scale.

Each criterion test pulls the relevant property checks out of the named
verification suites (the same code `jbdet verify` runs), asserts them at the
tolerances fixed in the suites module, and prints one PASS/FAIL line.
"""

import pytest

from jbdet.suites import SUITES, run_suite

SEED = 0

_cache: dict[str, object] = {}


def suite(name):
    if name not in _cache:
        _cache[name] = run_suite(name, seed=SEED)
    return _cache[name]


def _assert_checks(criterion: str, report, names=None, coverage=False):
    checks = [c for c in report.checks if names is None or c.name in names]
    assert checks, f"no checks matched {names}"
    if names is not None:
        missing = set(names) - {c.name for c in checks}
        assert not missing, f"missing checks: {missing}"
    failed = [c for c in checks if not c.passed]
    if coverage:
        assert report.coverage is not None
        uncovered = [k for k, v in report.coverage.items() if v == 0]
    else:
        uncovered = []
    ok = not failed and not uncovered
    print(f"[{criterion}] {'PASS' if ok else 'FAIL'}: "
          + "; ".join(f"{c.name}={c.worst:.2e}" for c in checks)
          + (f"; coverage={report.coverage}" if coverage else ""))
    for c in failed:
        pytest.fail(f"{criterion}: {c.line()}")
    if uncovered:
        pytest.fail(f"{criterion}: unhit proof branches {uncovered}")


def test_criterion_01_cayley_dickson_laws():
    _assert_checks(
        "criterion 1: associativity and alternativity",
        suite("aut-octonion"),
        ["associativity-low-levels", "alternativity-octonions"],
    )


def test_criterion_02_multiplication_scheme():
    _assert_checks(
        "criterion 2: octonion multiplication scheme",
        suite("aut-octonion"),
        ["multiplication-table-scheme", "permutation-automorphisms"],
    )


def test_criterion_03_hat_star_isomorphism():
    _assert_checks(
        "criterion 3: hat *-isomorphism",
        suite("t-determinant"),
        ["hat-star-isomorphism"],
    )


def test_criterion_04_determinant_theorem():
    names = []
    for n in range(1, 5):
        names += [f"squared-identity-n{n}", f"homogeneity-n{n}",
                  f"char-poly-coefficients-n{n}", f"even-multiplicity-n{n}",
                  f"half-product-sign-n{n}"]
    names.append("pencil-polynomiality")
    _assert_checks("criterion 4: determinant theorem, orders 1-4",
                   suite("t-determinant"), names)


def test_criterion_05_sarrus_closed_form():
    _assert_checks(
        "criterion 5: closed form and continuity route",
        suite("t-determinant"),
        ["sarrus-closed-form", "interpolation-route-hit"],
    )


def test_criterion_06_relative_determinant():
    _assert_checks(
        "criterion 6: relative determinant product rule",
        suite("t-determinant"),
        ["relative-determinant-product", "square-root-branch-independence"],
    )


def test_criterion_07_minimal_projections():
    _assert_checks("criterion 7: minimal projection classification",
                   suite("t-minproj"))


def test_criterion_08_automorphism_suites():
    _assert_checks(
        "criterion 8: automorphism generator families",
        suite("aut-c6"),
        ["exchange-vs-shift-oracle", "lifted-jordan-automorphisms",
         "six-step-composition", "shift-triple-automorphism"],
    )


def test_criterion_09_product_theorem():
    _assert_checks("criterion 9: determinant product theorem",
                   suite("t-product"))


def test_criterion_10_simultaneous_reduction():
    _assert_checks("criterion 10: simultaneous reduction",
                   suite("t-simbiq"), coverage=True)


def test_criterion_11_general_determinant():
    _assert_checks("criterion 11: invertibility and cubic",
                   suite("t-dt-c6"))


def test_remaining_suite_checks_all_pass():
    # everything the named suites verify beyond the numbered criteria
    for name in SUITES:
        report = suite(name)
        failed = [c.line() for c in report.checks if not c.passed]
        assert not failed, f"{name}: {failed}"
        print(f"[suite {name}] PASS ({len(report.checks)} checks)")
