"""Acceptance gate: one test per numbered check.

Each test prints the check's one-line verdict so a verbose run shows the
full scoreboard; the assertion carries the first failing instance.
"""

from schreier import acceptance


def _run(number: int):
    res = acceptance.run_one(number)
    print(acceptance.format_line(res))
    assert res.passed, f"{res.number} ({res.title}): {res.detail}"


def test_descent_closed_forms():
    _run(1)


def test_section_law_wide_window():
    _run(2)


def test_thin_and_trichotomy():
    _run(3)


def test_finite_levels_are_k_subsets():
    _run(4)


def test_canonical_decomposition_unique():
    _run(5)


def test_rank_oracles_agree():
    _run(6)


def test_homogeneous_search_succeeds():
    _run(7)


def test_boundary_dichotomies():
    _run(8)


def test_mixed_family_regression():
    _run(9)


def test_transfer_containments():
    _run(10)


def test_certificate_mutations_rejected():
    _run(11)
