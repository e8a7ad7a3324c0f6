"""Acceptance suite.

One test per acceptance criterion; every check is exact (polynomial or
rational equality), run at its pinned desk-scale bound, and reports a
single pass line on success.  The heavy lifting lives in pasep.verify so
the CLI `verify` subcommand exercises the identical checks.
"""

from pasep import verify


def _report(num: int, rep_list, desc: str) -> None:
    failures = [f for rep in rep_list for f in rep.failures]
    assert not failures, failures
    checks = sum(len(rep.checks) for rep in rep_list)
    print(f"ACCEPTANCE {num:02d} PASS ({checks} checks): {desc}")


def test_criterion_01_golden_values():
    _report(1, [verify.golden_values()], "printed Z0..Z3 match by every method, exact")


def test_criterion_02_cross_method_equality():
    _report(
        2,
        [verify.cross_methods()],
        "all nine methods agree for N<=7; closed/matrix/hatted to N<=10",
    )


def test_criterion_03_symmetry():
    _report(3, [verify.symmetry_suite()], "y-reflection fixes Z(N) for N<=8")


def test_criterion_04_specializations():
    _report(
        4,
        [verify.specialization_suite()],
        "product formula N<=10; a=b=1 triple sum N<=8; R at y=1 collapse N<=8",
    )


def test_criterion_05_bijection_suites():
    _report(
        5,
        [verify.bijection_suite()],
        "FZ/FV round trips, weight laws, and step-type lemmas on S_n, n<=7",
    )


def test_criterion_06_decomposition():
    _report(
        6,
        [verify.decomposition_suite()],
        "pair combine/decompose round trip N<=4; cardinality identity N<=6",
    )


def test_criterion_07_path_sum_oracles():
    _report(7, [verify.path_sum_suite()], "R and B path sums match their formulas, N<=6")


def test_criterion_08_moments():
    _report(
        8,
        [verify.moment_suite()],
        "ballot moments vs J-fraction and binomial transform N<=8; "
        "20 rational points per N<=6",
    )


def test_criterion_09_q_tangent_secant():
    _report(
        9,
        [verify.tangent_secant_suite()],
        "closed formulas = continued fractions = alternating sums, n<=10",
    )


def test_criterion_10_q_stirling():
    _report(
        10,
        [verify.stirling_suite()],
        "recurrence = carl1 = carl2 for n<=12, coefficient extraction n<=9",
    )


def test_criterion_11_q_eulerian():
    _report(
        11,
        [verify.eulerian_suite()],
        "q=1 Eulerian, q=-1 binomial, q=0 Narayana rows for N<=8",
    )


def test_criterion_12_fine():
    _report(
        12,
        [verify.fine_suite()],
        "Fine specialization N<=10, printed F1..F6, palindromicity n<=12, "
        "Dyck pairs at q=0 N<=7",
    )


def test_criterion_13_identities():
    _report(
        13,
        [verify.identity_suite()],
        "prefix-count identity N<=10, M recurrence k<=10, q-binomial lemmas "
        "m<=8, hatted closed form k<=10",
    )
