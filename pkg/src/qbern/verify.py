"""Verification sweeps: every library invariant as a stream of reports.

Each suite is a generator of VerificationReport objects with deterministic
ordering (plain nested loops over fixed parameter tuples; grid dimensions are
aggregated by taking the worst residual over the grid, with the grid recorded
in the report parameters).  The CLI streams these as JSON lines.
"""

import math
from fractions import Fraction
from functools import lru_cache

from . import bernstein, interp, qbernstein, qnum, special
from .errors import SingularityError
from .functions import BUILTIN_FUNCTIONS, CONVEX_BUILTINS
from .report import VerificationReport
from .series import SeriesTruncation

X_GRID_101 = tuple(i / 100 for i in range(101))
X_DECILES = tuple(i / 10 for i in range(1, 10))
Q_GRID = (0.3, 0.7, 0.99)


def _worst(pairs):
    """(lhs, rhs) pair with the largest |lhs - rhs| from an iterable."""
    worst = None
    worst_err = -1.0
    for lhs, rhs in pairs:
        err = abs(lhs - rhs)
        if err > worst_err:
            worst_err = err
            worst = (lhs, rhs)
    return worst


# ---------------------------------------------------------------------------
# classical: Bernstein basis/operator and the special sequences behind it
# ---------------------------------------------------------------------------

@lru_cache(maxsize=None)
def _bernoulli_number(n: int) -> Fraction:
    # B_n from sum_{j<=n} C(n+1,j) B_j = 0 (B_1 = -1/2 convention); this is
    # the independent cross-check for the generating-function route.
    if n == 0:
        return Fraction(1)
    acc = sum(math.comb(n + 1, j) * _bernoulli_number(j) for j in range(n))
    return Fraction(-acc, n + 1)


def _classical_bernoulli_poly(n: int, z: Fraction) -> Fraction:
    return sum(math.comb(n, j) * _bernoulli_number(j) * z ** (n - j) for j in range(n + 1))


def classical_suite():
    for n in range(1, 21):
        lhs, rhs = _worst(
            (sum(bernstein.basis(j, n, x) for j in range(n + 1)), 1.0)
            for x in X_GRID_101
        )
        yield VerificationReport.from_values(
            "basis_partition_of_unity", {"n": n, "x_grid": "0:1:0.01"}, lhs, rhs, 1e-13)

    for n in range(1, 21):
        lhs, rhs = _worst(
            (bernstein.basis(j, n, x), bernstein.basis(n - j, n, 1.0 - x))
            for j in range(n + 1) for x in X_GRID_101
        )
        yield VerificationReport.from_values(
            "basis_symmetry", {"n": n, "x_grid": "0:1:0.01"}, lhs, rhs, 1e-14)

    for n in range(1, 21):
        pairs = []
        for j in range(n + 1):
            pairs.append((bernstein.basis(j, n, 0.0), 1.0 if j == 0 else 0.0))
            pairs.append((bernstein.basis(j, n, 1.0), 1.0 if j == n else 0.0))
        lhs, rhs = _worst(pairs)
        yield VerificationReport.from_values(
            "basis_endpoint_values", {"n": n}, lhs, rhs, 0.0)

    for n in range(1, 21):
        lhs, rhs = _worst(
            (bernstein.basis_recursive(j, n, x), bernstein.basis(j, n, x))
            for j in range(n + 1) for x in X_GRID_101
        )
        yield VerificationReport.from_values(
            "basis_recursion_vs_closed_form", {"n": n, "x_grid": "0:1:0.01"}, lhs, rhs, 1e-12)

    h = 1e-6
    for n in range(1, 21):
        lhs, rhs = _worst(
            (bernstein.basis_derivative(j, n, x),
             (bernstein.basis(j, n, x + h) - bernstein.basis(j, n, x - h)) / (2 * h))
            for j in range(n + 1) for x in X_GRID_101
        )
        yield VerificationReport.from_values(
            "basis_derivative_vs_finite_difference",
            {"n": n, "x_grid": "0:1:0.01", "step": h}, lhs, rhs, 1e-6)

    a, b = 1.7, -0.4
    for n in range(1, 21):
        lhs, rhs = _worst(
            (bernstein.operator(lambda t: a * t + b, n, x), a * x + b)
            for x in X_GRID_101
        )
        yield VerificationReport.from_values(
            "operator_reproduces_affine", {"n": n, "a": a, "b": b}, lhs, rhs, 1e-12)

    err = {
        n: max(abs(bernstein.operator(math.cos, n, x) - math.cos(x)) for x in X_GRID_101)
        for n in (10, 100)
    }
    yield VerificationReport.from_values(
        "operator_error_shrinks_cos",
        {"n_coarse": 10, "n_fine": 100, "err_coarse": err[10], "err_fine": err[100]},
        max(0.0, err[100] - err[10]), 0.0, 0.0)

    for n in range(1, 31):
        pairs = []
        for x in X_DECILES:
            mean = bernstein.binomial_moment(n, x, 1)
            pmf_mean = sum(k * bernstein.binomial_pmf(k, n, x) for k in range(n + 1))
            pairs.append((mean, n * x))
            pairs.append((mean, pmf_mean))
        lhs, rhs = _worst(pairs)
        yield VerificationReport.from_values(
            "binomial_moment_mean", {"n": n, "x_grid": "deciles"}, lhs, rhs, 1e-10)

    for n in range(1, 31):
        pairs = []
        for x in X_DECILES:
            m2 = bernstein.binomial_moment(n, x, 2)
            pmf_m2 = sum(k * k * bernstein.binomial_pmf(k, n, x) for k in range(n + 1))
            pairs.append((m2 - (n * x) ** 2, n * x * (1.0 - x)))
            pairs.append((m2, pmf_m2))
        lhs, rhs = _worst(pairs)
        yield VerificationReport.from_values(
            "binomial_moment_variance", {"n": n, "x_grid": "deciles"}, lhs, rhs, 1e-10)

    for name in ("cos", "square"):
        f = BUILTIN_FUNCTIONS[name]
        lhs, rhs = _worst(
            (bernstein.operator_as_expectation(f, n, x), bernstein.operator(f, n, x))
            for n in range(1, 31) for x in X_DECILES
        )
        yield VerificationReport.from_values(
            "operator_equals_binomial_expectation",
            {"f": name, "n_max": 30, "x_grid": "deciles"}, lhs, rhs, 1e-14)

    for n in range(13):
        lhs, rhs = _worst(
            (float(special.stirling2(n, k)),
             float(special.series_coefficient(special.StirlingGF(k), n)))
            for k in range(n + 1)
        )
        yield VerificationReport.from_values(
            "stirling_recurrence_vs_series_coefficient", {"n": n}, lhs, rhs, 0.0)

    z_exact = (Fraction(0), Fraction(1, 2), Fraction(1, 3), Fraction(3, 4))
    for n in range(11):
        lhs, rhs = _worst(
            (float(special.bernoulli_higher(n, 1, z)), float(_classical_bernoulli_poly(n, z)))
            for z in z_exact
        )
        yield VerificationReport.from_values(
            "bernoulli_order_one_is_classical", {"n": n}, lhs, rhs, 0.0)

    for n in range(11):
        for v in range(5):
            lhs, rhs = _worst(
                (float(special.bernoulli_higher(n, v, z)),
                 float(special.series_coefficient(special.BernoulliGF(v, z), n)))
                for z in z_exact
            )
            yield VerificationReport.from_values(
                "bernoulli_recurrence_vs_series_coefficient", {"n": n, "v": v}, lhs, rhs, 0.0)

    for n in range(1, 11):
        # d/dz H_n = 2n H_{n-1}, compared through exact integer coefficients
        cn = special.hermite_coefficients(n)
        deriv = tuple(i * cn[i] for i in range(1, len(cn)))
        expect = tuple(2 * n * c for c in special.hermite_coefficients(n - 1))
        lhs, rhs = _worst(
            (float(a), float(b)) for a, b in zip(deriv, expect)
        )
        yield VerificationReport.from_values(
            "hermite_derivative_relation", {"n": n}, lhs, rhs, 0.0)

    for n in range(13):
        lhs, rhs = _worst(
            (float(special.hermite(n, z)),
             float(special.series_coefficient(special.HermiteGF(z), n)))
            for z in z_exact
        )
        yield VerificationReport.from_values(
            "hermite_recurrence_vs_series_coefficient", {"n": n}, lhs, rhs, 0.0)

    pairs = []
    for n in range(13):
        pairs.append((float(special.stirling2(n, n)), 1.0))
        if n >= 1:
            pairs.append((float(special.stirling2(n, 1)), 1.0))
        for k in range(n + 1, n + 4):
            pairs.append((float(special.stirling2(n, k)), 0.0))
    lhs, rhs = _worst(pairs)
    yield VerificationReport.from_values(
        "stirling_structural_values", {"n_max": 12}, lhs, rhs, 0.0)


# ---------------------------------------------------------------------------
# q-forms: q-arithmetic and the Y family's alternative representations
# ---------------------------------------------------------------------------

def q_forms_suite():
    for q in Q_GRID:
        lhs, rhs = _worst(
            (qnum.q_integer(n, q), sum(q ** i for i in range(n)))
            for n in range(21)
        )
        yield VerificationReport.from_values(
            "q_integer_geometric_sum", {"q": q, "n_max": 20}, lhs, rhs, 1e-12)

    uv_grid = tuple(i * 0.25 for i in range(9))
    for q in Q_GRID:
        lhs, rhs = _worst(
            (sum(qnum.q_addition_split(u, v, q)), qnum.q_integer(u + v, q))
            for u in uv_grid for v in uv_grid
        )
        yield VerificationReport.from_values(
            "q_addition_split", {"q": q, "uv_grid": "0:2:0.25"}, lhs, rhs, 1e-12)

    for q in Q_GRID:
        # [-u] = -q^(-u) [u] holds; the sign-exponent variant -q^(+u) [u] does not.
        pairs, alt = [], -1.0
        for u in (0.25, 0.5, 1.0, 1.5, 2.0):
            neg = qnum.q_integer(-u, q)
            pairs.append((neg, -qnum.q_power(q, -u) * qnum.q_integer(u, q)))
            alt = max(alt, abs(neg - (-qnum.q_power(q, u) * qnum.q_integer(u, q))))
        lhs, rhs = _worst(pairs)
        yield VerificationReport.from_values(
            "q_negation_inverse_power_reading",
            {"q": q, "sign_exponent_variant_residual": alt}, lhs, rhs, 1e-12)

    for q in Q_GRID:
        lhs, rhs = _worst(
            (qnum.gauss_binomial(n, r, q), qnum.gauss_binomial(n, n - r, q))
            for n in range(13) for r in range(n + 1)
        )
        yield VerificationReport.from_values(
            "gauss_binomial_symmetry", {"q": q, "n_max": 12}, lhs, rhs, 0.0)

    # The true deviation is (1-q) r(n-r)/2 * C(n,r) to first order, which for
    # n = 10 exceeds 1e-6 absolutely; the bound is a relative one.
    q_near = 1.0 - 1e-8
    worst = None
    for n in range(11):
        for r in range(n + 1):
            rep = VerificationReport.from_values(
                "gauss_binomial_classical_limit",
                {"q": q_near, "n_max": 10},
                qnum.gauss_binomial(n, r, q_near), float(math.comb(n, r)),
                1e-6, mode="rel")
            if worst is None or rep.residual > worst.residual:
                worst = rep
    yield worst

    lhs, rhs = _worst(
        (qnum.gen_binomial(float(-m), l), (-1) ** l * math.comb(m, l))
        for m in range(9) for l in range(m + 1)
    )
    yield VerificationReport.from_values(
        "gen_binomial_negative_integer_argument", {"m_max": 8}, lhs, rhs, 1e-12)

    for n in range(11):
        for k in range(n + 1):
            for q in Q_GRID:
                lhs, rhs = _worst(
                    (qbernstein.y_poly_sumform(n, k, x, q), qbernstein.y_poly(n, k, x, q))
                    for x in X_DECILES
                )
                yield VerificationReport.from_values(
                    "y_dual_form_agreement",
                    {"n": n, "k": k, "q": q, "x_grid": "deciles"}, lhs, rhs, 1e-12)

    for n in range(11):
        for k in range(n + 1):
            for q in Q_GRID:
                lhs, rhs = _worst(
                    (qbernstein.y_from_genfun(n, k, x, q), qbernstein.y_poly(n, k, x, q))
                    for x in X_DECILES
                )
                yield VerificationReport.from_values(
                    "y_coefficient_extraction",
                    {"n": n, "k": k, "q": q, "x_grid": "deciles"}, lhs, rhs, 1e-12)

    trunc = SeriesTruncation(terms=64)
    for k in range(5):
        for t in (1.0, -1.0, 0.5, 1j):
            for q in (0.3, 0.5, 0.7):
                pairs = []
                for x in (0.2, 0.5, 0.8):
                    point = qbernstein.GenFunPoint(t=t, x=x, q=q, truncation=trunc)
                    pairs.append((qbernstein.gen_fun_series(point, k),
                                  qbernstein.gen_fun(point, k)))
                lhs, rhs = _worst(pairs)
                yield VerificationReport.from_values(
                    "generating_function_series_vs_closed",
                    {"k": k, "t": t, "q": q, "terms": 64, "x_grid": "0.2,0.5,0.8"},
                    lhs, rhs, 1e-10)

    q_near = 1.0 - 1e-6
    for n in range(11):
        lhs, rhs = _worst(
            (qbernstein.y_poly(n, k, x, q_near), bernstein.basis(k, n, x))
            for k in range(n + 1) for x in X_DECILES
        )
        yield VerificationReport.from_values(
            "y_classical_limit_continuity", {"n": n, "q": q_near}, lhs, rhs, 1e-4)

    for n in range(11):
        lhs, rhs = _worst(
            (qbernstein.y_poly(n, k, x, 1.0), bernstein.basis(k, n, x))
            for k in range(n + 1) for x in X_DECILES
        )
        yield VerificationReport.from_values(
            "y_equals_basis_at_q_one", {"n": n}, lhs, rhs, 0.0)

    trunc = SeriesTruncation(terms=64)
    for n in range(9):
        for k in range(n + 1):
            for q in (0.3, 0.5):
                pairs, worst_x = [], None
                alt_const, alt_split = -1.0, -1.0
                for x in (0.25, 0.5, 0.75):
                    closed = qbernstein.y_poly(n, k, x, q)
                    derived = qbernstein.y_triple_sum(n, k, x, q, trunc, "derived")
                    pairs.append((derived, closed))
                    alt_const = max(alt_const, abs(
                        qbernstein.y_triple_sum(n, k, x, q, trunc, "constant-binomial") - closed))
                    alt_split = max(alt_split, abs(
                        qbernstein.y_triple_sum(n, k, x, q, trunc, "split-exponent") - closed))
                lhs, rhs = _worst(pairs)
                yield VerificationReport.from_values(
                    "y_triple_sum_derived_reading",
                    {"n": n, "k": k, "q": q,
                     "constant_binomial_residual": alt_const,
                     "split_exponent_residual": alt_split},
                    lhs, rhs, 1e-9)


# ---------------------------------------------------------------------------
# identities: Bernoulli-Stirling expansion, vanishing sum, Hermite relation
# ---------------------------------------------------------------------------

def identities_suite():
    for n in range(9):
        for k in range(n + 1):
            for q in Q_GRID:
                worst = None
                for x in X_DECILES:
                    rep = qbernstein.bernoulli_stirling_identity_check(n, k, x, q, tol=1e-9)
                    if worst is None or rep.residual > worst.residual:
                        worst = rep
                worst.params["x_grid"] = "deciles"
                yield worst

    for k in range(1, 9):
        for x in (0.4, 0.9):
            for q in (0.7, 0.99):
                yield qbernstein.vanishing_sum_check(k, x, q)

    trunc = SeriesTruncation(terms=40)
    for k in range(1, 5):
        for y in X_DECILES:
            value = qbernstein.hermite_sum(k, y, trunc)
            yield VerificationReport.from_values(
                "hermite_relation_sum_vs_exponential",
                {"k": k, "y": y, "terms": 40, "oracle": "exp(2(1-y))"},
                value, math.exp(2.0 * (1.0 - y)), 1e-8)

    for k in range(1, 5):
        for y in X_DECILES:
            value = qbernstein.hermite_sum(k, y, trunc)
            expansion = math.e * sum(
                special.hermite(j, 1.0 - y) / math.factorial(j) for j in range(31))
            yield VerificationReport.from_values(
                "hermite_relation_sum_vs_hermite_expansion",
                {"k": k, "y": y, "terms": 40, "expansion_terms": 31},
                value, expansion, 1e-8)

    for y in X_DECILES:
        values = [qbernstein.hermite_sum(k, y, trunc) for k in range(1, 5)]
        lhs, rhs = max(values), min(values)
        yield VerificationReport.from_values(
            "hermite_relation_sum_independent_of_k",
            {"y": y, "k_range": "1..4"}, lhs, rhs, 1e-10)


# ---------------------------------------------------------------------------
# interp: interpolation function, its series, derivatives, special values
# ---------------------------------------------------------------------------

def interp_suite():
    trunc = SeriesTruncation(terms=80)
    z_grid = (-3.0, -1.0, 0.5, 2.0, 1 + 1j)
    for z in z_grid:
        for k in range(5):
            for q in (0.3, 0.7):
                pairs = []
                for x in (0.2, 0.5, 0.8):
                    p = interp.InterpPoint(z=z, k=k, x=x, q=q)
                    pairs.append((interp.s_q_series(p, trunc), interp.s_q_closed(p)))
                lhs, rhs = _worst(pairs)
                yield VerificationReport.from_values(
                    "interpolation_series_vs_closed",
                    {"z": z, "k": k, "q": q, "terms": 80, "x_grid": "0.2,0.5,0.8"},
                    lhs, rhs, 1e-9)

    for n in range(9):
        for k in range(min(n, 4) + 1):
            for q in (0.3, 0.7):
                worst = None
                for x in (0.2, 0.5, 0.8):
                    rep = interp.negative_integer_value_check(n, k, x, q, tol=1e-12)
                    if worst is None or rep.residual > worst.residual:
                        worst = rep
                worst.params["x_grid"] = "0.2,0.5,0.8"
                yield worst

    for m in (1, 2):
        for z in (-2.0, 0.0, 1.5):
            for k in range(3):
                pairs = []
                for x in (0.2, 0.5, 0.8):
                    exact = interp.s_derivative(m, z, k, x)
                    h = 1e-4
                    sk = lambda zz: interp.s_q_closed(interp.InterpPoint(z=zz, k=k, x=x, q=1.0))
                    if m == 1:
                        fd = (sk(z + h) - sk(z - h)) / (2 * h)
                    else:
                        fd = (sk(z + h) - 2 * sk(z) + sk(z - h)) / (h * h)
                    pairs.append((exact, fd))
                lhs, rhs = _worst(pairs)
                yield VerificationReport.from_values(
                    "interpolation_derivative_vs_finite_difference",
                    {"m": m, "z": z, "k": k, "step": 1e-4, "x_grid": "0.2,0.5,0.8"},
                    lhs, rhs, 1e-5, mode="rel")

    q_near = 1.0 - 1e-6
    for z in (-2.0, 0.5, 2.0):
        for k in range(3):
            pairs = []
            for x in (0.2, 0.5, 0.8):
                near = interp.s_q_closed(interp.InterpPoint(z=z, k=k, x=x, q=q_near))
                limit = interp.s_q_closed(interp.InterpPoint(z=z, k=k, x=x, q=1.0))
                pairs.append((near, limit))
            lhs, rhs = _worst(pairs)
            yield VerificationReport.from_values(
                "interpolation_continuity_at_q_one",
                {"z": z, "k": k, "q": q_near}, lhs, rhs, 1e-4)

    try:
        interp.s_q_closed(interp.InterpPoint(z=0.5, k=0, x=1.0, q=1.0))
        raised = False
    except SingularityError:
        raised = True
    yield VerificationReport.from_values(
        "interpolation_pole_at_x_one",
        {"x": 1.0, "raised": raised},
        0.0 if raised else math.inf, 0.0, 0.0)

    for z in (-2.0, 0.7, 2.5):
        for k in range(3):
            pairs = []
            for x in (0.2, 0.5, 0.8):
                lhs_v = interp.s_q_closed(interp.InterpPoint(z=z, k=k, x=x, q=1.0))
                rhs_v = (interp.s_q_closed(interp.InterpPoint(z=0.0, k=k, x=x, q=1.0))
                         * (1.0 - x) ** (-z))
                pairs.append((lhs_v, rhs_v))
            lhs, rhs = _worst(pairs)
            yield VerificationReport.from_values(
                "interpolation_exponential_structure",
                {"z": z, "k": k}, lhs, rhs, 1e-12)


# ---------------------------------------------------------------------------
# convexity: Phillips operator shape properties
# ---------------------------------------------------------------------------

def convexity_suite():
    one = lambda t: 1.0
    for name, f in sorted(BUILTIN_FUNCTIONS.items()):
        for n in range(1, 11):
            lhs, rhs = _worst(
                (qbernstein.phillips_operator(f, n, x, 1.0), bernstein.operator(f, n, x))
                for x in X_GRID_101
            )
            yield VerificationReport.from_values(
                "phillips_reduces_to_classical_at_q_one",
                {"f": name, "n": n, "x_grid": "0:1:0.01"}, lhs, rhs, 1e-13)

    for q in (0.5, 0.9, 1.0):
        for n in range(1, 11):
            lhs, rhs = _worst(
                (qbernstein.phillips_operator(one, n, x, q), 1.0) for x in X_GRID_101
            )
            yield VerificationReport.from_values(
                "phillips_partition_of_unity",
                {"n": n, "q": q, "x_grid": "0:1:0.01"}, lhs, rhs, 1e-12)

    for name in CONVEX_BUILTINS:
        f = BUILTIN_FUNCTIONS[name]
        for q in (0.5, 0.9, 1.0):
            for n in range(2, 11):
                drop = min(
                    qbernstein.phillips_operator(f, n - 1, x, q)
                    - qbernstein.phillips_operator(f, n, x, q)
                    for x in X_GRID_101
                )
                yield VerificationReport.from_values(
                    "phillips_monotone_in_n_for_convex_f",
                    {"f": name, "n": n, "q": q, "min_drop": drop},
                    max(0.0, -drop), 0.0, 1e-12)

    for name in CONVEX_BUILTINS:
        f = BUILTIN_FUNCTIONS[name]
        for q in (0.5, 0.9, 1.0):
            for n in range(1, 11):
                margin = min(
                    qbernstein.phillips_operator(f, n, x, q) - f(x) for x in X_GRID_101
                )
                yield VerificationReport.from_values(
                    "phillips_one_sided_above_convex_f",
                    {"f": name, "n": n, "q": q, "min_margin": margin},
                    max(0.0, -margin), 0.0, 1e-12)


SUITES = {
    "classical": classical_suite,
    "q-forms": q_forms_suite,
    "identities": identities_suite,
    "interp": interp_suite,
    "convexity": convexity_suite,
}

SUITE_ORDER = ("classical", "q-forms", "identities", "interp", "convexity")


def iter_suite(name: str, tol_override=None):
    """Yield the reports of one suite (or "all"), optionally re-judged
    against a uniform tolerance."""
    if name == "all":
        names = SUITE_ORDER
    elif name in SUITES:
        names = (name,)
    else:
        raise KeyError(f"unknown suite: {name!r}")
    for suite_name in names:
        for report in SUITES[suite_name]():
            if tol_override is not None:
                report = report.with_tolerance(tol_override)
            yield report


def run_suite(name: str, tol_override=None):
    """Materialise a suite; returns (reports, all_passed)."""
    reports = list(iter_suite(name, tol_override))
    return reports, all(r.passed for r in reports)
