"""Exhaustive and randomized property sweeps.

Each sweep re-verifies one family of guaranteed-true statements over a
parameter range and reports the number of cases checked plus any failures
(there should never be any).  The CLI ``sweep`` subcommand and the
acceptance test suite both drive these.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product

from .coefficients import (
    abel_check,
    check_diagonal_factorization,
    diagonal,
    diagonal_sum,
    quad_coeff,
    quad_coeff_oracle,
    sign_quadratic,
)
from .concavity import check_transfer, check_ulc_transfer
from .errors import DegenerateFactorError, GammaCertError
from .paths import (
    PathConfig,
    build_certificate,
    check_crossing_claim,
    check_rotation_balance,
    lhs_by_formula,
    lhs_by_paths,
    rhs_by_formula,
    rhs_by_paths,
)
from .polycore import GammaVector


@dataclass
class SweepReport:
    name: str
    cases: int = 0
    failures: list[str] = field(default_factory=list)
    notes: dict[str, int] = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return not self.failures

    def check(self, condition: bool, message: str) -> None:
        self.cases += 1
        if not condition:
            self.failures.append(message)


def _sign(x: int) -> int:
    return (x > 0) - (x < 0)


def sweep_oracle(max_n: int = 20) -> SweepReport:
    """Closed formula == brute-force expansion, plus the basic sign facts:
    square and adjacent coefficients are nonnegative, everything with
    k > i+1 vanishes."""
    rep = SweepReport(f"oracle-equivalence(n<={max_n})")
    for n in range(2, max_n + 1):
        for i in range(1, n):
            for k in range(n // 2 + 1):
                for j in range(k + 1):
                    c = quad_coeff(n, i, j, k)
                    rep.check(c == quad_coeff_oracle(n, i, j, k), f"formula/oracle mismatch at {(n, i, j, k)}")
                    if k > i + 1:
                        rep.check(c == 0, f"nonzero coefficient beyond k=i+1 at {(n, i, j, k)}")
                    if j == k:
                        rep.check(c >= 0, f"negative square coefficient at {(n, i, j)}")
                    if k == j + 1:
                        rep.check(c >= 0, f"negative adjacent coefficient at {(n, i, j)}")
    return rep


def sweep_sign_structure(max_n: int = 30) -> SweepReport:
    """Tail-sign for every diagonal, sign quadratics, and the factorization
    identity wherever its denominators are positive.

    The degenerate-denominator cases are asserted directly: the coefficient
    vanishes once the index sum passes i+1, and at index sum exactly i+1 it
    is strictly negative when n >= 2i+2 and zero at the boundary n < 2i+2.
    """
    rep = SweepReport(f"sign-structure(n<={max_n})")
    for n in range(2, max_n + 1):
        for i in range(1, n // 2 + 1):
            for l in range(1, (i + 1) // 2 + 1):
                for parity in ("even", "odd"):
                    diag = diagonal(n, i, l, parity)
                    rep.check(diag.tail_sign_ok, f"tail-sign violated at {(n, i, l, parity)}")
                    quad = sign_quadratic(n, i, l, parity)
                    rep.check(quad.a < 0 and quad.b > 0, f"sign quadratic signs wrong at {(n, i, l, parity)}")
                    js = range(1, l + 1) if parity == "even" else range(l)
                    for j in js:
                        pair = (l - j, l + j) if parity == "even" else (l - 1 - j, l + j)
                        coeff = quad_coeff(n, i, *pair)
                        try:
                            ok = check_diagonal_factorization(n, i, l, j, parity)
                            rep.check(ok, f"factorization identity failed at {(n, i, l, j, parity)}")
                            rep.check(
                                _sign(coeff) == _sign(quad.at(j)),
                                f"sign disagreement at {(n, i, l, j, parity)}",
                            )
                        except DegenerateFactorError:
                            s = l + j  # index sum reached by the upper index
                            if s > i + 1:
                                rep.check(coeff == 0, f"expected zero beyond i+1 at {(n, i, l, j, parity)}")
                            elif n >= 2 * i + 2:
                                rep.check(coeff < 0, f"expected negative at index sum i+1 at {(n, i, l, j, parity)}")
                            else:
                                rep.check(coeff == 0, f"expected boundary zero at {(n, i, l, j, parity)}")
    return rep


def sweep_diagonal_totals(max_n: int = 30) -> SweepReport:
    """diagonal_sum(n, i, r) >= 0 everywhere; it vanishes for r >= i+1 when
    n >= 2i+2 (at the boundary i = n/2 it can be positive, which is recorded,
    not failed)."""
    rep = SweepReport(f"diagonal-totals(n<={max_n})")
    boundary_positives = 0
    for n in range(2, max_n + 1):
        for i in range(1, n // 2 + 1):
            for r in range(0, 2 * i + 3):
                total = diagonal_sum(n, i, r)
                rep.check(total >= 0, f"negative diagonal sum at {(n, i, r)}")
                if r >= i + 1:
                    if n >= 2 * i + 2:
                        rep.check(total == 0, f"nonzero diagonal sum at {(n, i, r)} with n >= 2i+2")
                    elif total > 0:
                        boundary_positives += 1
    rep.notes["boundary_positives"] = boundary_positives
    return rep


def sweep_path_identities(max_n: int = 10, cap: int | None = None) -> SweepReport:
    """Double counting, crossing claim, rotation balance, and certificates
    for every configuration with i <= r <= 2i+2 (the path model's domain)."""
    rep = SweepReport(f"path-identities(n<={max_n})")
    paths_seen = 0
    for n in range(0, max_n + 1):
        for i in range(0, n // 2 + 1):
            try:
                balance = check_rotation_balance(PathConfig(n, i, i), cap)
                rep.cases += balance.rectangles
            except GammaCertError as exc:
                rep.failures.append(f"rotation balance failed at (n={n}, i={i}): {exc}")
            for r in range(i, 2 * i + 3):
                cfg = PathConfig(n, i, r)
                paths_seen += cfg.path_count
                lhs_f, rhs_f = lhs_by_formula(cfg), rhs_by_formula(cfg)
                rep.check(lhs_by_paths(cfg, cap) == lhs_f, f"lhs path/formula mismatch at {(n, i, r)}")
                rep.check(rhs_by_paths(cfg, cap) == rhs_f, f"rhs path/formula mismatch at {(n, i, r)}")
                try:
                    check_crossing_claim(cfg, cap)
                    cert = build_certificate(cfg, cap)
                except GammaCertError as exc:
                    rep.check(False, f"claim/certificate error at {(n, i, r)}: {exc}")
                    continue
                rep.check(cert.total == lhs_f - rhs_f, f"certificate total mismatch at {(n, i, r)}")
                rep.check(
                    cert.avoiding_term >= 0 and all(c > 0 for *_, c in cert.boundary_terms),
                    f"non-manifest certificate at {(n, i, r)}",
                )
                if i >= 1:
                    rep.check(
                        cert.total == diagonal_sum(n, i, r),
                        f"certificate disagrees with coefficient sum at {(n, i, r)}",
                    )
    rep.notes["paths_enumerated"] = paths_seen
    return rep


def _grid_vectors(length: int, max_entry: int):
    return product(range(max_entry + 1), repeat=length)


def sweep_transfer(max_n: int = 12, max_entry: int = 3) -> SweepReport:
    """Exhaustive grid: no gamma vector that is log-concave without internal
    zeros may produce an h failing either conclusion."""
    rep = SweepReport(f"transfer-grid(n<={max_n},entries<={max_entry})")
    hypothesis_true = 0
    for n in range(0, max_n + 1):
        for entries in _grid_vectors(n // 2 + 1, max_entry):
            report = check_transfer(GammaVector(n, tuple(Fraction(e) for e in entries)))
            hypothesis_true += report.hypothesis
            rep.check(not report.violation, f"transfer violated at n={n}, gamma={entries}")
    rep.notes["hypothesis_true"] = hypothesis_true
    return rep


def sweep_ulc_transfer(max_n: int = 10, max_entry: int = 2) -> SweepReport:
    """Same grid for the ultra-log-concavity version (order floor(n/2) to n)."""
    rep = SweepReport(f"ulc-transfer-grid(n<={max_n},entries<={max_entry})")
    hypothesis_true = 0
    for n in range(0, max_n + 1):
        for entries in _grid_vectors(n // 2 + 1, max_entry):
            report = check_ulc_transfer(GammaVector(n, tuple(Fraction(e) for e in entries)))
            hypothesis_true += report.hypothesis
            rep.check(not report.violation, f"ulc transfer violated at n={n}, gamma={entries}")
    rep.notes["hypothesis_true"] = hypothesis_true
    return rep


def _random_fraction(rng: random.Random, max_num: int = 24, max_den: int = 8) -> Fraction:
    return Fraction(rng.randint(0, max_num), rng.randint(1, max_den))


def random_log_concave_gamma(rng: random.Random, n: int) -> GammaVector:
    """Build a log-concave nonnegative gamma vector from decreasing ratios.

    gamma_j = gamma_0 * r_1 * ... * r_j with r_1 >= r_2 >= ... >= 0 is
    log-concave by construction, and any trailing zeros it produces are not
    internal.
    """
    m = n // 2
    ratios = sorted((_random_fraction(rng, 6, 4) for _ in range(m)), reverse=True)
    entries = [_random_fraction(rng) + 1]
    for ratio in ratios:
        entries.append(entries[-1] * ratio)
    return GammaVector(n, tuple(entries))


def sweep_transfer_random(count: int = 10_000, max_n: int = 12, seed: int = 20250810) -> SweepReport:
    """Randomized rational gamma vectors: half constructed to satisfy the
    hypothesis, half arbitrary (exercising the vacuous branch)."""
    rng = random.Random(seed)
    rep = SweepReport(f"transfer-random({count})")
    hypothesis_true = 0
    for t in range(count):
        n = rng.randint(0, max_n)
        if t % 2 == 0:
            g = random_log_concave_gamma(rng, n)
        else:
            g = GammaVector(n, tuple(_random_fraction(rng) for _ in range(n // 2 + 1)))
        report = check_transfer(g)
        hypothesis_true += report.hypothesis
        rep.check(not report.violation, f"transfer violated for n={n}, gamma={g.gamma}")
    rep.notes["hypothesis_true"] = hypothesis_true
    return rep


def sweep_abel_random(count: int = 10_000, seed: int = 20250810) -> SweepReport:
    """Randomized hypothesis-satisfying (a, b) pairs through abel_check.

    a is nonnegative entries followed by nonpositive ones, padded at a_0 so
    the total is nonnegative; b is sorted decreasing nonnegative.  The check
    itself raises on any broken conclusion, so a completed call is a pass.
    """
    rng = random.Random(seed)
    rep = SweepReport(f"abel-random({count})")
    for _ in range(count):
        size = rng.randint(1, 9)
        head = rng.randint(0, size)
        a = [_random_fraction(rng) for _ in range(head)]
        a += [-_random_fraction(rng) for _ in range(size - head)]
        total = sum(a, Fraction(0))
        if total < 0:
            a[0] -= total
        b = sorted((_random_fraction(rng) for _ in range(size)), reverse=True)
        try:
            report = abel_check(a, b)
            rep.check(report.total >= 0, "negative abel total")
            rep.check(all(t >= 0 for t in report.terms), "negative abel term")
        except GammaCertError as exc:
            rep.check(False, f"abel_check rejected a valid instance: {exc}")
    return rep


ALL_SWEEPS = {
    "oracle": sweep_oracle,
    "signs": sweep_sign_structure,
    "totals": sweep_diagonal_totals,
    "paths": sweep_path_identities,
    "transfer": sweep_transfer,
    "ulc": sweep_ulc_transfer,
    "abel": sweep_abel_random,
}
