"""Sequence shape predicates and the gamma-to-h log-concavity transfer check.

Definitions used throughout (all exact, for sequences of rationals):

* log-concave:        a_i^2 >= a_{i-1} a_{i+1} for every interior index i;
* ultra log-concave of order m (m >= len(a)-1):  a_i / C(m, i) is log-concave;
* unimodal:           weakly rises to a peak, then weakly falls;
* internal zero:      a zero entry strictly between two nonzero entries;
* pairwise log-concave:  a_i a_{j-1} >= a_{i-1} a_j for all 1 <= i <= j <= n
  (equivalent to log-concavity for nonnegative sequences without internal
  zeros; the equivalence is exercised by the test suite).

Each predicate returns a :class:`SequenceReport` carrying the verdict and, on
failure, the lexicographically first witness index tuple, so a failed check
can always be replayed by hand.  Predicates whose definition only makes sense
for nonnegative sequences reject negative entries instead of guessing a sign
convention.

``check_transfer`` wires the predicates to :func:`gammacert.polycore.gamma_to_h`
and records the implication "gamma log-concave without internal zeros implies
h log-concave without internal zeros"; its ``violation`` flag can never be
True (that is the theorem), and sweeps in the test suite re-verify this on
tens of thousands of instances.  ``check_ulc_transfer`` is the analogous
instance check for ultra log-concavity (order floor(n/2) on gamma, order n
on h).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .errors import NegativeEntryError, RangeError
from .polycore import GammaVector, SymmetricPolynomial, binomial, gamma_to_h, rational_vector

Entries = Sequence[int | str | Fraction]


@dataclass(frozen=True)
class SequenceReport:
    """Outcome of a single predicate: verdict, predicate name, witness.

    ``witness`` is None when the verdict is True; otherwise it is the index
    tuple of the first violated inequality (what the indices mean is specific
    to ``kind`` and documented on each predicate).
    """

    kind: str
    verdict: bool
    witness: tuple[int, ...] | None = None

    def __bool__(self) -> bool:
        return self.verdict


def _checked(values: Entries, kind: str, *, nonnegative: bool) -> tuple[Fraction, ...]:
    a = rational_vector(values)
    if nonnegative:
        for i, v in enumerate(a):
            if v < 0:
                raise NegativeEntryError(i, f"{kind} requires nonnegative entries; entry {i} is {v}")
    return a


def is_log_concave(values: Entries) -> SequenceReport:
    """a_i^2 >= a_{i-1} a_{i+1} for all interior i; witness is (i,)."""
    a = _checked(values, "log-concavity", nonnegative=True)
    for i in range(1, len(a) - 1):
        if a[i] * a[i] < a[i - 1] * a[i + 1]:
            return SequenceReport("log-concave", False, (i,))
    return SequenceReport("log-concave", True)


def has_internal_zeros(values: Entries) -> SequenceReport:
    """True iff some zero lies strictly between two nonzero entries.

    Witness is the lexicographically first triple (i, k, j) with
    a_i != 0, a_k == 0, a_j != 0 and i < k < j.
    """
    a = rational_vector(values)
    support = [t for t, v in enumerate(a) if v != 0]
    if len(support) >= 2:
        first, last = support[0], support[-1]
        for k in range(first + 1, last):
            if a[k] == 0:
                j = next(t for t in range(k + 1, last + 1) if a[t] != 0)
                return SequenceReport("internal-zeros", True, (first, k, j))
    return SequenceReport("internal-zeros", False)


def is_ultra_log_concave(values: Entries, m: int) -> SequenceReport:
    """Log-concavity of a_i / C(m, i), checked division-free.

    The normalized inequality is cross-multiplied to
    a_i^2 C(m,i-1) C(m,i+1) >= a_{i-1} a_{i+1} C(m,i)^2, which has the same
    verdict and stays in integer arithmetic for integer input.  Witness (i,).
    """
    a = _checked(values, "ultra log-concavity", nonnegative=True)
    if m < len(a) - 1:
        raise RangeError(f"order m={m} too small for a sequence of length {len(a)}")
    for i in range(1, len(a) - 1):
        lhs = a[i] * a[i] * binomial(m, i - 1) * binomial(m, i + 1)
        rhs = a[i - 1] * a[i + 1] * binomial(m, i) ** 2
        if lhs < rhs:
            return SequenceReport("ultra-log-concave", False, (i,))
    return SequenceReport("ultra-log-concave", True)


def is_unimodal(values: Entries) -> SequenceReport:
    """Weakly increasing then weakly decreasing.

    Witness is (i, j): a strict descent at i followed by a strict ascent at j.
    """
    a = rational_vector(values)
    descent = None
    for t in range(len(a) - 1):
        if a[t] > a[t + 1]:
            if descent is None:
                descent = t
        elif a[t] < a[t + 1] and descent is not None:
            return SequenceReport("unimodal", False, (descent, t))
    return SequenceReport("unimodal", True)


def pairwise_log_concave(values: Entries) -> SequenceReport:
    """a_i a_{j-1} >= a_{i-1} a_j for all 1 <= i <= j <= n; witness (i, j)."""
    a = _checked(values, "pairwise log-concavity", nonnegative=True)
    for i in range(1, len(a)):
        for j in range(i, len(a)):
            if a[i] * a[j - 1] < a[i - 1] * a[j]:
                return SequenceReport("pairwise-log-concave", False, (i, j))
    return SequenceReport("pairwise-log-concave", True)


@dataclass(frozen=True)
class TransferReport:
    """Verdicts for one instance of the log-concavity transfer implication."""

    n: int
    gamma_log_concave: SequenceReport
    gamma_internal_zeros: SequenceReport
    h_log_concave: SequenceReport
    h_internal_zeros: SequenceReport
    h: SymmetricPolynomial

    @property
    def hypothesis(self) -> bool:
        return self.gamma_log_concave.verdict and not self.gamma_internal_zeros.verdict

    @property
    def conclusion(self) -> bool:
        return self.h_log_concave.verdict and not self.h_internal_zeros.verdict

    @property
    def violation(self) -> bool:
        """True would disprove the transfer theorem; must never happen."""
        return self.hypothesis and not self.conclusion


def check_transfer(g: GammaVector) -> TransferReport:
    """Check the implication: gamma LC without internal zeros => h likewise.

    Only the forward implication is meaningful; the converse is false in
    general, so no flag is raised when h satisfies the conclusion but gamma
    fails the hypothesis.
    """
    for i, v in enumerate(g.gamma):
        if v < 0:
            raise NegativeEntryError(i, f"gamma entries must be nonnegative; entry {i} is {v}")
    h = gamma_to_h(g)
    return TransferReport(
        n=g.n,
        gamma_log_concave=is_log_concave(g.gamma),
        gamma_internal_zeros=has_internal_zeros(g.gamma),
        h_log_concave=is_log_concave(h.h),
        h_internal_zeros=has_internal_zeros(h.h),
        h=h,
    )


@dataclass(frozen=True)
class UlcTransferReport:
    """Verdicts for one instance of the ultra-log-concavity transfer."""

    n: int
    gamma_ulc: SequenceReport
    gamma_internal_zeros: SequenceReport
    h_ulc: SequenceReport
    h_internal_zeros: SequenceReport
    h: SymmetricPolynomial

    @property
    def hypothesis(self) -> bool:
        return self.gamma_ulc.verdict and not self.gamma_internal_zeros.verdict

    @property
    def conclusion(self) -> bool:
        return self.h_ulc.verdict and not self.h_internal_zeros.verdict

    @property
    def violation(self) -> bool:
        return self.hypothesis and not self.conclusion


def check_ulc_transfer(g: GammaVector) -> UlcTransferReport:
    """Instance check: gamma ULC of order floor(n/2) => h ULC of order n."""
    for i, v in enumerate(g.gamma):
        if v < 0:
            raise NegativeEntryError(i, f"gamma entries must be nonnegative; entry {i} is {v}")
    h = gamma_to_h(g)
    return UlcTransferReport(
        n=g.n,
        gamma_ulc=is_ultra_log_concave(g.gamma, g.n // 2),
        gamma_internal_zeros=has_internal_zeros(g.gamma),
        h_ulc=is_ultra_log_concave(h.h, g.n),
        h_internal_zeros=has_internal_zeros(h.h),
        h=h,
    )
