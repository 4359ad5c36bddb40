"""The property-suite runners themselves, at small ranges."""

import random

from gammacert.sweeps import (
    random_log_concave_gamma,
    sweep_abel_random,
    sweep_diagonal_totals,
    sweep_oracle,
    sweep_path_identities,
    sweep_sign_structure,
    sweep_transfer,
    sweep_transfer_random,
    sweep_ulc_transfer,
)
from gammacert import check_transfer, has_internal_zeros, is_log_concave


def test_oracle_sweep_counts_and_passes():
    rep = sweep_oracle(8)
    assert rep.ok and rep.cases > 100


def test_sign_structure_sweep():
    rep = sweep_sign_structure(12)
    assert rep.ok


def test_diagonal_totals_records_boundary():
    rep = sweep_diagonal_totals(8)
    assert rep.ok
    assert rep.notes["boundary_positives"] > 0


def test_path_identities_sweep():
    rep = sweep_path_identities(6)
    assert rep.ok
    assert rep.notes["paths_enumerated"] > 0


def test_transfer_sweeps():
    assert sweep_transfer(6, 2).ok
    assert sweep_ulc_transfer(6, 2).ok


def test_ulc_transfer_counts_hypotheses():
    rep = sweep_ulc_transfer(8, 2)
    assert rep.ok
    assert rep.notes["hypothesis_true"] > 0


def test_ulc_transfer_full_grid():
    # Order floor(n/2) on gamma forces order n on h, over the whole
    # entries-{0..3} grid up to n = 12 (the instance version of the
    # ultra-log-concave transfer).
    rep = sweep_ulc_transfer(12, 3)
    assert rep.ok
    assert rep.cases == sum(4 ** (n // 2 + 1) for n in range(13))


def test_randomized_sweeps_are_deterministic():
    a = sweep_transfer_random(200, 8, seed=5)
    b = sweep_transfer_random(200, 8, seed=5)
    assert a.ok and b.ok
    assert a.notes == b.notes
    assert sweep_abel_random(200, seed=5).ok


def test_constructed_gammas_satisfy_the_hypothesis():
    rng = random.Random(11)
    for _ in range(200):
        g = random_log_concave_gamma(rng, rng.randint(0, 12))
        assert is_log_concave(g.gamma).verdict
        assert not has_internal_zeros(g.gamma).verdict
        assert check_transfer(g).hypothesis
