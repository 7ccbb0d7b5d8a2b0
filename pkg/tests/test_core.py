import math
import random

import pytest

from gaussfactor.core import (
    MAX_TERMS,
    ConfigurationError,
    FactorizationTarget,
    gauss_sum_exact,
    is_exact_factor,
    phase_schedule,
)
from spin_oracle import gauss_direct


def test_factor_schedule_is_all_zero():
    sched = phase_schedule(FactorizationTarget(16637), j=127, truncation=12)
    assert sched.residues == (0,) * 13
    assert sched.phases == (0.0,) * 13


def test_hand_reduced_schedule():
    # 15 * m^2 mod 2 for m = 0..3
    sched = phase_schedule(FactorizationTarget(15), j=2, truncation=3)
    assert sched.residues == (0, 1, 0, 1)
    assert sched.phases == (0.0, math.pi, 0.0, math.pi)


def test_trial_factor_one_divides_everything():
    sched = phase_schedule(FactorizationTarget(987654321), j=1, truncation=5)
    assert sched.residues == (0,) * 6
    assert gauss_sum_exact(FactorizationTarget(987654321), 1, 5).magnitude == 1.0


def test_schedule_validation():
    t = FactorizationTarget(15)
    with pytest.raises(ConfigurationError):
        phase_schedule(t, j=0, truncation=3)
    with pytest.raises(ConfigurationError):
        phase_schedule(t, j=5, truncation=-1)
    with pytest.raises(ConfigurationError):
        phase_schedule(t, j=5, truncation=MAX_TERMS)


def test_target_validation():
    with pytest.raises(ConfigurationError):
        FactorizationTarget(1)
    with pytest.raises(ConfigurationError):
        FactorizationTarget(10, exponent=0)


def test_schedule_shape_and_ranges():
    rng = random.Random(11)
    for _ in range(200):
        n = rng.randint(2, 10**12)
        j = rng.randint(1, 500)
        m = rng.randint(0, 40)
        sched = phase_schedule(FactorizationTarget(n), j, m)
        assert len(sched.residues) == len(sched.phases) == m + 1
        assert sched.residues[0] == 0
        assert all(0 <= r < j for r in sched.residues)
        for r, phi in zip(sched.residues, sched.phases):
            assert phi == 2.0 * math.pi * r / j


def test_factor_cases_are_exactly_one():
    # for a divisor every phasor is exactly 1 + 0i, no tolerance needed
    v = gauss_sum_exact(FactorizationTarget(52882363), j=67, truncation=15)
    assert (v.re, v.im) == (1.0, 0.0)
    v = gauss_sum_exact(FactorizationTarget(16637), j=131, truncation=12)
    assert (v.re, v.im) == (1.0, 0.0)
    assert v.magnitude == 1.0


def test_nonfactor_value_frozen():
    # frozen from the independent phasor oracle
    v = gauss_sum_exact(FactorizationTarget(16637), j=129, truncation=12)
    assert abs(v.re - 0.097009614748896) < 1e-12
    assert abs(v.im - (-0.084725058073358)) < 1e-12
    assert abs(v.magnitude - 0.128799071500003) < 1e-12


def test_alternating_phasors_cancel():
    # phases (0, pi, 0, pi) sum to zero up to round-off
    v = gauss_sum_exact(FactorizationTarget(15), j=2, truncation=3)
    assert v.magnitude < 1e-15


def test_magnitude_bounded_random():
    rng = random.Random(7)
    for _ in range(300):
        t = FactorizationTarget(rng.randint(2, 10**9))
        v = gauss_sum_exact(t, rng.randint(1, 300), rng.randint(0, 50))
        assert 0.0 <= v.magnitude <= 1.0 + 1e-12


def test_factor_exactness_random_divisors():
    rng = random.Random(13)
    for _ in range(100):
        a = rng.randint(2, 5000)
        b = rng.randint(2, 5000)
        v = gauss_sum_exact(FactorizationTarget(a * b), j=a, truncation=rng.randint(0, 30))
        assert abs(v.magnitude - 1.0) < 1e-12


def test_truncation_zero_is_always_one():
    # the m = 0 term alone carries no phase
    rng = random.Random(3)
    for _ in range(50):
        v = gauss_sum_exact(FactorizationTarget(rng.randint(2, 10**6)), rng.randint(1, 1000), 0)
        assert (v.re, v.im) == (1.0, 0.0)


def test_residues_match_naive_product():
    # modular-reduction path against the naive product for small inputs
    rng = random.Random(101)
    for _ in range(2000):
        n = rng.randint(2, 10**6)
        j = rng.randint(1, 10**4)
        m = rng.randint(0, 60)
        e = rng.choice((1, 2, 3))
        sched = phase_schedule(FactorizationTarget(n, exponent=e), j, m)
        assert sched.residues == tuple((k**e * n) % j for k in range(m + 1))


def test_residues_periodic_in_pulse_index():
    # the residue depends only on m mod j
    rng = random.Random(23)
    for _ in range(100):
        n = rng.randint(2, 10**9)
        j = rng.randint(1, 25)
        sched = phase_schedule(FactorizationTarget(n), j, 3 * j + 4)
        for k in range(len(sched.residues) - j):
            assert sched.residues[k] == sched.residues[k + j]


def test_exponent_knob():
    sched = phase_schedule(FactorizationTarget(10, exponent=3), j=7, truncation=6)
    assert sched.residues == tuple((k**3 * 10) % 7 for k in range(7))


def test_huge_target_stays_exact():
    # far beyond 2**53: float evaluation of the phase would be garbage here
    n = 10**40 + 39
    j = 10**6 + 3
    sched = phase_schedule(FactorizationTarget(n), j, 20)
    assert sched.residues == tuple((k * k * n) % j for k in range(21))


def test_gauss_sum_matches_direct_oracle_random():
    rng = random.Random(37)
    for _ in range(100):
        n = rng.randint(2, 10**8)
        j = rng.randint(1, 400)
        m = rng.randint(0, 30)
        v = gauss_sum_exact(FactorizationTarget(n), j, m)
        assert abs(v.value - gauss_direct(n, j, m)) < 1e-12


def test_is_exact_factor():
    assert is_exact_factor(16637, 127)
    assert not is_exact_factor(16637, 128)
    assert is_exact_factor(16637, 1)
    with pytest.raises(ConfigurationError):
        is_exact_factor(10, 0)
