import itertools
import math

import numpy as np
import pytest

from oracles import classical_posterior, noisy_channel_log_ratio
from relprob import catalog
from relprob.bayes import (
    bayes_update,
    likelihood_from_density,
    message_likelihood,
    noisy_channel_likelihood,
    pointwise_product,
    sequential_update,
)
from relprob.errors import RpfError
from relprob.events import to_absolute
from relprob.generate import random_rpf
from relprob.magnitude import WILDCARD, ZERO, Kind, Magnitude
from relprob.rpf import DenseRpf, validate

# one representative per variant for the (0, 1) entry of a two-outcome RPF
VARIANTS = [0, 0.5, 1, 3, math.inf, "*"]


def two_outcome(x):
    m = Magnitude.of(x) if x != "*" else WILDCARD
    return DenseRpf.from_entries([[1, m], [m.inverse(), 1]])


class TestProduct:
    def test_identity(self, rng):
        for _ in range(10):
            p = random_rpf(rng, 4, "any")
            assert pointwise_product(p, catalog.uniform(4)) == p

    def test_geometric(self):
        got = pointwise_product(catalog.finite_geometric(3, 2), catalog.finite_geometric(3, 3))
        assert got == catalog.finite_geometric(3, 6)

    def test_zero_times_inf(self):
        got = pointwise_product(catalog.finite_geometric(2, 0), catalog.finite_geometric(2, math.inf))
        assert got[0, 1].is_wildcard

    def test_dimension_mismatch(self):
        with pytest.raises(RpfError):
            pointwise_product(catalog.uniform(2), catalog.uniform(3))

    def test_axiom_preservation(self, rng):
        for _ in range(100):
            k = int(rng.integers(1, 7))
            assert validate(pointwise_product(random_rpf(rng, k, "any"), random_rpf(rng, k, "any"))) == []


class TestBayes:
    def test_uniform_prior(self, rng):
        lik = random_rpf(rng, 4, "any")
        assert bayes_update(catalog.uniform(4), lik) == lik

    def test_degeneration_grid(self):
        for a, b in itertools.product(VARIANTS, repeat=2):
            prior, lik = two_outcome(a), two_outcome(b)
            post = bayes_update(prior, lik)
            assert validate(post) == []
            e_prior, e_lik, e_post = prior[0, 1], lik[0, 1], post[0, 1]
            if e_prior.is_zero:
                assert e_post.is_zero or e_post.is_wildcard
                assert e_post.is_wildcard == (e_lik.is_inf or e_lik.is_wildcard)
            if e_prior.is_wildcard:
                assert e_post.is_wildcard

    def test_degeneration_random(self, rng):
        for _ in range(100):
            k = int(rng.integers(2, 6))
            prior, lik = random_rpf(rng, k, "any"), random_rpf(rng, k, "any")
            post = bayes_update(prior, lik)
            zero = prior.kinds == Kind.ZERO
            wild_lik = np.isin(lik.kinds, [Kind.INF, Kind.WILD])
            assert np.all(post.kinds[zero & ~wild_lik] == Kind.ZERO)
            assert np.all(post.kinds[zero & wild_lik] == Kind.WILD)
            assert np.all(post.kinds[prior.kinds == Kind.WILD] == Kind.WILD)

    def test_classical_oracle(self, rng):
        for _ in range(100):
            k = int(rng.integers(1, 7))
            prior_abs = rng.dirichlet(np.ones(k))
            density = rng.uniform(0.01, 1.0, size=k)
            prior = catalog.from_absolute(prior_abs)
            lik = likelihood_from_density(density)
            got = to_absolute(bayes_update(prior, lik))
            want = classical_posterior(list(prior_abs), list(density))
            np.testing.assert_allclose(got, want, rtol=0, atol=1e-9)

    def test_sequential(self, rng):
        prior = random_rpf(rng, 4, "any")
        assert sequential_update(prior, []) == prior
        liks = [random_rpf(rng, 4, "tmp") for _ in range(4)]
        base = sequential_update(prior, liks)
        for perm in itertools.permutations(liks):
            assert sequential_update(prior, perm) == base

    def test_sequential_messages(self):
        two = sequential_update(catalog.uniform(3), [message_likelihood(3, 0.6, 0), message_likelihood(3, 0.6, 2)])
        assert two == noisy_channel_likelihood(3, 0.6, [1, 0, 1])


class TestNoisyChannel:
    def test_reference_value(self):
        p = noisy_channel_likelihood(4, 0.9, [3, 1, 0, 0])
        assert p[0, 1] == Magnitude.of(1369)
        assert abs(p[0, 1].log - noisy_channel_log_ratio(4, 0.9, [3, 1, 0, 0], 0, 1)) <= 1e-9

    def test_trivial_cases(self):
        assert noisy_channel_likelihood(3, 0.5, [2, 2, 2]) == catalog.uniform(3)
        assert noisy_channel_likelihood(3, 0.0, [5, 0, 1]) == catalog.uniform(3)

    @pytest.mark.parametrize(
        "args",
        [(3, 1.0, [1, 0, 0]), (3, -0.1, [1, 0, 0]), (3, 0.5, [1, 0]), (3, 0.5, [1, -1, 0]), (2, 0.5, [0.5, 1])],
    )
    def test_rejects(self, args):
        with pytest.raises(RpfError):
            noisy_channel_likelihood(*args)

    def test_matches_message_product(self, rng):
        for _ in range(60):
            k = int(rng.integers(1, 7))
            p = float(rng.uniform(0, 0.99))
            counts = rng.multinomial(int(rng.integers(0, 21)), np.ones(k) / k)
            got = noisy_channel_likelihood(k, p, counts)
            assert validate(got) == []
            for i in range(k):
                for j in range(k):
                    assert abs(got[i, j].log - noisy_channel_log_ratio(k, p, counts, i, j)) <= 1e-9

    def test_message_likelihood(self):
        lik = message_likelihood(4, 0.9, 0)
        assert lik[0, 1] == Magnitude.of(37)
        assert lik[1, 2] == Magnitude.of(1)


def test_density_adapter():
    lik = likelihood_from_density([0.2, 0.0, 0.4])
    assert lik[2, 0] == Magnitude.of(2) and lik[1, 0] == ZERO
