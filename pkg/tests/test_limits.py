import math

import numpy as np
import pytest

from relprob import catalog
from relprob.errors import IncomparableError, NotConvergedError, RpfError
from relprob.generate import random_rpf
from relprob.limits import FAMILIES, EmbeddedRpf, embed, family_limit, sequence_limit, unembed
from relprob.magnitude import INF, ONE, ZERO, Kind, Magnitude
from relprob.rpf import DenseRpf, validate


def shrinking_towards(rng, d, steps=45):
    """``from_absolute`` of points sliding from the interior onto ``d``."""
    q = rng.dirichlet(np.ones(len(d)))
    return [catalog.from_absolute((1 - t) * d + t * q) for t in 2.0 ** -np.arange(1, steps + 1)]


class TestEmbedding:
    def test_examples(self):
        np.testing.assert_array_equal(embed(catalog.uniform(2)).coords, [0.5] * 4)
        chain = embed(catalog.finite_geometric(2, math.inf)).matrix()
        assert chain[1, 0] == 1.0 and chain[0, 1] == 0.0
        assert embed(catalog.finite_geometric(2, 3)).matrix()[1, 0] == pytest.approx(0.75)

    def test_rejects_wildcard(self):
        with pytest.raises(IncomparableError):
            embed(catalog.indeterminate(2))

    def test_unembed_errors(self):
        with pytest.raises(RpfError):
            unembed(EmbeddedRpf(2, np.array([0.5, 1.5, 0.5, 0.5])))
        with pytest.raises(RpfError):
            unembed(EmbeddedRpf(2, np.array([0.5, 0.5, 0.5])))
        with pytest.raises(RpfError):
            unembed(EmbeddedRpf(2, np.array([0.5, 0.9, 0.9, 0.5])))

    @pytest.mark.parametrize("structure", ["tmp", "totally_comparable"])
    def test_bounded_and_round_trip(self, rng, structure):
        for _ in range(50):
            p = random_rpf(rng, int(rng.integers(1, 7)), structure)
            e = embed(p)
            assert np.all((e.coords >= 0) & (e.coords <= 1))
            np.testing.assert_array_equal(np.diag(e.matrix()), 0.5)
            back = unembed(e)
            assert back == p
            np.testing.assert_allclose(embed(back).coords, e.coords, rtol=0, atol=1e-12)


class TestSequenceLimit:
    def test_constant(self, rng):
        p = random_rpf(rng, 4, "totally_comparable")
        lim = sequence_limit([p, p, p])
        np.testing.assert_array_equal(lim.kinds, p.kinds)
        np.testing.assert_array_equal(lim.logs, p.logs)

    def test_abs_lose_info(self):
        lim = family_limit(FAMILIES["abs-lose-info"])
        assert abs(lim[1, 2].value - 2) <= 1e-6
        assert lim[0, 1].is_inf
        assert lim[1, 0].is_zero
        assert validate(lim) == []

    def test_near_fair_coin(self):
        seq = [catalog.from_absolute([0.5 + 2.0**-n, 0.5 - 2.0**-n]) for n in range(2, 45)]
        assert sequence_limit(seq) == catalog.uniform(2)

    def test_equal_rate_zeros(self):
        lim = family_limit(FAMILIES["equal-rate-zeros"])
        assert lim[0, 2] == ONE and lim[0, 1] == ZERO and lim[1, 0] == INF

    def test_uniform_family(self):
        assert family_limit(FAMILIES["uniform-3"]) == catalog.uniform(3)

    def test_not_converged(self):
        a, b = catalog.finite_geometric(2, 2), catalog.finite_geometric(2, 3)
        with pytest.raises(NotConvergedError) as exc:
            sequence_limit([a, b] * 5)
        assert exc.value.entry in ((0, 1), (1, 0))
        with pytest.raises(NotConvergedError):
            family_limit(FAMILIES["abs-lose-info"], steps=10)

    def test_errors(self):
        with pytest.raises(RpfError):
            sequence_limit([catalog.uniform(2)])
        with pytest.raises(RpfError):
            sequence_limit([catalog.uniform(2), catalog.uniform(3)])
        with pytest.raises(IncomparableError):
            sequence_limit([catalog.indeterminate(2)] * 3)

    def test_closure(self, rng):
        for _ in range(60):
            k = int(rng.integers(2, 7))
            d = rng.dirichlet(np.ones(k))
            d[rng.random(k) < 0.4] = 0
            if d.sum() == 0:
                d[0] = 1
            d /= d.sum()
            lim = sequence_limit(shrinking_towards(rng, d))
            assert validate(lim) == []
            # outcomes in the support end up infinitely more likely than the rest
            assert np.all(lim.kinds[d > 0][:, d == 0] == Kind.INF)

    def test_k2_determined_by_one_coordinate(self, rng):
        for _ in range(30):
            d = np.array([1.0, 0.0]) if rng.random() < 0.5 else rng.dirichlet([1, 1])
            lim = sequence_limit(shrinking_towards(rng, d))
            u = embed(lim).matrix()[0, 1]
            x = Magnitude.of(u / (1 - u)) if u < 1 else INF
            assert lim == DenseRpf.from_entries([[1, x], [x.inverse(), 1]])
