import numpy as np
import pytest

from oracles import all_events, closed_form_event, float_ratio, msum, reference_ratio
from relprob import catalog
from relprob.errors import IncomparableError, NotAnchoredError, RpfError
from relprob.events import absolute_event_prob, event_rel_prob, internal_anchor, to_absolute
from relprob.generate import random_rpf
from relprob.magnitude import INF, ONE, ZERO, Magnitude, matches
from relprob.rpf import DenseRpf, find_anchors, matched_by, validate


def table(p):
    return [[p[i, j] for j in range(p.k)] for i in range(p.k)]


class TestInternalAnchor:
    def test_examples(self):
        assert internal_anchor(catalog.uniform(4), {1, 3}) == 1
        assert internal_anchor(catalog.finite_geometric(3, 0), {1, 2}) == 1
        assert internal_anchor(catalog.uniform(4), {2}) == 2

    def test_errors(self):
        with pytest.raises(RpfError):
            internal_anchor(catalog.uniform(2), set())
        with pytest.raises(IncomparableError):
            internal_anchor(catalog.indeterminate(2), {0})


class TestEventRelProb:
    def test_examples(self):
        assert event_rel_prob(catalog.uniform(4), {0, 1}, {2}) == Magnitude.of(2)
        p = catalog.from_absolute([0.7, 0.2, 0.1])
        assert event_rel_prob(p, {1, 2}, {0}) == Magnitude.of(3 / 7)

    def test_empty_events(self, rng):
        for _ in range(20):
            p = random_rpf(rng, 4, "totally_comparable")
            assert event_rel_prob(p, set(), {int(rng.integers(4))}).is_zero
            assert event_rel_prob(p, {0, 3}, set()).is_inf
            one = event_rel_prob(p, set(), set())
            assert one.is_finite and one.log == 0.0

    def test_rejects_incomparable(self):
        with pytest.raises(IncomparableError):
            event_rel_prob(catalog.from_absolute([1, 0, 0]), {0}, {1})

    def test_rejects_out_of_range(self):
        with pytest.raises(RpfError):
            event_rel_prob(catalog.uniform(2), {2}, {0})

    def test_singletons_match_entries(self, rng):
        for _ in range(20):
            p = random_rpf(rng, 5, "totally_comparable")
            for i in range(5):
                for j in range(5):
                    assert event_rel_prob(p, {i}, {j}) == p[i, j]

    def test_reference_independence_and_closed_form(self, rng):
        for _ in range(15):
            k = int(rng.integers(1, 6))
            p = random_rpf(rng, k, "totally_comparable")
            t = table(p)
            events = all_events(k)
            for e1 in events:
                for e2 in events:
                    if not e1 and not e2:
                        continue
                    got = event_rel_prob(p, e1, e2)
                    assert not got.is_wildcard
                    assert got == closed_form_event(t, e1, e2)
                    resolved = 0
                    for r in range(k):
                        ref = reference_ratio(t, e1, e2, r)
                        if not ref.is_wildcard:
                            resolved += 1
                            assert ref == got
                        assert matches(got, ref)
                    assert resolved >= 1

    def test_event_level_axioms(self, rng):
        # the event function is itself an RPF over the 2^k events
        for _ in range(10):
            k = int(rng.integers(1, 5))
            p = random_rpf(rng, k, "totally_comparable")
            events = all_events(k)
            rows = [[event_rel_prob(p, a, b) for b in events] for a in events]
            assert validate(DenseRpf.from_entries(rows)) == []

    def test_additive_definition_is_inconsistent(self):
        # negative control: summing outcome-level terms gives P(empty, empty) = 0
        p = catalog.uniform(3)

        def additive(e1, e2):
            return msum(event_rel_prob(p, {h}, e2) for h in e1)

        assert additive(set(), set()) == ZERO
        assert additive(set(), set()) != ONE
        assert event_rel_prob(p, set(), set()) == ONE


class TestToAbsolute:
    def test_examples(self):
        np.testing.assert_allclose(to_absolute(catalog.uniform(4)), [0.25] * 4)
        np.testing.assert_allclose(to_absolute(catalog.finite_geometric(3, 2)), [1 / 7, 2 / 7, 4 / 7])
        np.testing.assert_array_equal(to_absolute(catalog.finite_geometric(3, 0)), [1, 0, 0])

    def test_errors(self):
        with pytest.raises(NotAnchoredError):
            to_absolute(catalog.indeterminate(2))
        with pytest.raises(NotAnchoredError):
            to_absolute(catalog.empty())

    @pytest.mark.parametrize("structure", ["tmp", "totally_comparable", "anchored"])
    def test_matched_by(self, rng, structure):
        for _ in range(40):
            p = random_rpf(rng, int(rng.integers(1, 8)), structure)
            d = to_absolute(p)
            assert abs(d.sum() - 1) <= 1e-9
            assert matched_by(p, catalog.from_absolute(d))

    def test_round_trip(self, rng):
        for _ in range(100):
            k = int(rng.integers(1, 7))
            d = rng.dirichlet(np.ones(k))
            if k > 1 and rng.random() < 0.5:
                d[rng.integers(k)] = 0
                d /= d.sum()
            np.testing.assert_allclose(to_absolute(catalog.from_absolute(d)), d, rtol=0, atol=1e-9)

    def test_two_zeros_anchored_not_comparable(self):
        p = catalog.from_absolute([0.6, 0.4, 0, 0])
        assert find_anchors(p) == {0, 1}
        np.testing.assert_allclose(to_absolute(p), [0.6, 0.4, 0, 0])


class TestAbsoluteEventProb:
    def test_examples(self):
        p = catalog.finite_geometric(3, 2)
        assert absolute_event_prob(p, range(3)) == pytest.approx(1)
        assert absolute_event_prob(p, set()) == 0
        assert absolute_event_prob(p, {1, 2}) == pytest.approx(6 / 7)

    def test_agrees_with_absolute_sums(self, rng):
        for _ in range(20):
            k = int(rng.integers(1, 6))
            p = random_rpf(rng, k, "totally_comparable")
            d = to_absolute(p)
            for e in all_events(k):
                got = absolute_event_prob(p, e)
                assert got == pytest.approx(sum(d[h] for h in e), abs=1e-9)
                assert event_rel_prob(p, e, range(k)) == float_ratio(sum(d[h] for h in e), 1.0)

    def test_empty_rpf(self):
        with pytest.raises(RpfError):
            absolute_event_prob(catalog.empty(), set())


def test_inf_for_certain_event():
    p = catalog.certain(3, 2)
    assert event_rel_prob(p, {2}, {0, 1}) == INF
