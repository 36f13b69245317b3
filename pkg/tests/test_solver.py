import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from posetdim import (
    LinearOrder,
    Realizer,
    complete_minus_matching,
    embed,
    exact_dimension,
    greedy_dimension_upper_bound,
    is_realizer,
    lemma4_realizer,
    new_poset,
    random_poset,
    standard_example,
    subset_poset,
)
from posetdim import _kernels
from posetdim.constructions import diagonal
from posetdim.errors import CapExceeded, DomainMismatch, EmptyPoset, NotARealizer
from posetdim.solver import (
    complete_consistent,
    conflict_matrix,
    consistent,
    dominance_matches,
    first_violation,
    requirements,
)

from .conftest import raw_random_dag
from .oracle import brute_dimension, brute_is_realizer


def R(*orders):
    return Realizer(tuple(LinearOrder(tuple(o)) for o in orders))


class TestIsRealizer:
    def test_chain(self, chain3):
        assert is_realizer(chain3, R("abc"))

    def test_antichain_single_order(self, antichain2):
        assert not is_realizer(antichain2, R("ab"))
        assert first_violation(antichain2, R("ab")) == ("not-reversed", "a", "b")

    def test_not_an_extension(self, chain3):
        assert first_violation(chain3, R("abc", "bac"))[0] == "not-extension"

    def test_domain_mismatch(self, chain3):
        with pytest.raises(DomainMismatch):
            is_realizer(chain3, R("ab"))

    def test_s3_lemma4_orders_against_pair_enumeration(self):
        s3 = standard_example(3)
        c = complete_minus_matching(3, 3, diagonal(3))
        r = lemma4_realizer(3, 3, diagonal(3))
        assert is_realizer(c.poset, r)
        assert brute_is_realizer(list(c.poset.elements), c.poset.relations(), [o.sequence for o in r])
        # S_3 and C_{-3}(3,3) differ only in names: a -> x, b -> y
        rename = {x: x.replace("x", "a").replace("y", "b") for x in c.poset.elements}
        assert is_realizer(s3.poset, R(*[[rename[x] for x in o] for o in r]))


class TestExactDimension:
    @pytest.mark.parametrize("n", [2, 3, 4])
    def test_standard_example(self, n):
        assert exact_dimension(standard_example(n)).dimension == n

    @pytest.mark.parametrize("length", [1, 2, 5, 9])
    def test_chain(self, length):
        ids = [f"c{i}" for i in range(length)]
        p = new_poset(ids, list(zip(ids, ids[1:])))
        res = exact_dimension(p)
        assert res.dimension == 1 and res.certificate.lower_bound_source == "chain"

    def test_complete_minus_two(self):
        assert exact_dimension(complete_minus_matching(3, 3, diagonal(2))).dimension == 2

    def test_subset_1_2_3_oracle(self):
        p = subset_poset(1, 2, 3).poset
        assert exact_dimension(p).dimension == brute_dimension(list(p.elements), p.relations()) == 3

    def test_subset_1_2_4_oracle(self):
        # 34560 linear extensions enumerated by the oracle
        p = subset_poset(1, 2, 4).poset
        assert exact_dimension(p).dimension == brute_dimension(list(p.elements), p.relations()) == 3

    def test_subset_1_3_4_oracle(self):
        p = subset_poset(1, 3, 4).poset
        assert exact_dimension(p).dimension == brute_dimension(list(p.elements), p.relations()) == 4

    def test_empty(self):
        with pytest.raises(EmptyPoset):
            exact_dimension(new_poset([]))

    def test_cap_exceeded_carries_certificate(self):
        with pytest.raises(CapExceeded) as info:
            exact_dimension(standard_example(4), max_d=3, use_clique=False)
        cert = info.value.certificate
        assert cert.refuted == [1, 2, 3] and cert.max_d_probed == 3

    def test_certificate_refutes_every_smaller_d(self):
        res = exact_dimension(standard_example(4), use_clique=False)
        assert res.certificate.refuted == [1, 2, 3]
        assert res.certificate.to_json()["dimension"] == 4

    def test_clique_certificate_is_a_real_conflict_clique(self):
        p = standard_example(4).poset
        res = exact_dimension(p)
        assert res.certificate.lower_bound_source == "clique"
        pairs = res.certificate.clique
        assert len(pairs) == 4
        for i, a in enumerate(pairs):
            for b in pairs[i + 1:]:
                assert not consistent(p, [a, b])

    def test_deterministic_witness(self):
        a = exact_dimension(subset_poset(1, 2, 4))
        b = exact_dimension(subset_poset(1, 2, 4))
        assert a.witness == b.witness

    def test_numpy_backend_agrees(self, monkeypatch):
        if not _kernels.USE_NUMBA:
            pytest.skip("already on the numpy path")
        results = [exact_dimension(random_poset(9, 0.3, s)).dimension for s in range(15)]
        for name in ("add_relation", "select", "toposort", "closure"):
            monkeypatch.setattr(_kernels, name, getattr(_kernels, f"{name}_numpy"))
        assert results == [exact_dimension(random_poset(9, 0.3, s)).dimension for s in range(15)]


@pytest.mark.parametrize("seed", range(60))
def test_oracle_equivalence_sample(seed):
    ids, rel = raw_random_dag(seed)
    p = new_poset(ids, rel)
    assert exact_dimension(p).dimension == brute_dimension(ids, rel)


@pytest.mark.parametrize("seed", range(40))
def test_critical_pairs_agree(seed):
    p = random_poset(8 + seed % 4, 0.25 + 0.01 * seed, seed)
    full = exact_dimension(p)
    crit = exact_dimension(p, pair_mode="critical")
    assert full.dimension == crit.dimension
    assert is_realizer(p, crit.witness)


def test_critical_pairs_are_fewer():
    p = subset_poset(1, 2, 4).poset
    assert len(requirements(p, "critical")[0]) < len(requirements(p)[0])


@pytest.mark.parametrize("seed", range(20))
def test_clique_bound_does_not_change_answer(seed):
    p = random_poset(9, 0.3, seed)
    assert exact_dimension(p).dimension == exact_dimension(p, use_clique=False).dimension


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 100_000), st.integers(1, 10), st.floats(0.0, 1.0))
def test_witness_is_realizer(seed, n, density):
    p = random_poset(n, density, seed)
    res = exact_dimension(p)
    assert is_realizer(p, res.witness)
    assert res.dimension == len(res.witness)
    assert list(res.witness.orders) == sorted(res.witness.orders, key=lambda o: o.sequence)


@settings(max_examples=25, deadline=None)
@given(st.integers(0, 100_000), st.integers(3, 9), st.data())
def test_monotone_under_induced_subposets(seed, n, data):
    p = random_poset(n, 0.35, seed)
    subset = data.draw(st.sets(st.sampled_from(p.elements), min_size=1))
    assert exact_dimension(p.induced_subposet(subset)).dimension <= exact_dimension(p).dimension


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 100_000), st.integers(2, 9), st.data())
def test_consistent_set_is_reversed_by_its_completion(seed, n, data):
    p = random_poset(n, 0.3, seed)
    xs, ys = requirements(p)
    if len(xs) == 0:
        return
    pick = data.draw(st.lists(st.integers(0, len(xs) - 1), unique=True, max_size=6))
    pairs = []
    for r in pick:
        cand = pairs + [(p.elements[xs[r]], p.elements[ys[r]])]
        if consistent(p, cand):
            pairs = cand
    order = complete_consistent(p, pairs)
    assert is_realizer(p, Realizer((order,))) or len(p.incomparable_pairs()) > 0
    pos = order.positions()
    assert all(pos[x] < pos[y] for x, y in pairs)


def test_conflict_matrix_symmetric():
    p = standard_example(3).poset
    xs, ys = requirements(p)
    c = conflict_matrix(p, xs, ys)
    assert np.array_equal(c, c.T)


class TestEmbed:
    def test_chain(self, chain3):
        assert embed(chain3, R("abc")) == {"a": (0,), "b": (1,), "c": (2,)}

    def test_antichain(self, antichain2):
        coords = embed(antichain2, R("ab", "ba"))
        assert coords == {"a": (0, 1), "b": (1, 0)}
        assert dominance_matches(antichain2, coords)

    def test_s2_all_pairs(self):
        s2 = standard_example(2).poset
        res = exact_dimension(s2)
        coords = embed(s2, res.witness)
        for x in s2.elements:
            for y in s2.elements:
                dom = all(u <= v for u, v in zip(coords[x], coords[y]))
                assert dom == s2.le(x, y)

    def test_not_a_realizer(self, antichain2):
        with pytest.raises(NotARealizer):
            embed(antichain2, R("ab"))


class TestGreedy:
    def test_chain(self, chain3):
        assert len(greedy_dimension_upper_bound(chain3)) == 1

    def test_antichain(self, antichain2):
        assert len(greedy_dimension_upper_bound(antichain2)) == 2

    def test_s3(self):
        r = greedy_dimension_upper_bound(standard_example(3))
        assert 3 <= len(r) <= 9 and is_realizer(standard_example(3).poset, r)

    @pytest.mark.parametrize("seed", range(20))
    def test_valid_upper_bound(self, seed):
        p = random_poset(12, 0.3, seed)
        r = greedy_dimension_upper_bound(p)
        assert is_realizer(p, r)
        assert len(r) >= exact_dimension(p).dimension

    def test_large_input(self):
        p = random_poset(80, 0.1, 1)
        assert is_realizer(p, greedy_dimension_upper_bound(p))
