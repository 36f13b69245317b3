import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from posetdim import (
    derive_levels,
    is_isomorphic,
    lower_bound_family,
    new_multipartite,
    new_poset,
    random_multipartite,
    random_poset,
    stacked_standard,
    standard_example,
)
from posetdim.constructions import complete_minus_matching, diagonal
from posetdim.errors import (
    BackwardRelation,
    EmptyPart,
    IndexOutOfRange,
    IntraPartRelation,
    NotStrictlyOrdered,
    PartsOverlap,
    SingleLevel,
    TooFewParts,
)
from posetdim.multipartite import relation_owner


def test_valid_two_partite():
    s2 = standard_example(2)
    mp = new_multipartite([["a_1", "a_2"], ["b_1", "b_2"]], s2.poset.relations())
    assert mp.m == 2 and mp.poset == s2.poset


@pytest.mark.parametrize("parts, rel, err", [
    ([["a"], ["b"]], [("b", "a")], BackwardRelation),
    ([["a", "b"], ["c"]], [("a", "b")], IntraPartRelation),
    ([["a"], ["a", "b"]], [], PartsOverlap),
    ([["a"], []], [], EmptyPart),
    ([["a", "b"]], [], TooFewParts),
])
def test_validation(parts, rel, err):
    with pytest.raises(err):
        new_multipartite(parts, rel)


def test_isolated_middle_part_is_accepted():
    mp = new_multipartite([["a"], ["z"], ["b"]], [("a", "b")])
    assert mp.m == 3


def test_bipartite_subposet_stacked():
    st3 = stacked_standard(3)
    ab = st3.bipartite_subposet(1, 3)
    assert ab.poset == standard_example(3).poset
    assert ab.lower == st3.parts[0] and ab.upper == st3.parts[2]


def test_bipartite_subposet_errors():
    st3 = stacked_standard(3)
    with pytest.raises(NotStrictlyOrdered):
        st3.bipartite_subposet(2, 2)
    with pytest.raises(IndexOutOfRange):
        st3.bipartite_subposet(1, 4)


def test_bipartite_subposet_lower_bound_family():
    lb = lower_bound_family(2, 2, 2)
    target = complete_minus_matching(8, 8, diagonal(4)).poset
    for p in (1, 2):
        for q in (3, 4):
            assert is_isomorphic(lb.bipartite_subposet(p, q).poset, target)


def test_underlying_sizes():
    assert len(standard_example(2).underlying()) == 4
    assert len(stacked_standard(3).underlying()) == 12
    assert len(lower_bound_family(2, 2, 2).underlying()) == 32


def test_derive_levels():
    chain = new_poset("abc", [("a", "b"), ("b", "c")])
    assert derive_levels(chain).parts == (("a",), ("b",), ("c",))
    st3 = stacked_standard(3)
    assert derive_levels(st3.poset).parts == st3.parts
    with pytest.raises(SingleLevel):
        derive_levels(new_poset("ab"))


@settings(max_examples=50, deadline=None)
@given(st.integers(0, 10_000), st.integers(2, 9), st.floats(0.05, 0.9))
def test_derive_levels_always_valid(seed, n, density):
    p = random_poset(n, density, seed)
    if not p.relations():
        return
    mp = derive_levels(p)
    new_multipartite(mp.parts, p.relations())


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 10_000), st.lists(st.integers(1, 4), min_size=2, max_size=5))
def test_relations_owned_by_one_pair(seed, sizes):
    mp = random_multipartite(sizes, 0.5, seed)
    owner = relation_owner(mp)
    seen = {}
    for i, j in mp.part_pairs():
        sub = mp.bipartite_subposet(i, j)
        assert sub.poset == mp.poset.induced_subposet(mp.parts[i - 1] + mp.parts[j - 1])
        for r in sub.poset.relations():
            seen.setdefault(r, []).append((i, j))
    assert set(seen) == set(mp.poset.relations())
    assert all(len(v) == 1 and v[0] == owner[r] for r, v in seen.items())
