import random
from itertools import combinations

import pytest
from hypothesis import given, settings, strategies as st

from toric_arrangements.arrangements import (
    LazyComplex,
    SimplicialComplex,
    SubsetCollection,
    ValidationError,
    I_full,
    J_pairs,
    antichains,
    build_KI,
    is_downward_closed,
    minimalize,
    r_min,
)
from toric_arrangements.sampling import random_collection

from conftest import all_subsets, brute_KI


def faces(n, members):
    return build_KI(SubsetCollection.from_lists(n, members)).faces


def test_full_simplex_boundary():
    assert faces(3, [[0, 1, 2]]) == {(), (0,), (1,), (2,), (0, 1), (0, 2), (1, 2)}


def test_all_pairs_gives_vertices():
    assert faces(3, [[0, 1], [0, 2], [1, 2]]) == {(), (0,), (1,), (2,)}


def test_single_pair():
    expected = brute_KI(3, [[0, 1]])
    assert expected == {(), (0,), (1,), (2,), (0, 2), (1, 2)}
    assert faces(3, [[0, 1]]) == expected


@pytest.mark.parametrize("members", [[[0, 1], [0, 1]], [[0, 3]], [[0, -1]], [[1, 1]]])
def test_invalid_collections_rejected(members):
    with pytest.raises(ValidationError):
        SubsetCollection.from_lists(3, members)


def test_strict_mode_rejects_singletons_relaxed_accepts():
    with pytest.raises(ValidationError):
        SubsetCollection.from_lists(3, [[0]])
    I = SubsetCollection.from_lists(3, [[0]], strict=False)
    assert build_KI(I).faces == {(), (1,), (2,), (1, 2)}


def test_r_min_examples():
    assert r_min(I_full(4)) == 4
    assert r_min(J_pairs(5)) == 2
    assert r_min(SubsetCollection.from_lists(5, [[0, 1, 2], [1, 2, 3, 4]])) == 3
    with pytest.raises(ValidationError):
        r_min(SubsetCollection(3, ()))


def test_minimalize_examples():
    I = SubsetCollection.from_lists(3, [[0, 1], [0, 1, 2]])
    assert minimalize(I).members == ((0, 1),)
    J = SubsetCollection.from_lists(3, [[0, 1], [1, 2]])
    assert minimalize(J).members == J.members


def test_is_downward_closed_examples():
    assert is_downward_closed(SimplicialComplex.from_faces(2, [[], [0], [1], [0, 1]]))
    assert not is_downward_closed(SimplicialComplex.from_faces(2, [[], [0, 1]]))


def test_complex_requires_empty_face():
    with pytest.raises(ValidationError):
        SimplicialComplex.from_faces(2, [[0]])


def test_json_output_canonical():
    doc = build_KI(SubsetCollection.from_lists(3, [[0, 1], [0, 2], [1, 2]])).to_json()
    assert doc == {"n": 3, "faces": [[], [0], [1], [2]]}
    doc = build_KI(SubsetCollection.from_lists(3, [[0, 1]])).to_json()
    assert doc["faces"] == [[], [0], [0, 2], [1], [1, 2], [2]]


def test_random_collections_match_definition():
    rng = random.Random(7)
    for _ in range(300):
        I = random_collection(rng, n_max=7)
        K = build_KI(I)
        assert K.faces == brute_KI(I.n, I.members)
        assert is_downward_closed(K)
        assert tuple(range(I.n)) not in K.faces
        assert build_KI(minimalize(I)).faces == K.faces
        assert r_min(minimalize(I)) >= r_min(I)


def test_monotone_in_collection():
    rng = random.Random(8)
    for _ in range(200):
        I = random_collection(rng, n_min=3, n_max=6, max_members=4)
        pool = [c for r in range(2, I.n + 1) for c in combinations(range(I.n), r) if c not in I.members]
        if not pool:
            continue
        bigger = SubsetCollection(I.n, I.members + (rng.choice(pool),))
        assert build_KI(bigger).faces <= build_KI(I).faces


def test_lazy_mode_matches_explicit_and_scales():
    I = SubsetCollection.from_lists(6, [[0, 1, 2], [3, 4], [1, 5]])
    K = build_KI(I)
    L = build_KI(I, lazy=True)
    assert isinstance(L, LazyComplex)
    for s in all_subsets(6):
        assert (s in L) == (s in K)
    big = SubsetCollection.from_lists(40, [[0, 39], list(range(10, 30))])
    with pytest.raises(ValidationError):
        build_KI(big)
    Lb = build_KI(big, lazy=True)
    assert (0, 1, 38) in Lb
    assert (0, 5, 39) not in Lb


def test_antichain_enumeration_small():
    # antichains on [3] with members of size >= 2: any nonempty subfamily of the
    # three pairs (7), or the whole set alone (1)
    assert sum(1 for _ in antichains(3)) == 8


@settings(max_examples=60, deadline=None)
@given(st.integers(2, 6).flatmap(
    lambda n: st.tuples(
        st.just(n),
        st.lists(st.frozensets(st.integers(0, n - 1), min_size=2), min_size=1, max_size=5, unique=True),
    )
))
def test_membership_matches_definition(data):
    n, members = data
    I = SubsetCollection.from_lists(n, [sorted(m) for m in members])
    K = build_KI(I)
    for s in all_subsets(n):
        assert (s in K.faces) == all(not m <= set(s) for m in members)
