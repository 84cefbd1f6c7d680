"""Candidate index against a brute-force recomputing oracle."""

import random

import pytest

from flygraph import CandidateIndex, InternalConsistencyError


class FrontOracle:
    """Recomputes every index query from plain front and owner dicts."""

    def __init__(self, n):
        self.n = n
        self.fronts = {}
        self.owner = {}

    def advance(self, index, j, new):
        old = self.fronts.get(j)
        has_owner = j in self.owner
        if old is not None and old <= self.n:
            assert self.owner.pop(old) == j
        if new <= self.n:
            assert new not in self.owner
            self.owner[new] = j
        self.fronts[j] = new
        index.on_front_advance(j, old, new, has_owner)

    def open_parent_count(self, a):
        return sum(1 for i in range(1, a)
                   if self.fronts.get(i) is None or self.fronts[i] < a)

    def skip(self):
        return {i for i in self.fronts if i not in self.owner}

    def unskipped(self):
        s = self.skip()
        return [x for x in range(1, self.n + 2) if x not in s]

    def legal_moves(self, j=None):
        moves = []
        nodes = range(1, self.n + 1) if j is None else (j,)
        for i in nodes:
            low = max(i, self.fronts.get(i, 0))
            for new in range(low + 1, self.n + 2):
                if new > self.n or new not in self.owner:
                    moves.append((i, new))
        return moves

    def advance_cascading(self, index, j, new, rng):
        """Advance and restore the invariant that owned targets are fronted,
        the way the real sampler's recursion does."""
        self.advance(index, j, new)
        if new <= self.n and new not in self.fronts:
            self.advance_cascading(index, new, rng.choice(self.legal_moves(new))[1], rng)


def check_all_queries(index, oracle):
    n = oracle.n
    for a in range(2, n + 2):
        assert index.open_parent_count(a) == oracle.open_parent_count(a), a
    un = oracle.unskipped()
    for s in range(len(un)):
        assert index.unskipped_select(s) == un[s], s
    with pytest.raises(IndexError):
        index.unskipped_select(len(un))
    with pytest.raises(IndexError):
        index.unskipped_select(-1)
    for a in range(1, n + 2):
        rank = sum(1 for x in un if x < a)
        assert index.unskipped_rank(a) == rank, a
        tail = [x for x in un if x >= a]
        for h in range(len(tail)):
            assert index.unskipped_after(a, h) == tail[h], (a, h)
    for a in range(1, n + 2):
        for b in range(a, n + 2):
            assert index.unskipped_count(a, b) == sum(1 for x in un if a <= x < b)
    assert set(index.skip_members) == oracle.skip()
    assert set(index.fronted_nodes) == set(oracle.fronts)
    assert sorted(index.front_values) == sorted(oracle.fronts.values())


def test_fresh_index_counts():
    n = 9
    index = CandidateIndex(n)
    oracle = FrontOracle(n)
    check_all_queries(index, oracle)
    assert index.open_parent_count(5) == 4
    assert index.unskipped_select(0) == 1
    assert index.unskipped_after(3, 2) == 5


def test_worked_blocking_examples():
    index = CandidateIndex(9)
    oracle = FrontOracle(9)
    oracle.advance(index, 2, 7)
    assert index.open_parent_count(5) == 3
    check_all_queries(index, oracle)

    index = CandidateIndex(9)
    oracle = FrontOracle(9)
    oracle.advance(index, 2, 3)
    assert index.open_parent_count(5) == 4
    check_all_queries(index, oracle)


def test_skip_set_membership_tracks_owners():
    n = 9
    index = CandidateIndex(n)
    oracle = FrontOracle(n)
    oracle.advance(index, 3, 10)
    assert index.in_skip_set(3)
    oracle.advance(index, 1, 3)
    assert index.in_skip_set(1)
    assert not index.in_skip_set(3)
    oracle.advance(index, 1, 10)
    assert index.in_skip_set(3)
    check_all_queries(index, oracle)


def test_skip_neighbors_differ_by_membership():
    n = 9
    index = CandidateIndex(n)
    oracle = FrontOracle(n)
    oracle.advance(index, 3, 10)
    oracle.advance(index, 5, 10)
    assert oracle.skip() == {3, 5}
    assert index.unskipped_select(2) == 4
    assert index.unskipped_select(0) == 1
    assert index.unskipped_select(3) == 6
    check_all_queries(index, oracle)


def test_monotonicity_enforced():
    index = CandidateIndex(5)
    index.on_front_advance(2, None, 4, False)
    with pytest.raises(InternalConsistencyError):
        index.on_front_advance(2, 4, 4, False)
    with pytest.raises(InternalConsistencyError):
        index.on_front_advance(2, 4, 3, False)
    with pytest.raises(InternalConsistencyError):
        index.on_front_advance(3, None, None, False)


def test_open_parent_count_domain():
    index = CandidateIndex(5)
    with pytest.raises(ValueError):
        index.open_parent_count(1)
    with pytest.raises(ValueError):
        index.open_parent_count(7)


def test_consecutive_rank_gap_matches_skip_membership():
    n = 8
    index = CandidateIndex(n)
    oracle = FrontOracle(n)
    rng = random.Random(4)
    for _ in range(12):
        moves = oracle.legal_moves()
        if not moves:
            break
        j, new = rng.choice(moves)
        oracle.advance_cascading(index, j, new, rng)
    for x in range(1, n + 1):
        gap = index.unskipped_rank(x + 1) - index.unskipped_rank(x)
        assert gap == (0 if x in oracle.skip() else 1)


@pytest.mark.parametrize("n,seed,steps", [(6, 1, 40), (9, 2, 80), (13, 3, 160),
                                          (20, 4, 300), (7, 5, 60)])
def test_randomized_advance_sequences(n, seed, steps):
    rng = random.Random(seed)
    index = CandidateIndex(n)
    oracle = FrontOracle(n)
    check_all_queries(index, oracle)
    for _ in range(steps):
        moves = oracle.legal_moves()
        if not moves:
            break
        j, new = rng.choice(moves)
        oracle.advance_cascading(index, j, new, rng)
        check_all_queries(index, oracle)
