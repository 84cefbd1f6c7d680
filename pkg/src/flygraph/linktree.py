"""Lazy parent-link tree, sampled one adjacency query at a time.

The random object is a tree on nodes 1..n: node 1 links to itself with a
direct flag, and every node j >= 2 links to an independent uniform node of
[1, j-1] and carries an independent unbiased flag (direct or copy).  Chasing
copy flags turns the link tree into a preferential-attachment graph; reading
links alone gives a random recursive tree.  This module handles the links,
committing exactly as much of the random object as each answer pins down, so
that the joint law of all answers equals sampling the whole tree up front.

Two query families are exposed:

* ``parent(j)`` reveals j's link and flag.
* ``next_child(j)`` reveals j's children in increasing order, one call at a
  time, ending with the sentinel n+1.

Every node keeps a front: the largest child answer returned for it so far.
Territory at or below a front is settled and never re-randomized, which is
what keeps interleaved and repeated queries mutually consistent.  One scan
step samples where the region between the current front and the next known
child ends, in a single draw over candidate positions (skip-set members, see
:mod:`flygraph.ranks`, are stepped over; positions already linked elsewhere
are rejected and the scan resumes above them).
"""

from __future__ import annotations

import math

from .errors import InternalConsistencyError
from .randomness import BitSource, COPY, DIRECT
from .ranks import CandidateIndex
from .sparse import ChildSets, LazyMap


def sample_candidate_rank(source: BitSource, open_count: int, t: int,
                          lattice_bits: int = 48) -> int:
    """Pick which of ``t`` slots ends one scan step, exactly.

    Slot y < t-1 stops the scan at the y-th open candidate of the region;
    slot t-1 runs it off the end.  The cumulative law is

        C(0) = 0,   C(y) = y / (open_count + y - 1),   C(t) = 1,

    and the answer is the y with C(y) <= H < C(y+1) for a uniform real H,
    realized lazily: draw ``lattice_bits`` bits for a dyadic interval around
    H and refine with further bits only while the interval straddles a cell
    boundary.  All comparisons are integer cross-multiplications, so the
    output law is exact for every parameter choice.
    """
    if open_count < 1:
        raise ValueError("open candidate count must be positive")
    if t < 1:
        raise ValueError("slot count must be positive")
    if t == 1 or open_count == 1:
        return 0
    k = lattice_bits
    num = source.bits(k)
    width = k
    while True:
        lo, hi = 0, t - 1
        while lo < hi:
            mid = (lo + hi + 1) >> 1
            if (mid << width) <= num * (open_count + mid - 1):
                lo = mid
            else:
                hi = mid - 1
        if lo == t - 1:
            return lo
        if (num + 1) * (open_count + lo) <= (lo + 1) << width:
            return lo
        num = (num << k) | source.bits(k)
        width += k


class LinkTree:
    """On-demand sampler of the parent-link tree on nodes 1..n."""

    __slots__ = (
        "n", "source", "lattice_bits", "index", "children",
        "links", "flags", "fronts", "front_owner",
        "scan_loop_total", "scan_loop_max",
        "typed_inner_total", "typed_queries",
        "_depth", "max_recursion_depth",
    )

    def __init__(self, n: int, seed: int = 0, lattice_exponent: float = 3.0,
                 source: BitSource | None = None):
        if n < 1:
            raise ValueError("n must be positive")
        if lattice_exponent <= 1:
            raise ValueError("lattice exponent must exceed 1")
        self.n = n
        self.source = source if source is not None else BitSource(seed)
        self.lattice_bits = max(4, math.ceil(lattice_exponent * math.log2(max(n, 2))))
        self.index = CandidateIndex(n)
        self.children = ChildSets(n)
        self.links = LazyMap(n, "link")
        self.flags = LazyMap(n, "flag")
        self.fronts = LazyMap(n, "front")
        self.front_owner = LazyMap(n, "front-owner")
        self.scan_loop_total = 0
        self.scan_loop_max = 0
        self.typed_inner_total = 0
        self.typed_queries = 0
        self._depth = 0
        self.max_recursion_depth = 0

    # -- basic queries -------------------------------------------------------

    def parent(self, j: int) -> tuple[int, int]:
        """Link and flag of j, drawing them if still open.

        The draw is uniform over the nodes that can still be j's parent:
        those below j whose front has not passed j.  Marginally, over the
        whole run, that is uniform on [1, j-1].  Rejection sampling keeps the
        draw exact; the open-parent pool is never empty while j's link is
        undecided, so it terminates with probability one.
        """
        if not 1 <= j <= self.n:
            raise ValueError(f"node {j} outside [1, {self.n}]")
        if j == 1:
            return 1, DIRECT
        link = self.links.raw.get(j)
        if link is not None:
            return link, self.flags.raw[j]
        get_front = self.fronts.raw.get
        uniform = self.source.uniform_int
        attempts = 0
        while True:
            cand = 1 + uniform(j - 1)
            f = get_front(cand)
            if f is None or f < j:
                break
            attempts += 1
            if attempts == 64 and self.index.open_parent_count(j) == 0:
                raise InternalConsistencyError(f"no open parent left for {j}")
        flag = self.source.uniform_flag()
        self.links.set(j, cand)
        self.flags.set(j, flag)
        self.children.insert(cand, j)
        return cand, flag

    def next_child(self, j: int) -> int:
        """Least undiscovered child of j; n+1 once none remain.

        Commits the scan: front(j) advances to the answer in every return
        path, so the stretch below it is settled for good.  Fresh fronts get
        a front of their own through recursion, keeping the counting
        identities of the candidate index valid.
        """
        self.parent(j)
        n = self.n
        front = self.fronts.raw.get(j)
        if front is not None and front >= n:
            if front == n:
                self._advance_front(j, front, n + 1)
            return n + 1
        base = j if front is None else front
        a = base + 1
        b = self.children.successor(j, base)
        index = self.index
        links = self.links.raw
        iters = 0
        while True:
            iters += 1
            s = index.unskipped_count(a, b)
            if s == 0:
                h = 0
            else:
                h = sample_candidate_rank(self.source, index.open_parent_count(a),
                                          s + 1, self.lattice_bits)
            if h == s:
                self._note_scan(iters)
                self._advance_front(j, front, b)
                return b
            x = index.unskipped_after(a, h)
            if x not in links:
                self._note_scan(iters)
                links[x] = j
                self.flags.raw[x] = self.source.uniform_flag()
                self.children.insert(j, x)
                self._advance_front(j, front, x)
                return x
            a = x + 1

    def next_child_from(self, j: int, k: int) -> int:
        """Least child of j strictly above k, without re-randomizing below.

        Picks known children straight out of the child set while they sit at
        or below the front; otherwise defers to one fresh scan.  Callers must
        not probe ahead of committed territory: k <= front(j) when the front
        exists, k == j before the first scan.
        """
        if not 1 <= j <= self.n:
            raise ValueError(f"node {j} outside [1, {self.n}]")
        if not j <= k <= self.n + 1:
            raise ValueError(f"probe {k} outside [{j}, {self.n + 1}]")
        if k >= self.n:
            return self.n + 1
        front = self.fronts.raw.get(j)
        assert k <= front if front is not None else k == j, \
            "probe ahead of the committed front"
        q = self.children.successor(j, k)
        if front is not None and q <= front:
            return q
        return self.next_child(j)

    def next_child_typed(self, j: int, k: int, flag: int) -> int:
        """Least child of j above k whose flag matches, or n+1."""
        self.typed_queries += 1
        x = k
        while True:
            self.typed_inner_total += 1
            x = self.next_child_from(j, x)
            if x > self.n or self.flags.get(x) == flag:
                return x

    # -- recursive-tree facade -------------------------------------------------

    def rrt_parent(self, j: int) -> int:
        """Parent link of j in the random recursive tree (flag dropped)."""
        return self.parent(j)[0]

    def rrt_next_child(self, j: int, k: int) -> int:
        """Children of j in the random recursive tree, flags ignored."""
        return self.next_child_from(j, k)

    # -- internals ----------------------------------------------------------

    def _note_scan(self, iters: int) -> None:
        self.scan_loop_total += iters
        if iters > self.scan_loop_max:
            self.scan_loop_max = iters

    def _advance_front(self, j: int, old, new: int) -> None:
        """Move front(j) to ``new`` and keep every dependent structure in step.

        Fixed order: front map, owner links, candidate index, then the
        recursion that gives an unfronted target its first front.
        """
        n = self.n
        fronts = self.fronts.raw
        owners = self.front_owner.raw
        fronts[j] = new
        has_owner = j in owners
        if old is not None and old <= n:
            released = owners.pop(old, None)
            if released != j:
                raise InternalConsistencyError(
                    f"front target {old} owned by {released}, moved by {j}")
        if new <= n:
            if new in owners:
                raise InternalConsistencyError(f"front target {new} already owned")
            owners[new] = j
        self.index.on_front_advance(j, old, new, has_owner)
        if new <= n and new not in fronts:
            self._depth += 1
            if self._depth > self.max_recursion_depth:
                self.max_recursion_depth = self._depth
            self.next_child(new)
            self._depth -= 1

    # -- resource accounting ---------------------------------------------------

    def stored_cells(self) -> int:
        return (len(self.links) + len(self.flags) + len(self.fronts)
                + len(self.front_owner) + self.children.total_cells()
                + self.index.total_cells())


class NaiveLinkTree:
    """Reference twin with the same query semantics, by linear scan.

    Keeps only links, flags, and fronts; every probability is recomputed by
    brute force over them, one coin per undecided position.  Quadratic per
    query and meant purely as a distribution oracle for small n.
    """

    def __init__(self, n: int, seed: int = 0, source: BitSource | None = None):
        if n < 1:
            raise ValueError("n must be positive")
        self.n = n
        self.source = source if source is not None else BitSource(seed)
        self.links = {}
        self.flags = {}
        self.fronts = {}

    def open_parent_count(self, x: int) -> int:
        count = 0
        fronts = self.fronts
        for i in range(1, x):
            f = fronts.get(i)
            if f is None or f < x:
                count += 1
        return count

    def parent(self, j: int) -> tuple[int, int]:
        if not 1 <= j <= self.n:
            raise ValueError(f"node {j} outside [1, {self.n}]")
        if j == 1:
            return 1, DIRECT
        link = self.links.get(j)
        if link is not None:
            return link, self.flags[j]
        fronts = self.fronts
        pool = [i for i in range(1, j)
                if fronts.get(i) is None or fronts[i] < j]
        link = pool[self.source.uniform_int(len(pool))]
        flag = self.source.uniform_flag()
        self.links[j] = link
        self.flags[j] = flag
        return link, flag

    def next_child(self, j: int, k: int) -> int:
        """Least child of j above k: scan positions, one exact coin each."""
        if not 1 <= j <= self.n:
            raise ValueError(f"node {j} outside [1, {self.n}]")
        if not j <= k <= self.n + 1:
            raise ValueError(f"probe {k} outside [{j}, {self.n + 1}]")
        links = self.links
        start_front = self.fronts.get(j, 0)
        result = self.n + 1
        for x in range(k + 1, self.n + 1):
            px = links.get(x)
            if px == j:
                result = x
                break
            if px is None and x > start_front:
                if self.source.uniform_int(self.open_parent_count(x)) == 0:
                    links[x] = j
                    self.flags[x] = self.source.uniform_flag()
                    result = x
                    break
        if result > start_front:
            self.fronts[j] = result
        return result

    def next_child_typed(self, j: int, k: int, flag: int) -> int:
        x = k
        while True:
            x = self.next_child(j, x)
            if x > self.n or self.flags[x] == flag:
                return x


class RRTGenerator:
    """Neighbor-stream adapter for random recursive trees.

    ``next_neighbor(j)`` answers j's parent first, then j's children in
    increasing order, then n+1 forever.  Flags are drawn underneath but never
    consulted, so the produced tree is exactly the plain link tree.
    """

    def __init__(self, n: int, seed: int = 0, lattice_exponent: float = 3.0):
        self.tree = LinkTree(n, seed, lattice_exponent)
        self.n = n
        self._cursor = {}

    def parent(self, j: int) -> int:
        return self.tree.rrt_parent(j)

    def next_child(self, j: int, k: int) -> int:
        return self.tree.rrt_next_child(j, k)

    def next_neighbor(self, j: int) -> int:
        if not 1 <= j <= self.n:
            raise ValueError(f"node {j} outside [1, {self.n}]")
        cur = self._cursor.get(j)
        if cur is None:
            self._cursor[j] = j
            return self.tree.rrt_parent(j)
        if cur > self.n:
            return self.n + 1
        r = self.tree.rrt_next_child(j, cur)
        self._cursor[j] = r
        return r

    @property
    def bits_consumed(self) -> int:
        return self.tree.source.bits_consumed

    def stored_cells(self) -> int:
        return self.tree.stored_cells() + len(self._cursor)
