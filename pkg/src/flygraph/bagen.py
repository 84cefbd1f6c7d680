"""Preferential-attachment adjacency, one neighbor per call.

Built on the lazy link tree: chasing copy flags upward turns node j's link
into the head of the j-th attachment edge, so the graph obtained is exactly
linear preferential attachment with one edge per arriving node (node 1 gets
a self-loop).  ``next_neighbor(j)`` answers j's attachment target first and
then the nodes that attached to j, in increasing order, ending with n+1
repeated forever.

A node's attachment children split into streams the link tree can enumerate
directly: its own direct-flagged children, plus, for every attachment child
already discovered, that child's copy-flagged children (copying a node's
edge lands on the same head).  The streams are strictly increasing and
pairwise disjoint, so a binary heap merges them without duplicates; each
emitted child opens its own copy stream.  Node 1 additionally owns its
copy-flagged children outright, because copying the self-loop stays at 1.
"""

from __future__ import annotations

import heapq

from .linktree import LinkTree
from .randomness import COPY, DIRECT


class BAGenerator:
    """Neighbor-stream sampler for preferential attachment on n nodes."""

    def __init__(self, n: int, seed: int = 0, lattice_exponent: float = 3.0):
        self.tree = LinkTree(n, seed, lattice_exponent)
        self.n = n
        self._heaps = {}

    def ba_parent(self, j: int) -> int:
        """Head of j's attachment edge: follow copy flags until a direct link."""
        if not 1 <= j <= self.n:
            raise ValueError(f"node {j} outside [1, {self.n}]")
        node, flag = self.tree.parent(j)
        while flag == COPY:
            node, flag = self.tree.parent(node)
        return node

    def next_neighbor(self, j: int) -> int:
        """Next neighbor of j: attachment target first, then children, then n+1."""
        if not 1 <= j <= self.n:
            raise ValueError(f"node {j} outside [1, {self.n}]")
        heap = self._heaps.get(j)
        if heap is None:
            heap = [self.n + 1]
            self._heaps[j] = heap
            target = self.ba_parent(j)
            heapq.heappush(heap, self.tree.next_child_typed(j, j, DIRECT))
            if j == 1:
                heapq.heappush(heap, self.tree.next_child_typed(1, 1, COPY))
            return target
        if heap[0] > self.n:
            return self.n + 1
        r = heapq.heappop(heap)
        if self.tree.flags.raw[r] == DIRECT:
            heapq.heappush(heap, self.tree.next_child_typed(j, r, DIRECT))
        else:
            q = self.tree.links.raw[r]
            heapq.heappush(heap, self.tree.next_child_typed(q, r, COPY))
        heapq.heappush(heap, self.tree.next_child_typed(r, r, COPY))
        return r

    @property
    def bits_consumed(self) -> int:
        return self.tree.source.bits_consumed

    def stored_cells(self) -> int:
        return (self.tree.stored_cells() + len(self._heaps)
                + sum(len(h) for h in self._heaps.values()))
