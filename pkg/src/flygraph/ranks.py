"""Order-statistic bookkeeping behind candidate enumeration.

Child scans need two counting queries answered in logarithmic time over a
state that stays sparse.  First, the open parent count of a position x: how
many nodes below x could still end up as x's parent, that is, nodes whose
scan front is unset or still below x.  Second, rank and select over the
positions a scan may stop at, which excludes the skip set: nodes that carry
a front of their own while nobody's front currently rests on them.

Both are maintained incrementally from a single entry point,
:meth:`CandidateIndex.on_front_advance`, called every time some node's front
moves.  Membership bookkeeping is subtle in one respect: owner links are
current-valued.  When a front moves past its old target, the old target
loses its owner and joins the skip set (its own front exists by then, the
scan machinery guarantees that before ever moving a front off a node).
"""

from __future__ import annotations

from sortedcontainers import SortedList, SortedSet

from .errors import InternalConsistencyError


class CandidateIndex:
    """Sparse counting structures over scan fronts.

    Storage grows with the number of fronted nodes, never with n.
    """

    __slots__ = ("n", "_fronted", "_front_values", "_skip")

    def __init__(self, n: int):
        if n < 1:
            raise ValueError("n must be positive")
        self.n = n
        self._fronted = SortedSet()        # nodes whose front is set
        self._front_values = SortedList()  # multiset of current front values
        self._skip = SortedSet()           # fronted nodes with no current owner

    # -- counting queries --------------------------------------------------

    def open_parent_count(self, a: int) -> int:
        """Number of i < a with front(i) unset or front(i) < a.

        A front value of at least ``a`` held by a node below ``a`` blocks that
        node from parenting ``a``.  Because a front always exceeds the node
        carrying it, blocked(a) is the count of front values >= a minus the
        count of fronted nodes >= a.
        """
        if not 2 <= a <= self.n + 1:
            raise ValueError(f"position {a} outside [2, {self.n + 1}]")
        values = self._front_values
        beyond = len(values) - values.bisect_left(a)
        fronted = self._fronted
        fronted_high = len(fronted) - fronted.bisect_left(a)
        return (a - 1) - (beyond - fronted_high)

    def unskipped_count(self, a: int, b: int) -> int:
        """Size of [a, b) with skip-set members removed."""
        if a > b:
            raise ValueError(f"empty-range bounds reversed: [{a}, {b})")
        skip = self._skip
        return (b - a) - (skip.bisect_left(b) - skip.bisect_left(a))

    def unskipped_rank(self, a: int) -> int:
        """Number of positions in [1, a) outside the skip set."""
        if not 1 <= a <= self.n + 1:
            raise ValueError(f"position {a} outside [1, {self.n + 1}]")
        return (a - 1) - self._skip.bisect_left(a)

    def unskipped_select(self, s: int) -> int:
        """The (s+1)-th smallest position in [1, n+1] outside the skip set.

        The answer is the least fixpoint of c = s + 1 + |skip <= c|, reached
        by iterating upward from c = s + 1; each round accounts for the skip
        members the previous candidate jumped over, so the loop runs once
        plus once per skip member between the start and the answer.
        """
        skip = self._skip
        total = (self.n + 1) - len(skip)
        if not 0 <= s < total:
            raise IndexError(f"select rank {s} outside [0, {total})")
        bisect = skip.bisect_right
        c = s + 1
        while True:
            c2 = s + 1 + bisect(c)
            if c2 == c:
                return c
            c = c2

    def unskipped_after(self, a: int, h: int) -> int:
        """The (h+1)-th unskipped position at or after a."""
        if h < 0:
            raise IndexError("rank offset must be nonnegative")
        return self.unskipped_select(self.unskipped_rank(a) + h)

    # -- maintenance ---------------------------------------------------------

    def on_front_advance(self, i: int, old, new: int, has_owner: bool) -> None:
        """Record front(i) moving from ``old`` (possibly None) to ``new``.

        ``has_owner`` says whether something currently fronts to i; it is
        consulted only when i receives its first front.  Effects:

        * first front: i joins the fronted set, and the skip set unless owned;
        * any advance: the value multiset swaps old for new;
        * the old target (a real node) lost its owner and joins the skip set;
        * the new target (a real node) gained an owner and leaves it.
        """
        if new is None or (old is not None and new <= old):
            raise InternalConsistencyError(f"front of {i} may not move {old} -> {new}")
        if old is None:
            self._fronted.add(i)
            self._front_values.add(new)
            if not has_owner:
                self._skip.add(i)
        else:
            self._front_values.remove(old)
            self._front_values.add(new)
            if old <= self.n:
                self._skip.add(old)
        if new <= self.n:
            self._skip.discard(new)

    # -- introspection (tests, resource accounting) ---------------------------

    @property
    def fronted_nodes(self) -> tuple:
        return tuple(self._fronted)

    @property
    def front_values(self) -> tuple:
        return tuple(self._front_values)

    @property
    def skip_members(self) -> tuple:
        return tuple(self._skip)

    def in_skip_set(self, i: int) -> bool:
        return i in self._skip

    def total_cells(self) -> int:
        return len(self._fronted) + len(self._front_values) + len(self._skip)
