"""Lazily allocated per-node state.

Nothing in this module allocates storage proportional to n up front; maps and
child sets grow only with the keys actually written.  That is what keeps a
handful of queries on a million-node instance cheap.
"""

from __future__ import annotations

from bisect import bisect_right

from .errors import InternalConsistencyError


class LazyMap:
    """Mapping on the key domain [1, n+1] that stores only written keys.

    >>> m = LazyMap(10, "demo")
    >>> m.get(3) is None
    True
    >>> m.set(3, 7); m.get(3)
    7
    >>> len(m)
    1
    """

    __slots__ = ("n", "name", "_d")

    def __init__(self, n: int, name: str = "map"):
        self.n = n
        self.name = name
        self._d = {}

    def _check(self, key: int) -> None:
        if not 1 <= key <= self.n + 1:
            raise ValueError(f"{self.name}: key {key} outside [1, {self.n + 1}]")

    def get(self, key: int):
        self._check(key)
        return self._d.get(key)

    def set(self, key: int, value) -> None:
        self._check(key)
        self._d[key] = value

    def pop(self, key: int):
        """Remove and return the stored value; the key must be present."""
        self._check(key)
        if key not in self._d:
            raise InternalConsistencyError(f"{self.name}: pop of unwritten key {key}")
        return self._d.pop(key)

    @property
    def raw(self) -> dict:
        """The backing dict, for hot paths that guarantee keys by construction."""
        return self._d

    def __contains__(self, key: int) -> bool:
        self._check(key)
        return key in self._d

    def __len__(self) -> int:
        return len(self._d)

    def items(self):
        return self._d.items()


class ChildSets:
    """Per-node ordered sets of discovered children.

    Each set is created on first touch and always carries the sentinel n+1 so
    successor queries are total.  Sets are plain sorted lists: link-tree
    in-degrees are logarithmic with high probability, so insertion by bisect
    stays cheap even on huge instances.
    """

    __slots__ = ("n", "_sets")

    def __init__(self, n: int):
        self.n = n
        self._sets = {}

    def _ensure(self, j: int) -> list:
        if not 1 <= j <= self.n:
            raise ValueError(f"child-set owner {j} outside [1, {self.n}]")
        s = self._sets.get(j)
        if s is None:
            s = [self.n + 1]
            self._sets[j] = s
        return s

    def insert(self, j: int, i: int) -> None:
        """Record i as a child of j.  A duplicate insert signals a sampler bug."""
        if not j < i <= self.n:
            raise ValueError(f"child {i} of {j} outside ({j}, {self.n}]")
        s = self._ensure(j)
        pos = bisect_right(s, i)
        if pos and s[pos - 1] == i:
            raise InternalConsistencyError(f"child {i} of {j} inserted twice")
        s.insert(pos, i)

    def successor(self, j: int, k: int) -> int:
        """Least recorded child of j strictly greater than k (possibly the sentinel).

        >>> cs = ChildSets(9)
        >>> cs.successor(2, 2)
        10
        >>> cs.insert(2, 5); cs.successor(2, 2), cs.successor(2, 5)
        (5, 10)
        """
        if not j <= k <= self.n:
            raise ValueError(f"successor probe {k} outside [{j}, {self.n}]")
        s = self._ensure(j)
        return s[bisect_right(s, k)]

    def members(self, j: int) -> tuple:
        """Children recorded for j so far, without the sentinel."""
        s = self._sets.get(j)
        return tuple(s[:-1]) if s else ()

    def touched(self) -> tuple:
        return tuple(self._sets.keys())

    def total_cells(self) -> int:
        return sum(len(s) for s in self._sets.values())
