"""
Disjoint-set forest over the integers 0..size-1.
"""

from typing import Dict, List


class UnionFind:
    """Union by rank with path compression."""

    __slots__ = ('parent', 'rank')

    def __init__(self, size: int):
        self.parent = list(range(size))
        self.rank = [0] * size

    def find(self, x: int) -> int:
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, x: int, y: int) -> bool:
        """Merge the classes of x and y; False when already merged."""
        x, y = self.find(x), self.find(y)
        if x == y:
            return False
        if self.rank[x] < self.rank[y]:
            x, y = y, x
        elif self.rank[x] == self.rank[y]:
            self.rank[x] += 1
        self.parent[y] = x
        return True

    def groups(self) -> List[List[int]]:
        """Classes as sorted lists, ordered by minimum element."""
        classes: Dict[int, List[int]] = {}
        for x in range(len(self.parent)):
            classes.setdefault(self.find(x), []).append(x)
        return sorted(classes.values(), key=lambda group: group[0])
