"""Finite simple graphs with dense integer vertices, sparsity counts and the pebble game.

Vertices are the indices 0..n-1; an edge is an unordered pair of distinct
indices.  Graphs are immutable: all "mutating" operations return new graphs.
Named vertices, if any, live in the I/O layer.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Optional


class Graph:
    """Immutable simple graph on vertices 0..n-1."""

    __slots__ = ("n", "_edges", "_adj")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()):
        if n < 0:
            raise ValueError("vertex count must be nonnegative")
        adj: list[set[int]] = [set() for _ in range(n)]
        normalized: set[tuple[int, int]] = set()
        for u, v in edges:
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u},{v}) out of range for n={n}")
            e = (u, v) if u < v else (v, u)
            if e in normalized:
                raise ValueError(f"duplicate edge {e}")
            normalized.add(e)
            adj[u].add(v)
            adj[v].add(u)
        self.n = n
        self._edges = frozenset(normalized)
        self._adj = tuple(frozenset(s) for s in adj)

    # -- queries ---------------------------------------------------------

    @property
    def m(self) -> int:
        return len(self._edges)

    @property
    def edges(self) -> tuple[tuple[int, int], ...]:
        """Edges as (u, v) with u < v, sorted lexicographically."""
        return tuple(sorted(self._edges))

    def has_edge(self, u: int, v: int) -> bool:
        return (min(u, v), max(u, v)) in self._edges

    def neighbors(self, v: int) -> frozenset[int]:
        return self._adj[v]

    def degree(self, v: int) -> int:
        return len(self._adj[v])

    def min_degree(self) -> int:
        return min((len(a) for a in self._adj), default=0)

    def max_degree(self) -> int:
        return max((len(a) for a in self._adj), default=0)

    def induced_count(self, vertices: Iterable[int]) -> int:
        """Number of edges with both endpoints in `vertices` (i(U))."""
        vs = set(vertices)
        return sum(1 for u, v in self._edges if u in vs and v in vs)

    def cross_count(self, us: Iterable[int], ws: Iterable[int]) -> int:
        """Number of edges between U\\W and W\\U (d(U, W))."""
        uonly = set(us)
        wonly = set(ws)
        uonly, wonly = uonly - wonly, wonly - uonly
        return sum(
            1
            for u, v in self._edges
            if (u in uonly and v in wonly) or (v in uonly and u in wonly)
        )

    def is_connected(self) -> bool:
        if self.n <= 1:
            return True
        seen = {0}
        stack = [0]
        while stack:
            u = stack.pop()
            for w in self._adj[u]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        return len(seen) == self.n

    # -- functional updates ----------------------------------------------

    def with_edge(self, u: int, v: int) -> "Graph":
        return Graph(self.n, list(self._edges) + [(u, v)])

    def with_vertex(self, nbrs: Iterable[int] = ()) -> "Graph":
        """Append vertex n adjacent to `nbrs`."""
        new = [(w, self.n) for w in nbrs]
        return Graph(self.n + 1, list(self._edges) + new)

    def without_edges_at(self, v: int) -> "Graph":
        """Same vertex set with v isolated."""
        return Graph(self.n, [e for e in self._edges if v not in e])

    def delete_vertex(self, v: int) -> "Graph":
        """Remove v; indices above v shift down by one."""
        if not (0 <= v < self.n):
            raise ValueError(f"vertex {v} out of range")

        def remap(u: int) -> int:
            return u - 1 if u > v else u

        kept = [(remap(a), remap(b)) for a, b in self._edges if v not in (a, b)]
        return Graph(self.n - 1, kept)

    # -- misc --------------------------------------------------------------

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, Graph)
            and self.n == other.n
            and self._edges == other._edges
        )

    def __hash__(self) -> int:
        return hash((self.n, self._edges))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"

    def to_json_dict(self) -> dict:
        return {"n": self.n, "edges": [list(e) for e in self.edges]}

    @classmethod
    def from_json_dict(cls, obj: dict) -> "Graph":
        try:
            n = int(obj["n"])
            edges = [(int(u), int(v)) for u, v in obj["edges"]]
        except (KeyError, TypeError, ValueError) as exc:
            raise ValueError(f"malformed graph object: {exc}") from exc
        return cls(n, edges)


# -- factories --------------------------------------------------------------


def complete_graph(n: int) -> Graph:
    return Graph(n, combinations(range(n), 2))


def wheel_graph(n: int) -> Graph:
    """Wheel on n >= 4 vertices: center 0 joined to the rim cycle 1..n-1."""
    if n < 4:
        raise ValueError("wheel needs at least 4 vertices")
    rim = [(i, i + 1) for i in range(1, n - 1)] + [(1, n - 1)]
    spokes = [(0, i) for i in range(1, n)]
    return Graph(n, rim + spokes)


def path_graph(n: int) -> Graph:
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


# -- sparsity counts ---------------------------------------------------------


@dataclass(frozen=True)
class SparsityParams:
    """(k, l) count with an integer edge multiplier.

    `edge_multiplier=2` encodes half-integer counts such as (5/2, 7/2):
    every edge is inserted twice into the integer (k, l) game.
    """

    k: int
    l: int
    edge_multiplier: int = 1

    def __post_init__(self) -> None:
        if self.k < 1:
            raise ValueError("k must be positive")
        if not 0 <= self.l < 2 * self.k:
            raise ValueError(f"(k,l)=({self.k},{self.l}) outside pebble-game range 0 <= l < 2k")
        if self.edge_multiplier not in (1, 2):
            raise ValueError("edge_multiplier must be 1 or 2")


def f_count(g: Graph, d: int) -> int:
    """The count f_d(G) = d|V| - |E|."""
    if d < 1:
        raise ValueError("d must be positive")
    return d * g.n - g.m


class _PebbleGame:
    """(k, l)-pebble game over a fixed vertex set.

    Every vertex starts with k pebbles.  Inserting an edge uv requires l+1
    pebbles gathered on {u, v}; one of them is consumed and the edge is
    oriented away from the vertex that paid.  Pebbles travel backwards along
    oriented paths (path reversal).  An edge multiset is (k, l)-sparse iff
    every insertion is accepted; acceptance is independent of the order of
    insertions and of the search choices.
    """

    def __init__(self, n: int, k: int, l: int):
        self.n = n
        self.k = k
        self.l = l
        self.pebbles = [k] * n
        self.out: list[list[int]] = [[] for _ in range(n)]

    def _free_pebble(self, root: int, hold: int) -> bool:
        """Move one pebble onto `root` if reachable, treating `hold` as off-limits."""
        parent: dict[int, Optional[int]] = {root: None, hold: None}
        stack = [root]
        found = -1
        while stack and found < 0:
            u = stack.pop()
            for w in self.out[u]:
                if w in parent:
                    continue
                parent[w] = u
                if self.pebbles[w] > 0:
                    found = w
                    break
                stack.append(w)
        if found < 0:
            return False
        w = found
        while True:
            u = parent[w]
            if u is None:
                break
            self.out[u].remove(w)
            self.out[w].append(u)
            w = u
        self.pebbles[found] -= 1
        self.pebbles[root] += 1
        return True

    def collect(self, u: int, v: int, need: int) -> bool:
        """Gather `need` pebbles on the pair {u, v}."""
        while self.pebbles[u] + self.pebbles[v] < need:
            if not (self._free_pebble(u, v) or self._free_pebble(v, u)):
                return False
        return True

    def insert(self, u: int, v: int) -> bool:
        if not self.collect(u, v, self.l + 1):
            return False
        if self.pebbles[u] > 0:
            self.pebbles[u] -= 1
            self.out[u].append(v)
        else:
            self.pebbles[v] -= 1
            self.out[v].append(u)
        return True

    def load(self, g: Graph, multiplier: int) -> bool:
        for u, v in g.edges:
            for _ in range(multiplier):
                if not self.insert(u, v):
                    return False
        return True


def is_sparse(g: Graph, params: SparsityParams) -> bool:
    """True iff every nonempty-edge subgraph H satisfies
    edge_multiplier*|E(H)| <= k*|V(H)| - l, decided by the pebble game."""
    game = _PebbleGame(g.n, params.k, params.l)
    return game.load(g, params.edge_multiplier)


def is_tight(g: Graph, d: int) -> bool:
    """(d,d)-sparse with f_d(G) = d."""
    return f_count(g, d) == d and is_sparse(g, SparsityParams(d, d))


def edge_addable(g: Graph, d: int, x: int, y: int) -> bool:
    """True iff xy is not an edge and g + xy is (d,d)-sparse.

    Equivalently: no critical set (i(U) = d|U| - d, |U| > 1) contains both
    x and y.  Decided by gathering d+1 pebbles on {x, y} after inserting
    all edges of g; the critical set is never materialized.
    """
    if x == y:
        raise ValueError("endpoints must be distinct")
    if g.has_edge(x, y):
        return False
    game = _PebbleGame(g.n, d, d)
    if not game.load(g, 1):
        return False
    return game.collect(x, y, d + 1)
