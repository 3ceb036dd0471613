"""Labelled trees, endofunctions, and the bijection between them.

A tree on {0..n-1} with an ordered pair of marked vertices corresponds
to an endofunction of {0..n-1}: the unique path between the marks
becomes the cycle part (the increasing enumeration of the path's vertex
set is sent to the path order), and every off-path vertex points one
step toward the path.  Inverting reads the cycle part off the periodic
points.  Counting both sides gives the n^(n-2) tree count.

The functions whose iterates collapse to a single fixed point are
exactly the images of pairs with both marks equal, n^(n-1) of them.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from itertools import product

from .errors import InvalidVertex, SchemaError


@dataclass(frozen=True)
class Tree:
    """Tree on vertices 0..n-1; edges stored sorted for canonical form."""

    n: int
    edges: tuple[tuple[int, int], ...]

    def __post_init__(self) -> None:
        if self.n < 1:
            raise SchemaError(f"a tree needs at least one vertex, got n={self.n}")
        norm = []
        for e in self.edges:
            a, b = e
            if not (0 <= a < self.n and 0 <= b < self.n):
                raise InvalidVertex(f"edge {e} leaves 0..{self.n - 1}")
            if a == b:
                raise SchemaError(f"self-loop at vertex {a}")
            norm.append((min(a, b), max(a, b)))
        norm.sort()
        if len(set(norm)) != len(norm):
            raise SchemaError("duplicate edges")
        object.__setattr__(self, "edges", tuple(norm))
        if len(norm) != self.n - 1:
            raise SchemaError(f"expected {self.n - 1} edges, got {len(norm)}")
        seen = {0}
        queue = deque([0])
        adj = self.adjacency()
        while queue:
            x = queue.popleft()
            for y in adj[x]:
                if y not in seen:
                    seen.add(y)
                    queue.append(y)
        if len(seen) != self.n:
            raise SchemaError("edges do not connect all vertices")

    def adjacency(self) -> list[list[int]]:
        adj: list[list[int]] = [[] for _ in range(self.n)]
        for a, b in self.edges:
            adj[a].append(b)
            adj[b].append(a)
        return adj

    def to_json(self) -> dict:
        return {"n": self.n, "edges": [list(e) for e in self.edges]}

    @classmethod
    def from_json(cls, obj: object) -> "Tree":
        if not isinstance(obj, dict):
            raise SchemaError(f"tree payload must be an object: {obj!r}")
        try:
            n = int(obj["n"])
            edges = tuple((int(a), int(b)) for a, b in obj["edges"])
        except (KeyError, TypeError, ValueError) as exc:
            raise SchemaError(f"bad tree payload: {exc}") from exc
        return cls(n, edges)


@dataclass(frozen=True)
class EndoFunction:
    """Function {0..n-1} -> {0..n-1}, as its value table."""

    n: int
    table: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.n < 1:
            raise SchemaError(f"need at least one vertex, got n={self.n}")
        object.__setattr__(self, "table", tuple(int(x) for x in self.table))
        if len(self.table) != self.n:
            raise SchemaError(f"table has {len(self.table)} entries, expected {self.n}")
        for x in self.table:
            if not 0 <= x < self.n:
                raise InvalidVertex(f"value {x} leaves 0..{self.n - 1}")

    def __call__(self, x: int) -> int:
        return self.table[x]

    def to_json(self) -> dict:
        return {"n": self.n, "table": list(self.table)}

    @classmethod
    def from_json(cls, obj: object) -> "EndoFunction":
        if not isinstance(obj, dict):
            raise SchemaError(f"endofunction payload must be an object: {obj!r}")
        try:
            n = int(obj["n"])
            table = tuple(int(x) for x in obj["table"])
        except (KeyError, TypeError, ValueError) as exc:
            raise SchemaError(f"bad endofunction payload: {exc}") from exc
        return cls(n, table)


def _iterate_table(f: EndoFunction) -> tuple[int, ...]:
    """Value table of the n-th iterate of f."""
    cur = tuple(range(f.n))
    for _ in range(f.n):
        cur = tuple(f.table[x] for x in cur)
    return cur


def is_eventually_constant(f: EndoFunction) -> bool:
    """Whether every orbit of f lands on one common fixed point."""
    stable = _iterate_table(f)
    c = stable[0]
    return all(x == c for x in stable) and f.table[c] == c


def periodic_points(f: EndoFunction) -> tuple[int, ...]:
    """The vertices lying on cycles of f, ascending."""
    return tuple(sorted(set(_iterate_table(f))))


def joyal_forward(tree: Tree, v: int, v2: int) -> EndoFunction:
    """Endofunction of the tree with marked vertices (v, v2)."""
    n = tree.n
    for x in (v, v2):
        if not 0 <= x < n:
            raise InvalidVertex(f"marked vertex {x} leaves 0..{n - 1}")
    adj = tree.adjacency()
    parent = [-1] * n
    seen = [False] * n
    seen[v] = True
    queue = deque([v])
    while queue:
        x = queue.popleft()
        for y in adj[x]:
            if not seen[y]:
                seen[y] = True
                parent[y] = x
                queue.append(y)
    path = [v2]
    while path[-1] != v:
        path.append(parent[path[-1]])
    path.reverse()
    table = [-1] * n
    on_path = sorted(path)
    for a, b in zip(on_path, path):
        table[a] = b
    # off-path vertices: one step toward the path
    in_path = set(path)
    queue = deque(path)
    toward = [False] * n
    for x in path:
        toward[x] = True
    while queue:
        x = queue.popleft()
        for y in adj[x]:
            if not toward[y]:
                toward[y] = True
                table[y] = x
                queue.append(y)
    return EndoFunction(n, tuple(table))


def joyal_inverse(f: EndoFunction) -> tuple[Tree, int, int]:
    """Tree and marked vertices recovering f under :func:`joyal_forward`."""
    n = f.n
    periodic = periodic_points(f)
    path = [f.table[a] for a in periodic]
    v, v2 = path[0], path[-1]
    edges = [(path[i], path[i + 1]) for i in range(len(path) - 1)]
    on_cycle = set(periodic)
    for x in range(n):
        if x not in on_cycle:
            edges.append((x, f.table[x]))
    return Tree(n, tuple(edges)), v, v2


def all_endofunctions(n: int):
    """All n^n endofunctions, in lexicographic table order."""
    if n < 1:
        raise SchemaError(f"need at least one vertex, got n={n}")
    for table in product(range(n), repeat=n):
        yield EndoFunction(n, table)


def count_trees(n: int) -> int:
    """Number of trees on n labelled vertices, by construction: distinct
    trees reached by joyal_inverse over all endofunctions."""
    return len({joyal_inverse(f)[0] for f in all_endofunctions(n)})


def count_eventually_constant(n: int) -> int:
    """Number of endofunctions of {0..n-1} collapsing to a fixed point,
    by predicate scan."""
    return sum(1 for f in all_endofunctions(n) if is_eventually_constant(f))
