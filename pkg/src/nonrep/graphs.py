"""Graph data model, the planar/outerplanar family generators, simple-path
enumeration, and the brute-force non-repetitive coloring verifier that serves
as the global oracle for the rest of the toolkit.

Planarity of the generated families is guaranteed by construction (face-tracked
stacking, recursive gluing); no general planarity test is included.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .repetitions import Repetition


class SearchExhausted(Exception):
    """A guarded enumeration hit its budget before reaching a verdict."""


class Graph:
    """Undirected simple graph on vertices 0..n-1 with optional construction
    metadata (insertion log, face list, levels, distinguished main edge)."""

    def __init__(self, n: int = 0):
        self.n = n
        self.adj: list[set[int]] = [set() for _ in range(n)]
        self.construction_log: list[tuple[int, tuple[int, ...]]] | None = None
        self.faces: list[tuple[int, int, int]] | None = None
        self.main_edge: tuple[int, int] | None = None
        self.levels: list[int] | None = None
        self.family: str | None = None

    def add_vertex(self, neighbors=(), log: bool = False) -> int:
        v = self.n
        self.n += 1
        self.adj.append(set())
        for u in neighbors:
            self.add_edge(u, v)
        if log:
            if self.construction_log is None:
                self.construction_log = []
            self.construction_log.append((v, tuple(sorted(neighbors))))
        return v

    def add_edge(self, u: int, v: int) -> None:
        if u == v:
            raise ValueError("no self-loops")
        if not (0 <= u < self.n and 0 <= v < self.n):
            raise ValueError("vertex out of range")
        self.adj[u].add(v)
        self.adj[v].add(u)

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adj[u]

    def edges(self) -> list[tuple[int, int]]:
        return sorted((u, v) for u in range(self.n) for v in self.adj[u] if u < v)

    @property
    def edge_count(self) -> int:
        return sum(len(a) for a in self.adj) // 2

    def to_json_dict(self) -> dict:
        d: dict = {"n": self.n, "edges": [list(e) for e in self.edges()]}
        if self.construction_log is not None:
            d["construction"] = [[v, list(nb)] for v, nb in self.construction_log]
        if self.faces is not None:
            d["faces"] = [list(f) for f in self.faces]
        if self.main_edge is not None:
            d["main_edge"] = list(self.main_edge)
        if self.levels is not None:
            d["levels"] = list(self.levels)
        if self.family is not None:
            d["family"] = self.family
        return d

    @classmethod
    def from_json_dict(cls, d: dict) -> "Graph":
        g = cls(d["n"])
        for u, v in d["edges"]:
            g.add_edge(u, v)
        if "construction" in d:
            g.construction_log = [(v, tuple(nb)) for v, nb in d["construction"]]
        if "faces" in d:
            g.faces = [tuple(f) for f in d["faces"]]
        if "main_edge" in d:
            g.main_edge = tuple(d["main_edge"])
        if "levels" in d:
            g.levels = list(d["levels"])
        g.family = d.get("family")
        return g

    def __eq__(self, other):
        return isinstance(other, Graph) and self.to_json_dict() == other.to_json_dict()


@dataclass(frozen=True)
class Coloring:
    """A total vertex -> color-id assignment."""

    colors: tuple[int, ...]
    color_count: int

    def __post_init__(self):
        for c in self.colors:
            if not 0 <= c < self.color_count:
                raise ValueError(f"color {c} out of range")

    def to_json(self) -> list[int]:
        return list(self.colors)


def path_graph(n: int) -> Graph:
    """Path on n vertices, 0-1-...-(n-1)."""
    if n < 1:
        raise ValueError("need n >= 1")
    g = Graph(n)
    for i in range(n - 1):
        g.add_edge(i, i + 1)
    g.family = "path"
    return g


def _stack_rounds(rounds: int):
    """Run the face-stacking construction, returning the graph together with a
    per-round map from the subdivided face to the vertex inserted into it."""
    g = Graph(4)
    for u in range(4):
        for v in range(u + 1, 4):
            g.add_edge(u, v)
    g.construction_log = [(v, tuple(u for u in range(4) if u != v)) for v in range(4)]
    faces = [(0, 1, 2), (0, 1, 3), (0, 2, 3), (1, 2, 3)]
    round_maps = []
    for _ in range(rounds):
        inserted: dict[frozenset, int] = {}
        new_faces = []
        for a, b, c in faces:
            v = g.add_vertex((a, b, c), log=True)
            inserted[frozenset((a, b, c))] = v
            new_faces += [(a, b, v), (a, c, v), (b, c, v)]
        faces = new_faces
        round_maps.append(inserted)
    g.faces = faces
    g.family = "stacked"
    return g, round_maps


def stacked_triangulation(i: int) -> Graph:
    """The i-th stacked planar triangulation: K4 with i rounds of inserting a
    degree-3 vertex into every face.  Deterministic insertion-order numbering;
    carries its face list and construction log."""
    if i < 0:
        raise ValueError("need i >= 0")
    g, _ = _stack_rounds(i)
    return g


def outerplanar_U(i: int) -> Graph:
    """The i-th graph of the recursive outerplanar family: an edge at level 0,
    then repeatedly glue two copies end to end and close them with a new main
    edge.  |V| = 2^i + 1, |E| = 2^(i+1) - 1."""
    if i < 0:
        raise ValueError("need i >= 0")
    g = Graph(2)
    g.add_edge(0, 1)
    g.main_edge = (0, 1)
    for _ in range(i):
        a, b = g.main_edge
        n = g.n
        # second copy: vertex v maps to n + v, except b's twin c is identified
        # with the first copy's b
        c, d = g.main_edge

        def remap(v, c=c):
            if v == c:
                return b
            return n + v - (1 if v > c else 0)

        edges = g.edges()
        for _ in range(g.n - 1):
            g.add_vertex()
        for u, v in edges:
            g.add_edge(remap(u), remap(v))
        new_main = (a, remap(d))
        g.add_edge(*new_main)
        g.main_edge = new_main
    g.family = "outeru"
    return g


def plus4_gadget(h: Graph, m: int) -> Graph:
    """Matching of m edges; every matched vertex dominates its own copy of h;
    two extra adjacent vertices each adjacent to all matched vertices."""
    if m < 1:
        raise ValueError("need m >= 1")
    g = Graph(2 * m + 2)
    c, d = 2 * m, 2 * m + 1
    g.add_edge(c, d)
    for j in range(m):
        g.add_edge(2 * j, 2 * j + 1)
    for x in range(2 * m):
        g.add_edge(c, x)
        g.add_edge(d, x)
    h_edges = h.edges()
    for x in range(2 * m):
        base = g.n
        for _ in range(h.n):
            g.add_vertex((x,))
        for u, v in h_edges:
            g.add_edge(base + u, base + v)
    g.family = "plus4"
    return g


def leveled_outerplanar(levels: int, path_len: int, max_vertices: int = 200_000) -> Graph:
    """Rooted leveled graph: every vertex on level i carries a child path of
    path_len vertices on level i+1 (children adjacent to the parent and
    consecutive children adjacent)."""
    if levels < 0 or path_len < 1:
        raise ValueError("need levels >= 0 and path_len >= 1")
    total = sum(path_len ** i for i in range(levels + 1))
    if total > max_vertices:
        raise ValueError(f"instance would have {total} vertices, over the budget of {max_vertices}")
    g = Graph(1)
    g.levels = [0]
    frontier = [0]
    for lv in range(1, levels + 1):
        nxt = []
        for parent in frontier:
            prev = None
            for _ in range(path_len):
                v = g.add_vertex((parent,))
                g.levels.append(lv)
                if prev is not None:
                    g.add_edge(prev, v)
                prev = v
                nxt.append(v)
        frontier = nxt
    g.family = "leveled"
    return g


def check_3tree(g: Graph) -> int | None:
    """None if reverse insertion order is a perfect elimination order with
    later-neighborhoods forming cliques of size <= 3 (certifying treewidth <= 3);
    otherwise the first failing vertex."""
    if g.construction_log is None:
        raise ValueError("construction log required")
    order = [v for v, _ in g.construction_log]
    if sorted(order) != list(range(g.n)):
        raise ValueError("construction log does not cover all vertices")
    rank = {v: idx for idx, v in enumerate(order)}
    for v in reversed(order):
        earlier = [u for u in g.adj[v] if rank[u] < rank[v]]
        if len(earlier) > 3:
            return v
        for a in range(len(earlier)):
            for b in range(a + 1, len(earlier)):
                if not g.has_edge(earlier[a], earlier[b]):
                    return v
    return None


def fan_witness(i: int, edge: tuple[int, int], t: int) -> list[int]:
    """t vertices outside the i-th stacked triangulation, forming a path in the
    (i+t)-th one, each adjacent to both endpoints of the given edge.  Built by
    stacking into the face spanned by the edge and the previous witness."""
    if t < 1:
        raise ValueError("need t >= 1")
    x, y = edge
    g, round_maps = _stack_rounds(i + t)
    base = stacked_triangulation(i)
    if not base.has_edge(x, y):
        raise ValueError(f"edge {edge} not in the level-{i} triangulation")
    # first step: least third vertex among level-i faces containing the edge
    thirds = [v for f in base.faces if x in f and y in f for v in f if v not in (x, y)]
    if not thirds:
        raise ValueError(f"edge {edge} borders no face of the level-{i} triangulation")
    prev = min(thirds)
    witnesses = []
    for r in range(i, i + t):
        v = round_maps[r][frozenset((x, y, prev))]
        witnesses.append(v)
        prev = v
    return witnesses


@dataclass
class WitnessSearch:
    """Result of a budgeted subgraph-witness search."""

    mapping: dict[int, int] | None
    exhausted: bool
    nodes: int


def u_witness(i: int, x: int, t: int, node_budget: int = 2_000_000) -> WitnessSearch:
    """Search the (i+t+2)-th stacked triangulation for a copy of the t-th
    outerplanar family graph, disjoint from the i-th triangulation, with every
    copy vertex adjacent to x.  Returns the template->host mapping, or flags
    exhaustion when the budget runs out."""
    small_n = stacked_triangulation(i).n
    if not 0 <= x < small_n:
        raise ValueError(f"vertex {x} not in the level-{i} triangulation")
    big = stacked_triangulation(i + t + 2)
    tmpl = outerplanar_U(t)
    cand = sorted(v for v in big.adj[x] if v >= small_n)
    tmpl_edges = tmpl.edges()
    # assign template vertices in an order that keeps partial maps connected
    order = sorted(range(tmpl.n), key=lambda v: -len(tmpl.adj[v]))
    nodes = 0
    mapping: dict[int, int] = {}
    used: set[int] = set()

    def rec(idx: int) -> bool | None:
        nonlocal nodes
        if idx == len(order):
            return True
        v = order[idx]
        for host in cand:
            nodes += 1
            if nodes > node_budget:
                return None
            if host in used:
                continue
            ok = all(
                big.has_edge(host, mapping[u])
                for u in tmpl.adj[v]
                if u in mapping
            )
            if not ok:
                continue
            mapping[v] = host
            used.add(host)
            res = rec(idx + 1)
            if res:
                return True
            del mapping[v]
            used.discard(host)
            if res is None:
                return None
        return False

    res = rec(0)
    if res:
        for u, v in tmpl_edges:
            assert big.has_edge(mapping[u], mapping[v])
        return WitnessSearch(dict(mapping), False, nodes)
    return WitnessSearch(None, res is None, nodes)


def enumerate_paths(g: Graph, max_vertices: int, max_paths: int | None = None):
    """Yield every simple path with 2..max_vertices vertices exactly once up to
    reversal, oriented with the lexicographically smaller endpoint first.
    Raises SearchExhausted if a path-count budget is given and hit."""
    if max_vertices < 2:
        raise ValueError("need max_vertices >= 2")
    count = 0
    path = []
    on_path = [False] * g.n

    def rec(v):
        nonlocal count
        path.append(v)
        on_path[v] = True
        if len(path) >= 2 and path[0] < path[-1]:
            count += 1
            if max_paths is not None and count > max_paths:
                raise SearchExhausted(f"path budget {max_paths} exceeded")
            yield tuple(path)
        if len(path) < max_vertices:
            for u in sorted(g.adj[v]):
                if not on_path[u]:
                    yield from rec(u)
        on_path[v] = False
        path.pop()

    for start in range(g.n):
        yield from rec(start)


def verify_coloring(
    g: Graph,
    coloring: Coloring,
    k: int,
    max_path: int,
    max_paths: int | None = None,
) -> tuple[tuple[int, ...], Repetition] | None:
    """None if no simple path with at most max_path vertices induces a color
    square of period >= k; otherwise the lexicographically least violating path
    with the (smallest-period) repetition ending at its last vertex.

    Exhaustive whenever max_path >= g.n.  Paths are explored in lexicographic
    order; a per-period table of match-run lengths at the path tail makes each
    extension O(max_path) instead of a fresh quadratic scan, and a square of
    period p ends at the tail exactly when the run at distance p reaches p.
    """
    if k < 1:
        raise ValueError("need k >= 1")
    if max_path < 2:
        raise ValueError("need max_path >= 2")
    if len(coloring.colors) != g.n:
        raise ValueError("coloring size mismatch")
    colors = coloring.colors
    pmax = max_path // 2
    adjs = [sorted(a) for a in g.adj]
    visited_paths = 0
    path: list[int] = []
    seq: list[int] = []
    run_stack: list[list[int]] = []  # run_stack[m][p] = matches at distance p ending at m
    on_path = [False] * g.n

    def rec(v):
        nonlocal visited_paths
        path.append(v)
        seq.append(colors[v])
        on_path[v] = True
        m = len(seq) - 1
        prev = run_stack[-1] if run_stack else None
        runs = [0] * (pmax + 1)
        hit = None
        for p in range(k, min(pmax, m) + 1):
            if seq[m] == seq[m - p]:
                runs[p] = prev[p] + 1 if prev is not None else 1
                if runs[p] >= p and hit is None:
                    hit = Repetition(m - 2 * p + 1, 2 * p, p)
        run_stack.append(runs)
        try:
            if len(path) >= 2:
                visited_paths += 1
                if max_paths is not None and visited_paths > max_paths:
                    raise SearchExhausted(f"path budget {max_paths} exceeded")
                if hit is not None:
                    return tuple(path), hit
            if len(path) < max_path:
                for u in adjs[v]:
                    if not on_path[u]:
                        res = rec(u)
                        if res is not None:
                            return res
            return None
        finally:
            on_path[v] = False
            path.pop()
            seq.pop()
            run_stack.pop()

    for start in range(g.n):
        res = rec(start)
        if res is not None:
            return res
    return None
