"""Exact and exploratory searches: the minimum palette size for square-free
path colorings of small graphs, longest-word searches on paths, and witness
hunts for trees that defeat a given palette."""

from __future__ import annotations

import time
from dataclasses import dataclass

from .graphs import Graph, Coloring, path_graph, verify_coloring


@dataclass(frozen=True)
class SearchBudget:
    """Limits for a backtracking search."""

    node_limit: int = 10_000_000
    time_limit: float = 300.0
    max_colors: int = 16

    def __post_init__(self):
        if self.node_limit < 1 or self.time_limit <= 0 or self.max_colors < 1:
            raise ValueError("budget fields must be positive")


@dataclass
class PiResult:
    """Minimum color count for square-period->=k-free path colorings, or
    bracketing bounds when the search ran out of budget."""

    lower: int
    upper: int | None
    witness: Coloring | None
    exhausted: bool

    @property
    def value(self) -> int | None:
        return self.lower if self.lower == self.upper else None


def _square_through_vertex(g: Graph, colors: list[int], v: int, k: int) -> bool:
    """True if some simple path through v, over the vertices colored so far,
    reads a color square of period >= k.  A violating path always contains a
    square that passes through the newly colored vertex, and that square is
    itself a path, so it suffices to grow paths outward from v in both
    directions and test each for being exactly a square."""

    def is_square(seq) -> bool:
        m = len(seq)
        return m % 2 == 0 and m // 2 >= k and seq[: m // 2] == seq[m // 2 :]

    on_path = [False] * g.n
    limit = 2 * (g.n // 2)

    def right(path) -> bool:
        if is_square([colors[u] for u in path]):
            return True
        if len(path) < limit:
            for u in g.adj[path[-1]]:
                if colors[u] >= 0 and not on_path[u]:
                    on_path[u] = True
                    if right(path + [u]):
                        return True
                    on_path[u] = False
        return False

    def left(path) -> bool:
        if right(path):
            return True
        if len(path) < limit:
            for u in g.adj[path[0]]:
                if colors[u] >= 0 and not on_path[u]:
                    on_path[u] = True
                    if left([u] + path):
                        return True
                    on_path[u] = False
        return False

    on_path[v] = True
    return left([v])


def pi_k_exact(g: Graph, k: int, budget: SearchBudget = SearchBudget()) -> PiResult:
    """Minimum number of colors so that no simple path of g reads a color
    square of period >= k.  Backtracking over vertex-ordered colorings with
    incremental checking (only paths through the newly colored vertex) and
    symmetry breaking: vertex 0 gets color 0, and color c+1 may appear only
    once color c has."""
    if k < 1:
        raise ValueError("need k >= 1")
    if g.n == 0:
        return PiResult(0, 0, Coloring((), 1), False)
    deadline = time.monotonic() + budget.time_limit
    nodes = 0

    def solve(ncolors: int) -> Coloring | bool | None:
        """Coloring if one exists, False if provably none, None on budget."""
        nonlocal nodes
        colors = [-1] * g.n

        def rec(v: int, used: int):
            nonlocal nodes
            if v == g.n:
                return Coloring(tuple(colors), ncolors)
            top = min(used + 1, ncolors)
            for c in range(top):
                nodes += 1
                if nodes > budget.node_limit or time.monotonic() > deadline:
                    return None
                colors[v] = c
                if not _square_through_vertex(g, colors, v, k):
                    res = rec(v + 1, max(used, c + 1))
                    if res is not False:
                        return res
                colors[v] = -1
            return False

        return rec(0, 0)

    lower = 1
    for ncolors in range(1, budget.max_colors + 1):
        res = solve(ncolors)
        if res is None:
            return PiResult(lower, None, None, True)
        if res is not False:
            if g.n >= 2:
                check = verify_coloring(g, res, k, g.n)
                assert check is None, f"witness fails verification: {check}"
            return PiResult(ncolors, ncolors, res, False)
        lower = ncolors + 1
    # palette exhausted: the lower bound is proven, not a budget timeout
    return PiResult(lower, None, None, False)


@dataclass
class WordSearchResult:
    word: str
    reached_target: bool
    exhausted: bool


def extend_word_search(
    alphabet: int, k: int, target_len: int, budget: SearchBudget = SearchBudget()
) -> WordSearchResult:
    """Depth-first lexicographic extension of words over the given alphabet,
    keeping every prefix free of squares of period >= k.  Returns the
    lexicographically least such word of target_len, or the longest prefix
    ever reached if no word of target_len exists (or the budget ran out)."""
    if alphabet < 1 or k < 1 or target_len < 1:
        raise ValueError("need alphabet, k, target_len >= 1")
    deadline = time.monotonic() + budget.time_limit
    nodes = 0
    best = ""
    word: list[str] = []

    def tail_ok() -> bool:
        m = len(word)
        for p in range(k, m // 2 + 1):
            if word[m - 2 * p : m - p] == word[m - p :]:
                return False
        return True

    # explicit stack of next-symbol-to-try per depth (plain recursion would
    # blow the interpreter limit well before target_len 1000)
    next_try = [0]
    res = False
    while next_try:
        if len(word) > len(best):
            best = "".join(word)
        if len(word) == target_len:
            res = True
            break
        c = next_try[-1]
        if c >= alphabet:
            next_try.pop()
            if word:
                word.pop()
            continue
        next_try[-1] = c + 1
        nodes += 1
        if nodes > budget.node_limit or time.monotonic() > deadline:
            res = None
            break
        word.append(str(c))
        if tail_ok():
            next_try.append(0)
        else:
            word.pop()
    return WordSearchResult(best, res is True, res is None)


def _rooted_trees(max_vertices: int):
    """Yield rooted trees as canonical parent arrays (parent[0] = -1,
    parent[v] < v), smallest vertex count first, one per isomorphism class."""

    def canon(children: dict[int, list[int]], v: int) -> tuple:
        return tuple(sorted(canon(children, c) for c in children.get(v, [])))

    for n in range(1, max_vertices + 1):
        seen = set()

        def rec(parent: list[int]):
            if len(parent) == n:
                children: dict[int, list[int]] = {}
                for v, p in enumerate(parent):
                    if p >= 0:
                        children.setdefault(p, []).append(v)
                key = canon(children, 0)
                if key not in seen:
                    seen.add(key)
                    yield list(parent)
                return
            v = len(parent)
            # BFS labelings have non-decreasing parents, so restricting to
            # them keeps every shape reachable while cutting the search to
            # Catalan-many arrays; exact dedup happens via the canonical form
            lo = parent[-1] if len(parent) > 1 else 0
            for p in range(lo, v):
                yield from rec(parent + [p])

        yield from rec([-1])


def tree_witness_search(
    k: int,
    colors: int,
    max_depth: int = 6,
    max_arity: int = 3,
    budget: SearchBudget = SearchBudget(),
):
    """Smallest rooted tree (by vertex count, then canonical shape) within the
    shape bounds that admits no coloring with the given palette avoiding color
    squares of period >= k on paths; unsatisfiability is established by the
    exact solver.  Returns (Graph, PiResult) or None when the search space or
    budget is exhausted without a witness (inconclusive, not a refutation)."""
    if colors < 1 or k < 1:
        raise ValueError("need colors, k >= 1")
    max_vertices = 0
    total = 1
    for _ in range(max_depth):
        total = total * max_arity + 1
    max_vertices = min(total, 12)
    deadline = time.monotonic() + budget.time_limit
    for parent in _rooted_trees(max_vertices):
        if time.monotonic() > deadline:
            return None
        n = len(parent)
        depth = [0] * n
        arity = [0] * n
        for v in range(1, n):
            depth[v] = depth[parent[v]] + 1
            arity[parent[v]] += 1
        if n > 1 and (max(depth) > max_depth or max(arity) > max_arity):
            continue
        g = Graph(n)
        for v in range(1, n):
            g.add_edge(parent[v], v)
        g.family = "tree"
        sub = SearchBudget(budget.node_limit, max(deadline - time.monotonic(), 0.01), colors)
        res = pi_k_exact(g, k, sub)
        if res.exhausted:
            return None
        if res.lower > colors:
            return g, res
    return None
