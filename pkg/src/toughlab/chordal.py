"""Chordal-graph machinery: elimination orderings, clique trees, minimal
separators, moplexes, and the neighborhood-order vertex predicates.

Minimal separators are decided by the S-full-component test: S is a minimal
separator exactly when G-S has at least two components in which every vertex
of S has a neighbor. That brute-force form doubles as the oracle for the
clique-tree fast path.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Optional

from .graphs import Graph, GraphError, bits, components


@dataclass(frozen=True)
class CliqueTree:
    """Maximal cliques of a connected chordal graph arranged as a tree.

    For every vertex v the cliques containing v induce a subtree, so the
    intersection of two adjacent cliques is contained in every clique on the
    path between them.
    """

    cliques: tuple[int, ...]
    tree_edges: tuple[tuple[int, int], ...]


def is_clique(g: Graph, mask: int) -> bool:
    for v in bits(mask):
        if mask & ~g.closed(v):
            return False
    return True


def peo(g: Graph) -> Optional[tuple[int, ...]]:
    """Perfect elimination ordering via maximum cardinality search, or None.

    MCS visits the vertex with the most already-visited neighbors; the
    reversed visit order is a PEO whenever the graph is chordal. The
    candidate is verified, so the return value is trusted either way.
    """
    n = g.n
    weight = [0] * n
    visited = 0
    order = []
    for _ in range(n):
        best = -1
        for v in range(n):
            if not visited >> v & 1 and (best < 0 or weight[v] > weight[best]):
                best = v
        order.append(best)
        visited |= 1 << best
        for u in bits(g.adj[best] & ~visited):
            weight[u] += 1
    order.reverse()
    remaining = g.full_mask
    for v in order:
        remaining ^= 1 << v
        later = g.adj[v] & remaining
        if not is_clique(g, later):
            return None
    return tuple(order)


def is_chordal(g: Graph) -> bool:
    return peo(g) is not None


def maximal_cliques(g: Graph) -> list[int]:
    """All inclusion-maximal cliques (Bron-Kerbosch with pivoting), sorted."""
    out = []
    adj = g.adj

    def expand(r: int, p: int, x: int):
        if not p and not x:
            out.append(r)
            return
        pivot = -1
        best = -1
        for v in bits(p | x):
            score = (adj[v] & p).bit_count()
            if score > best:
                best, pivot = score, v
        for v in bits(p & ~adj[pivot]):
            expand(r | 1 << v, p & adj[v], x & adj[v])
            p ^= 1 << v
            x |= 1 << v

    expand(0, g.full_mask, 0)
    return sorted(out)


def clique_tree(g: Graph) -> CliqueTree:
    """Maximum-weight spanning tree of the clique intersection graph.

    Kruskal over pairs sorted by (-|Qi & Qj|, i, j); the lexicographic
    tie-break makes the tree deterministic.
    """
    if not g.is_connected():
        raise GraphError("clique tree requires a connected graph")
    if not is_chordal(g):
        raise GraphError("clique tree requires a chordal graph")
    cliques = maximal_cliques(g)
    k = len(cliques)
    pairs = sorted(
        ((i, j) for i in range(k) for j in range(i + 1, k)),
        key=lambda ij: (-(cliques[ij[0]] & cliques[ij[1]]).bit_count(), ij),
    )
    parent = list(range(k))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    edges = []
    for i, j in pairs:
        ri, rj = find(i), find(j)
        if ri != rj:
            parent[rj] = ri
            edges.append((i, j))
            if len(edges) == k - 1:
                break
    return CliqueTree(tuple(cliques), tuple(edges))


def validate_clique_tree(g: Graph, tree: CliqueTree) -> None:
    """Raise GraphError unless tree is a valid clique tree of g."""
    if sorted(tree.cliques) != maximal_cliques(g):
        raise GraphError("clique tree nodes are not exactly the maximal cliques")
    k = len(tree.cliques)
    if len(tree.tree_edges) != k - 1:
        raise GraphError("clique tree edge count is not node count minus one")
    reach = {0}
    frontier = [0]
    neighbors = [[] for _ in range(k)]
    for i, j in tree.tree_edges:
        if not (0 <= i < k and 0 <= j < k) or i == j:
            raise GraphError("clique tree edge endpoints out of range")
        neighbors[i].append(j)
        neighbors[j].append(i)
    while frontier:
        x = frontier.pop()
        for y in neighbors[x]:
            if y not in reach:
                reach.add(y)
                frontier.append(y)
    if len(reach) != k:
        raise GraphError("clique tree edges do not form a tree")
    for v in range(g.n):
        holding = [i for i, q in enumerate(tree.cliques) if q >> v & 1]
        sub = {holding[0]}
        frontier = [holding[0]]
        while frontier:
            x = frontier.pop()
            for y in neighbors[x]:
                if y in sub or not tree.cliques[y] >> v & 1:
                    continue
                sub.add(y)
                frontier.append(y)
        if len(sub) != len(holding):
            raise GraphError(f"cliques containing vertex {v} are not a subtree")


def is_minimal_separator(g: Graph, s: int) -> bool:
    """S-full test: at least two components of G-S see every vertex of S."""
    full_components = 0
    for comp in components(g, s):
        if all(g.adj[v] & comp for v in bits(s)):
            full_components += 1
            if full_components == 2:
                return True
    return False


def minimal_separators(g: Graph) -> list[int]:
    """All minimal separators by the S-full test over every vertex subset."""
    out = []
    for s in range(1 << g.n):
        if is_minimal_separator(g, s):
            out.append(s)
    return out


def minimal_separators_via_clique_tree(g: Graph, tree: CliqueTree) -> list[int]:
    """Intersections of adjacent clique-tree nodes, deduplicated and sorted."""
    validate_clique_tree(g, tree)
    return sorted({tree.cliques[i] & tree.cliques[j] for i, j in tree.tree_edges})


def moplexes(g: Graph) -> list[int]:
    """All moplexes, sorted by mask.

    The inclusion-maximal clique modules are exactly the classes of vertices
    sharing one closed neighborhood, so the search groups by N[v] and keeps
    the classes whose open neighborhood is empty or a minimal separator.
    """
    classes: dict[int, int] = {}
    for v in range(g.n):
        key = g.closed(v)
        classes[key] = classes.get(key, 0) | 1 << v
    out = []
    for closed_nbhd, members in classes.items():
        open_nbhd = closed_nbhd & ~members
        if open_nbhd == 0 or is_minimal_separator(g, open_nbhd):
            out.append(members)
    return sorted(out)


def is_moplicial(g: Graph, v: int) -> bool:
    return any(m >> v & 1 for m in moplexes(g))


def is_simplicial(g: Graph, v: int) -> bool:
    """N[v] is a clique."""
    if not 0 <= v < g.n:
        raise GraphError(f"vertex {v} out of range")
    return is_clique(g, g.closed(v))


def is_simple(g: Graph, v: int) -> bool:
    """The closed neighborhoods of N[v] form a chain under inclusion."""
    if not 0 <= v < g.n:
        raise GraphError(f"vertex {v} out of range")
    hoods = [g.closed(x) for x in bits(g.closed(v))]
    for a, b in combinations(hoods, 2):
        if a & ~b and b & ~a:
            return False
    return True


def maximum_neighbor(g: Graph, v: int) -> Optional[int]:
    """Some u in N[v] with N[w] subseteq N[u] for every w in N[v].

    Prefers v itself when it qualifies, then the least qualifying neighbor.
    """
    if not 0 <= v < g.n:
        raise GraphError(f"vertex {v} out of range")
    union = 0
    for w in bits(g.closed(v)):
        union |= g.closed(w)
    for u in [v, *bits(g.adj[v])]:
        if not union & ~g.closed(u):
            return u
    return None


def maximum_neighboring_edge(g: Graph, v: int) -> Optional[tuple[int, int]]:
    """Some edge uu' inside N(v) with N[w] subseteq N[u] | N[u'] for all w in N[v]."""
    if not 0 <= v < g.n:
        raise GraphError(f"vertex {v} out of range")
    union = 0
    for w in bits(g.closed(v)):
        union |= g.closed(w)
    hood = list(bits(g.adj[v]))
    for u, u2 in combinations(hood, 2):
        if g.has_edge(u, u2) and not union & ~(g.closed(u) | g.closed(u2)):
            return u, u2
    return None
