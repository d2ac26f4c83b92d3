"""Minimal Steiner tree enumeration and homeomorphism-type classification.

A minimal Steiner tree for a terminal set S is a subtree whose vertex set
contains S and all of whose leaves are terminals; equivalently, no proper
subtree still connects S.  Any packing of internally disjoint trees can be
pruned tree-by-tree into this form without losing cardinality, so the
solver only ever considers such trees.

Everything here works on bitmask views: vertex sets and edge-index sets
are plain ints, which keeps the inner loops allocation-free.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterator

from .graph import Graph, TerminalSet
from .certificates import Tree


class GraphBits:
    """Bitmask view of a graph for the combinatorial search routines."""

    __slots__ = ("order", "edges", "eu", "ev", "einc", "evmask", "adj", "all_v", "all_e")

    def __init__(self, graph: Graph):
        self.order = graph.order
        self.edges = graph.edges
        self.eu: list[int] = []
        self.ev: list[int] = []
        self.einc = [0] * graph.order
        self.evmask: list[int] = []
        self.adj = [0] * graph.order
        for i, (u, v) in enumerate(graph.edges):
            self.eu.append(u)
            self.ev.append(v)
            bit = 1 << i
            self.einc[u] |= bit
            self.einc[v] |= bit
            self.evmask.append((1 << u) | (1 << v))
            self.adj[u] |= 1 << v
            self.adj[v] |= 1 << u
        self.all_v = (1 << graph.order) - 1
        self.all_e = (1 << len(graph.edges)) - 1


def iter_bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(ids) -> int:
    out = 0
    for v in ids:
        out |= 1 << v
    return out


def spans(bits: GraphBits, smask: int, avail_v: int, avail_e: int) -> bool:
    """True iff all terminal bits lie in one component of the available subgraph."""
    if smask & ~avail_v:
        return False
    comp = smask & -smask
    frontier = comp
    einc = bits.einc
    evmask = bits.evmask
    while frontier:
        nxt = 0
        work = frontier
        while work:
            low = work & -work
            work ^= low
            ee = einc[low.bit_length() - 1] & avail_e
            while ee:
                elow = ee & -ee
                ee ^= elow
                nxt |= evmask[elow.bit_length() - 1]
        frontier = nxt & avail_v & ~comp
        comp |= frontier
        if not smask & ~comp:
            return True
    return not smask & ~comp


def _nonterminal_degree_ok(bits: GraphBits, tree_e: int, tree_v: int, smask: int) -> bool:
    """Every non-terminal tree vertex must have tree-degree >= 2 (leaves in S)."""
    work = tree_v & ~smask
    einc = bits.einc
    while work:
        low = work & -work
        work ^= low
        if (einc[low.bit_length() - 1] & tree_e).bit_count() < 2:
            return False
    return True


def _growth_feasible(
    bits: GraphBits, smask: int, avail_v: int, usable_e: int, tree_e: int, tree_v: int
) -> bool:
    """Can the partial tree still reach every terminal and fix its bad leaves?"""
    einc = bits.einc
    # every current non-terminal leaf needs a spare edge to grow through
    work = tree_v & ~smask
    while work:
        low = work & -work
        work ^= low
        v = low.bit_length() - 1
        inc = einc[v]
        if (inc & tree_e).bit_count() == 1 and not inc & usable_e & ~tree_e:
            return False
    # remaining terminals must be reachable from the tree
    missing = smask & ~tree_v
    if not missing:
        return True
    comp = tree_v
    frontier = tree_v
    evmask = bits.evmask
    while frontier:
        nxt = 0
        work = frontier
        while work:
            low = work & -work
            work ^= low
            ee = einc[low.bit_length() - 1] & usable_e
            while ee:
                elow = ee & -ee
                ee ^= elow
                nxt |= evmask[elow.bit_length() - 1]
        frontier = nxt & avail_v & ~comp
        comp |= frontier
        if not missing & ~comp:
            return True
    return not missing & ~comp


def iter_minimal_trees(
    bits: GraphBits,
    smask: int,
    avail_v: int,
    avail_e: int,
    root: int,
    tick: Callable[[], None] | None = None,
    prune: Callable[[int, int], bool] | None = None,
) -> Iterator[tuple[int, int]]:
    """Yield every minimal Steiner tree inside the available subgraph.

    Trees come out as (edge_mask, vertex_mask) in a deterministic
    depth-first discovery order: at each step the lowest-indexed frontier
    edge is first included, then excluded, so each edge set is produced
    exactly once.  `prune(tree_e, tree_v)` may veto a partial tree and all
    of its extensions (used by the packing search to apply remaining-tree
    bounds).  `tick` charges one budget unit per search node.
    """
    rootbit = 1 << root
    if not rootbit & avail_v:
        return
    einc = bits.einc
    evmask = bits.evmask

    def rec(tree_e: int, tree_v: int, excl: int, frontier: int) -> Iterator[tuple[int, int]]:
        if tick is not None:
            tick()
        if not smask & ~tree_v and _nonterminal_degree_ok(bits, tree_e, tree_v, smask):
            # complete: no strict supertree can be minimal, stop growing
            yield (tree_e, tree_v)
            return
        # lowest admissible frontier edge; edges closing a cycle drop out for good
        cand = -1
        work = frontier & ~excl
        while work:
            low = work & -work
            e = low.bit_length() - 1
            if not evmask[e] & ~tree_v:
                frontier ^= low
                work ^= low
                continue
            cand = e
            break
        if cand < 0:
            return
        bit = 1 << cand
        wmask = evmask[cand] & ~tree_v
        w = wmask.bit_length() - 1
        # include: the new vertex, if non-terminal, must be fixable later
        grown_e = tree_e | bit
        grown_v = tree_v | wmask
        ok = True
        if not wmask & smask and not einc[w] & avail_e & ~excl & ~grown_e:
            ok = False
        if ok and prune is not None and prune(grown_e, grown_v):
            ok = False
        if ok:
            yield from rec(
                grown_e, grown_v, excl, (frontier | (einc[w] & avail_e)) & ~grown_e
            )
        # exclude: the tree itself must stay completable
        excl2 = excl | bit
        if _growth_feasible(bits, smask, avail_v, avail_e & ~excl2, tree_e, tree_v):
            yield from rec(tree_e, tree_v, excl2, frontier & ~bit)

    yield from rec(0, rootbit, 0, einc[root] & avail_e)


def extract_steiner_tree(
    bits: GraphBits, smask: int, avail_v: int, avail_e: int, root: int
) -> tuple[int, int] | None:
    """Deterministically pick one minimal Steiner tree, or None if S is split.

    Breadth-first spanning tree from the root (lowest edge index first),
    then repeated removal of non-terminal leaves.
    """
    rootbit = 1 << root
    if not rootbit & avail_v or smask & ~avail_v:
        return None
    visited = rootbit
    queue = [root]
    tree_edges: list[int] = []
    einc = bits.einc
    eu, ev = bits.eu, bits.ev
    while queue:
        nxt: list[int] = []
        for v in queue:
            ee = einc[v] & avail_e
            while ee:
                low = ee & -ee
                ee ^= low
                e = low.bit_length() - 1
                w = ev[e] if eu[e] == v else eu[e]
                wbit = 1 << w
                if not wbit & avail_v or wbit & visited:
                    continue
                visited |= wbit
                tree_edges.append(e)
                nxt.append(w)
        queue = nxt
    if smask & ~visited:
        return None
    tree_e = 0
    for e in tree_edges:
        tree_e |= 1 << e
    tree_v = visited
    # prune hanging non-terminal branches
    changed = True
    while changed:
        changed = False
        work = tree_v & ~smask
        while work:
            low = work & -work
            work ^= low
            v = low.bit_length() - 1
            inc = einc[v] & tree_e
            if inc.bit_count() <= 1:
                tree_v ^= low
                tree_e &= ~inc
                changed = True
    return (tree_e, tree_v)


def tree_from_masks(bits: GraphBits, tree_e: int, tree_v: int) -> Tree:
    return Tree(
        tuple(iter_bits(tree_v)),
        tuple(bits.edges[e] for e in iter_bits(tree_e)),
    )


# ---------------------------------------------------------------------------
# Public enumeration and topology classification
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class EnumerationResult:
    trees: tuple[Tree, ...]
    truncated: bool


def enumerate_steiner_trees(
    graph: Graph, terminals: TerminalSet | list[int], limit: int
) -> EnumerationResult:
    """All inclusion-minimal Steiner trees, up to `limit`.

    When the full set fits in the limit it is returned sorted by
    (edge count, edge list).  Otherwise the first `limit` discoveries are
    returned (sorted the same way) with the truncation flag set.
    """
    if limit < 1:
        raise ValueError("limit must be >= 1")
    terminals = TerminalSet.of(terminals)
    terminals.validate_in(graph)
    bits = GraphBits(graph)
    smask = mask_of(terminals.members)
    found: list[tuple[int, int]] = []
    truncated = False
    for item in iter_minimal_trees(
        bits, smask, bits.all_v, bits.all_e, terminals.members[0]
    ):
        if len(found) == limit:
            truncated = True
            break
        found.append(item)
    keyed = sorted(
        ((tree_e.bit_count(), tuple(iter_bits(tree_e))), tree_e, tree_v)
        for tree_e, tree_v in found
    )
    trees = tuple(tree_from_masks(bits, tree_e, tree_v) for _, tree_e, tree_v in keyed)
    return EnumerationResult(trees, truncated)


@dataclass(frozen=True)
class ReducedTopology:
    """Canonical code of a Steiner tree with degree-2 non-terminals suppressed.

    Terminals all carry one shared marker, so trees that differ only by
    which terminal sits where get the same code; anonymous branch vertices
    are interchangeable likewise.
    """

    code: str


def _reduced_code(adj: dict[int, list[int]], terminal_ids: frozenset[int]) -> str:
    # suppress non-terminal vertices of degree 2
    adj = {v: sorted(nb) for v, nb in adj.items()}
    changed = True
    while changed:
        changed = False
        for v in sorted(adj):
            if v not in terminal_ids and len(adj[v]) == 2:
                a, b = adj[v]
                adj[a].remove(v)
                adj[b].remove(v)
                adj[a].append(b)
                adj[b].append(a)
                del adj[v]
                changed = True
                break

    def rooted(v: int, parent: int | None) -> str:
        label = "T" if v in terminal_ids else "*"
        kids = sorted(rooted(w, v) for w in adj[v] if w != parent)
        return label + "(" + ",".join(kids) + ")"

    return min(rooted(v, None) for v in sorted(adj))


def classify_topology(tree: Tree, terminals: TerminalSet | list[int]) -> ReducedTopology:
    """Canonical homeomorphism type of a Steiner tree.

    The tree must connect the terminals and every leaf must be a terminal.
    """
    terminals = TerminalSet.of(terminals)
    sset = frozenset(terminals.members)
    vset = tree.vertex_set
    if sset - vset:
        raise ValueError(f"tree does not contain terminals {sorted(sset - vset)}")
    problem = None
    if len(tree.edges) != len(tree.vertices) - 1:
        problem = "edge count"
    adj: dict[int, list[int]] = {v: [] for v in tree.vertices}
    for u, v in tree.edges:
        adj[u].append(v)
        adj[v].append(u)
    if problem is None:
        seen = {tree.vertices[0]}
        stack = [tree.vertices[0]]
        while stack:
            v = stack.pop()
            for w in adj[v]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        if len(seen) != len(tree.vertices):
            problem = "disconnected"
    if problem is not None:
        raise ValueError(f"not a tree ({problem})")
    for v, nb in adj.items():
        if len(nb) <= 1 and v not in sset:
            raise ValueError(f"non-terminal leaf {v}")
    return ReducedTopology(_reduced_code(adj, sset))


def count_topologies(graph: Graph, terminals: TerminalSet | list[int]) -> int:
    """Number of distinct reduced topologies over all minimal Steiner trees."""
    terminals = TerminalSet.of(terminals)
    terminals.validate_in(graph)
    bits = GraphBits(graph)
    smask = mask_of(terminals.members)
    sset = frozenset(terminals.members)
    codes: set[str] = set()
    for tree_e, tree_v in iter_minimal_trees(
        bits, smask, bits.all_v, bits.all_e, terminals.members[0]
    ):
        adj: dict[int, list[int]] = {v: [] for v in iter_bits(tree_v)}
        for e in iter_bits(tree_e):
            u, v = bits.eu[e], bits.ev[e]
            adj[u].append(v)
            adj[v].append(u)
        codes.add(_reduced_code(adj, sset))
    return len(codes)
