"""Tree certificates witnessing kappa(S) >= l.

A certificate is a family of trees, each spanning the terminal set S,
pairwise edge-disjoint, and pairwise sharing no vertex outside S.  The
verifier re-checks every condition from scratch, so any search output can
be validated independently of how it was found.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterable

from .graph import Graph, GraphFormatError, TerminalSet, _canonical_edges


@dataclass(frozen=True)
class Tree:
    """One tree of a certificate: explicit vertex set plus edge set."""

    vertices: tuple[int, ...]
    edges: tuple[tuple[int, int], ...]

    def __post_init__(self) -> None:
        vertices = tuple(sorted(self.vertices))
        if len(set(vertices)) != len(vertices):
            raise ValueError(f"tree has repeated vertices: {vertices!r}")
        if not vertices:
            raise ValueError("tree must have at least one vertex")
        bound = vertices[-1] + 1
        edges = _canonical_edges(bound, self.edges)
        vset = set(vertices)
        for u, v in edges:
            if u not in vset or v not in vset:
                raise ValueError(f"tree edge ({u},{v}) has endpoint outside vertex set")
        object.__setattr__(self, "vertices", vertices)
        object.__setattr__(self, "edges", edges)

    @property
    def vertex_set(self) -> frozenset[int]:
        return frozenset(self.vertices)


@dataclass(frozen=True)
class TreeCertificate:
    trees: tuple[Tree, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "trees", tuple(self.trees))

    def __len__(self) -> int:
        return len(self.trees)


@dataclass(frozen=True)
class VerifyReport:
    valid: bool
    violations: tuple[str, ...]


def _is_tree(tree: Tree) -> str | None:
    """Return a violation message if the edge set is not a tree on the vertices."""
    nv = len(tree.vertices)
    if len(tree.edges) != nv - 1:
        return f"has {len(tree.edges)} edges on {nv} vertices, not a tree"
    parent = {v: v for v in tree.vertices}

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for u, v in tree.edges:
        ru, rv = find(u), find(v)
        if ru == rv:
            return f"contains a cycle through edge ({u},{v})"
        parent[ru] = rv
    roots = {find(v) for v in tree.vertices}
    if len(roots) != 1:
        return "is disconnected"
    return None


def verify_certificate(
    graph: Graph, terminals: TerminalSet | Iterable[int], cert: TreeCertificate
) -> VerifyReport:
    """Check every certificate condition; failures are report content, not errors."""
    terminals = TerminalSet.of(terminals)
    terminals.validate_in(graph)
    sset = set(terminals.members)
    graph_edges = frozenset(graph.edges)
    violations: list[str] = []

    for i, tree in enumerate(cert.trees):
        if tree.vertices[-1] >= graph.order:
            violations.append(f"tree {i}: vertex {tree.vertices[-1]} out of range")
            continue
        bad = [e for e in tree.edges if e not in graph_edges]
        if bad:
            violations.append(f"tree {i}: edge {bad[0]} not in the graph")
        problem = _is_tree(tree)
        if problem is not None:
            violations.append(f"tree {i}: {problem}")
        missing = sset - tree.vertex_set
        if missing:
            violations.append(f"tree {i}: missing terminals {sorted(missing)}")

    for i in range(len(cert.trees)):
        for j in range(i + 1, len(cert.trees)):
            ti, tj = cert.trees[i], cert.trees[j]
            shared_edges = set(ti.edges) & set(tj.edges)
            if shared_edges:
                violations.append(
                    f"trees {i},{j}: share edge {min(shared_edges)}"
                )
            extra = (ti.vertex_set & tj.vertex_set) - sset
            if extra:
                violations.append(
                    f"trees {i},{j}: share non-terminal vertex {min(extra)}"
                )

    return VerifyReport(valid=not violations, violations=tuple(violations))


def certificate_to_obj(cert: TreeCertificate) -> dict:
    return {
        "trees": [
            {"vertices": list(t.vertices), "edges": [list(e) for e in t.edges]}
            for t in cert.trees
        ]
    }


def certificate_from_obj(obj: object) -> TreeCertificate:
    if not isinstance(obj, dict) or "trees" not in obj:
        raise GraphFormatError("certificate must be an object with a 'trees' field")
    trees = []
    for pos, raw in enumerate(obj["trees"]):
        if not isinstance(raw, dict):
            raise GraphFormatError(f"tree {pos}: expected an object")
        try:
            trees.append(
                Tree(tuple(raw.get("vertices", ())), tuple(tuple(e) for e in raw.get("edges", ())))
            )
        except ValueError as exc:
            raise GraphFormatError(f"tree {pos}: {exc}") from exc
    return TreeCertificate(tuple(trees))


def serialize_certificate(cert: TreeCertificate) -> str:
    return json.dumps(certificate_to_obj(cert), sort_keys=True, separators=(",", ":"))


def parse_certificate(text: str) -> TreeCertificate:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise GraphFormatError(f"invalid JSON: {exc}") from exc
    return certificate_from_obj(obj)
