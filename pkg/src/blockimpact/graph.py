"""Undirected simple graphs: representation, parsing, generation, components.

Vertices are contiguous 0-based internal ids; the original input labels are
kept on the graph so every user-facing output can report them. Adjacency is
stored CSR-style in plain Python lists, which is what the DFS-heavy code in
the rest of the package iterates over.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from typing import Iterable, Iterator, NamedTuple

GENERATOR_FAMILIES = ("gnm", "path", "star", "balanced-tree", "clique-chain")


class ParseError(ValueError):
    """Malformed graph input. ``line`` is the 1-based offending line, if known."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        super().__init__(f"line {line}: {message}" if line is not None else message)


@dataclass(frozen=True, slots=True)
class Graph:
    """Immutable undirected simple graph.

    The neighbors of vertex ``v`` are ``nbr[indptr[v]:indptr[v+1]]``, with the
    parallel slice of ``eid`` giving the id of the connecting edge. Each edge
    appears exactly twice (once per endpoint) under the same id; there are no
    self-loops and no parallel edges.
    """

    n: int
    m: int
    indptr: list[int]
    nbr: list[int]
    eid: list[int]
    edges: list[tuple[int, int]]  # edge id -> (u, v) as first recorded
    labels: list[str]  # internal id -> original label
    label_ids: dict[str, int]  # original label -> internal id

    @classmethod
    def from_edges(
        cls, vertices: int | list[str], edges: Iterable[tuple[int, int]]
    ) -> "Graph":
        """Build a graph from an edge list over 0-based vertex ids.

        ``vertices`` is either a vertex count (labels default to the decimal
        ids) or the full list of labels. Raises ValueError on out-of-range
        ids, self-loops, or repeated edges: callers that accept dirty input
        (the parsers) are expected to clean it first.
        """
        if isinstance(vertices, int):
            n = vertices
            labels = [str(i) for i in range(n)]
        else:
            labels = list(vertices)
            n = len(labels)
        label_ids = {lab: i for i, lab in enumerate(labels)}
        if len(label_ids) != n:
            raise ValueError("duplicate vertex labels")

        edge_list: list[tuple[int, int]] = []
        seen: set[tuple[int, int]] = set()
        deg = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            key = (u, v) if u < v else (v, u)
            if key in seen:
                raise ValueError(f"duplicate edge ({u}, {v})")
            seen.add(key)
            edge_list.append((u, v))
            deg[u] += 1
            deg[v] += 1
        m = len(edge_list)

        indptr = [0] * (n + 1)
        total = 0
        for i in range(n):
            indptr[i] = total
            total += deg[i]
        indptr[n] = total
        cursor = indptr[:n]
        nbr = [0] * (2 * m)
        eid = [0] * (2 * m)
        for e, (u, v) in enumerate(edge_list):
            cu = cursor[u]
            nbr[cu] = v
            eid[cu] = e
            cursor[u] = cu + 1
            cv = cursor[v]
            nbr[cv] = u
            eid[cv] = e
            cursor[v] = cv + 1
        return cls(n, m, indptr, nbr, eid, edge_list, labels, label_ids)

    def neighbors(self, v: int) -> list[tuple[int, int]]:
        """(neighbor id, edge id) pairs of ``v`` in adjacency order."""
        lo, hi = self.indptr[v], self.indptr[v + 1]
        return list(zip(self.nbr[lo:hi], self.eid[lo:hi]))

    def degree(self, v: int) -> int:
        return self.indptr[v + 1] - self.indptr[v]


@dataclass(frozen=True, slots=True)
class CcLabeling:
    """Connected-component labeling: ids are dense and assigned in order of
    each component's first-visited vertex."""

    component_id: list[int]  # per vertex
    component_size: list[int]  # per component

    @property
    def count(self) -> int:
        return len(self.component_size)

    def size_of(self, v: int) -> int:
        return self.component_size[self.component_id[v]]


class ParseResult(NamedTuple):
    graph: Graph
    dropped: int  # self-loop and duplicate-edge lines discarded


def _numbered_lines(text: str | Iterable[str]) -> Iterator[tuple[int, str]]:
    lines = text.splitlines() if isinstance(text, str) else text
    return enumerate(lines, start=1)


def parse_edge_list(text: str | Iterable[str]) -> ParseResult:
    """Parse whitespace-separated ``u v`` edge lines.

    Blank lines and lines starting with ``#`` are ignored. A line whose first
    token is literally ``v`` declares the vertex named by its second token
    (the way isolated vertices are expressed). Labels are arbitrary
    non-whitespace tokens; internal ids follow first appearance. Self-loops
    and repeated edges (either orientation) are dropped and counted.
    """
    labels: list[str] = []
    ids: dict[str, int] = {}

    def intern(token: str) -> int:
        i = ids.get(token)
        if i is None:
            i = len(labels)
            ids[token] = i
            labels.append(token)
        return i

    edges: list[tuple[int, int]] = []
    seen: set[tuple[int, int]] = set()
    dropped = 0
    for lineno, raw in _numbered_lines(text):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) != 2:
            raise ParseError(f"expected two tokens, got {len(parts)}", lineno)
        if parts[0] == "v":
            intern(parts[1])
            continue
        u = intern(parts[0])
        w = intern(parts[1])
        if u == w:
            dropped += 1
            continue
        key = (u, w) if u < w else (w, u)
        if key in seen:
            dropped += 1
            continue
        seen.add(key)
        edges.append((u, w))
    return ParseResult(Graph.from_edges(labels, edges), dropped)


def parse_dimacs(text: str | Iterable[str]) -> ParseResult:
    """Parse the DIMACS ``p edge`` format (1-based ``e u v`` lines).

    The vertex count comes from the ``p`` line, so isolated vertices are
    preserved. The declared edge count is advisory: after dropping self-loops
    and duplicates the retained count wins.
    """
    n: int | None = None
    edges: list[tuple[int, int]] = []
    seen: set[tuple[int, int]] = set()
    dropped = 0
    for lineno, raw in _numbered_lines(text):
        line = raw.strip()
        if not line:
            continue
        parts = line.split()
        if parts[0] == "c":
            continue
        if parts[0] == "p":
            if n is not None:
                raise ParseError("duplicate 'p' line", lineno)
            if len(parts) != 4 or parts[1] != "edge":
                raise ParseError("malformed 'p' line (expected 'p edge <n> <m>')", lineno)
            try:
                n = int(parts[2])
                declared_m = int(parts[3])
            except ValueError:
                raise ParseError("non-integer counts in 'p' line", lineno) from None
            if n < 0 or declared_m < 0:
                raise ParseError("negative counts in 'p' line", lineno)
        elif parts[0] == "e":
            if n is None:
                raise ParseError("'e' line before 'p' line", lineno)
            if len(parts) != 3:
                raise ParseError("malformed 'e' line (expected 'e <u> <v>')", lineno)
            try:
                u = int(parts[1])
                w = int(parts[2])
            except ValueError:
                raise ParseError("non-integer vertex id in 'e' line", lineno) from None
            if not (1 <= u <= n) or not (1 <= w <= n):
                raise ParseError(f"vertex id out of range 1..{n}", lineno)
            u -= 1
            w -= 1
            if u == w:
                dropped += 1
                continue
            key = (u, w) if u < w else (w, u)
            if key in seen:
                dropped += 1
                continue
            seen.add(key)
            edges.append((u, w))
        else:
            raise ParseError(f"unexpected line type {parts[0]!r}", lineno)
    if n is None:
        raise ParseError("missing 'p' line")
    labels = [str(i + 1) for i in range(n)]
    return ParseResult(Graph.from_edges(labels, edges), dropped)


def format_edge_list(g: Graph) -> str:
    """Serialize to the edge-list format accepted by :func:`parse_edge_list`.

    Isolated vertices come out as ``v <label>`` declarations. A label that
    would be misread in first position (``v``, or anything starting with
    ``#``) is placed second; such a label can never occur on both endpoints
    of a parsed edge, so parse -> format -> parse round-trips.
    """

    def clean(label: str) -> bool:
        return label != "v" and not label.startswith("#")

    out: list[str] = []
    for i, lab in enumerate(g.labels):
        if g.degree(i) == 0:
            out.append(f"v {lab}")
    for u, w in g.edges:
        lu, lw = g.labels[u], g.labels[w]
        if not clean(lu):
            lu, lw = lw, lu
        if not clean(lu):
            raise ValueError(f"edge {g.labels[u]!r} -- {g.labels[w]!r} is not serializable")
        out.append(f"{lu} {lw}")
    return "\n".join(out) + ("\n" if out else "")


def connected_components(g: Graph) -> CcLabeling:
    """BFS labeling; deterministic for a fixed adjacency order."""
    n = g.n
    indptr = g.indptr
    nbr = g.nbr
    comp = [-1] * n
    sizes: list[int] = []
    order: list[int] = []
    append = order.append
    cid = 0
    for s in range(n):
        if comp[s] >= 0:
            continue
        start = len(order)
        comp[s] = cid
        append(s)
        idx = start
        while idx < len(order):
            v = order[idx]
            idx += 1
            for u in nbr[indptr[v]:indptr[v + 1]]:
                if comp[u] < 0:
                    comp[u] = cid
                    append(u)
        sizes.append(len(order) - start)
        cid += 1
    return CcLabeling(comp, sizes)


@dataclass(frozen=True, slots=True)
class GeneratorSpec:
    """Description of a synthetic graph family; generation is a pure function
    of the spec (seed included)."""

    family: str
    n: int
    m: int | None = None  # gnm only
    k: int | None = None  # branching factor / clique size
    seed: int = 0


def _pair_from_index(idx: int, n: int) -> tuple[int, int]:
    # Unrank idx in the lexicographic list of pairs (u, v), u < v. Row u
    # starts at offset(u) = u*n - u*(u+1)/2; isqrt gives the row up to
    # rounding, fixed by the adjustment steps.
    a = 2 * n - 1
    u = (a - math.isqrt(a * a - 8 * idx)) // 2

    def offset(row: int) -> int:
        return row * n - (row * (row + 1)) // 2

    while u > 0 and offset(u) > idx:
        u -= 1
    while offset(u + 1) <= idx:
        u += 1
    v = u + 1 + (idx - offset(u))
    return u, v


def generate(spec: GeneratorSpec) -> Graph:
    """Build one of the deterministic synthetic families.

    gnm samples exactly ``m`` distinct edges uniformly (no loops); path and
    star are what they say; balanced-tree attaches vertex i to (i-1)//k;
    clique-chain strings together k-cliques that share one vertex with their
    predecessor, so it needs (n-1) divisible by (k-1).
    """
    family, n = spec.family, spec.n
    if family not in GENERATOR_FAMILIES:
        raise ValueError(f"unknown family {family!r} (choose from {', '.join(GENERATOR_FAMILIES)})")
    if n < 0:
        raise ValueError("vertex count must be >= 0")

    if family == "gnm":
        if spec.m is None:
            raise ValueError("gnm requires m")
        m = spec.m
        max_m = n * (n - 1) // 2
        if not (0 <= m <= max_m):
            raise ValueError(f"gnm needs 0 <= m <= n(n-1)/2 = {max_m}, got {m}")
        rng = random.Random(spec.seed)
        picks = rng.sample(range(max_m), m) if m else []
        edges = [_pair_from_index(i, n) for i in picks]
    elif family == "path":
        edges = [(i, i + 1) for i in range(n - 1)]
    elif family == "star":
        edges = [(0, i) for i in range(1, n)]
    elif family == "balanced-tree":
        k = 2 if spec.k is None else spec.k
        if k < 1:
            raise ValueError("balanced-tree needs k >= 1")
        edges = [((i - 1) // k, i) for i in range(1, n)]
    else:  # clique-chain
        k = 3 if spec.k is None else spec.k
        if k < 2:
            raise ValueError("clique-chain needs k >= 2")
        if n > 0 and (n - 1) % (k - 1) != 0:
            raise ValueError(f"clique-chain needs (n-1) divisible by (k-1), got n={n}, k={k}")
        edges = []
        for base in range(0, n - 1, k - 1):
            block = range(base, base + k)
            edges.extend((u, v) for u in block for v in block if u < v)
    return Graph.from_edges(n, edges)
