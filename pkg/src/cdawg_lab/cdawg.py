"""Compact directed acyclic word graphs.

The CDAWG of ``T`` is built in two passes:

1. A compacted suffix tree of ``T`` is built by naive suffix insertion
   (quadratic in the worst case). No end sentinel is appended, so every
   suffix of ``T`` gets an explicit node carrying a suffix flag.
2. Suffix-tree nodes whose subtrees are isomorphic (same suffix flag, same
   labelled children) are merged by hash-consing bottom up. With suffix
   flags included, isomorphic subtrees are exactly the nodes that share an
   end-position set, so the quotient graph is the CDAWG.

Each CDAWG node keeps the longest string of its class; those strings are the
maximal substrings of ``T``. Edge labels are stored as 1-based inclusive
spans into the text.
"""

import json
from dataclasses import dataclass

__all__ = [
    "FORMAT_VERSION",
    "IndexFormatError",
    "Node",
    "Edge",
    "SizeStats",
    "Cdawg",
    "build",
    "stats",
    "count_pattern",
    "locate_pattern",
    "export_dot",
    "serialize",
    "deserialize",
]

FORMAT_VERSION = 1


class IndexFormatError(ValueError):
    """A serialized index is malformed or has the wrong format version."""


@dataclass(frozen=True)
class Node:
    id: int
    length: int      # length of the longest string in the class
    end: int         # a 1-based end position of that string in the text (0 for the source)
    count: int       # number of end positions, i.e. occurrences
    is_suffix: bool  # the class strings are suffixes of the text


@dataclass(frozen=True)
class Edge:
    source: int
    target: int
    begin: int  # 1-based, inclusive
    end: int


@dataclass(frozen=True)
class SizeStats:
    n: int
    edge_count: int
    node_count: int
    alphabet_size: int

    def as_dict(self):
        return {
            "n": self.n,
            "e": self.edge_count,
            "nodes": self.node_count,
            "sigma": self.alphabet_size,
        }


class _SuffixTree:
    """Compacted suffix tree without a terminal sentinel."""

    def __init__(self, t):
        self.text = t
        # per node: children {char: (start, stop, child)} with 0-based half-open spans
        self.children = [{}]
        self.depth = [0]
        self.suffix = [True]
        self.end = [0]
        for j in range(len(t)):
            self._insert(j)

    def _new_node(self, depth, end):
        self.children.append({})
        self.depth.append(depth)
        self.suffix.append(False)
        self.end.append(end)
        return len(self.depth) - 1

    def _insert(self, j):
        t = self.text
        n = len(t)
        node = 0
        pos = j
        while pos < n:
            c = t[pos]
            edge = self.children[node].get(c)
            if edge is None:
                leaf = self._new_node(n - j, n)
                self.children[node][c] = (pos, n, leaf)
                self.suffix[leaf] = True
                return
            start, stop, child = edge
            length = stop - start
            avail = min(length, n - pos)
            if t[start:start + avail] == t[pos:pos + avail]:
                lcp = avail
            else:
                lcp = 1
                while t[start + lcp] == t[pos + lcp]:
                    lcp += 1
            if lcp == length:
                node = child
                pos += length
                continue
            mid_depth = self.depth[node] + lcp
            mid = self._new_node(mid_depth, j + mid_depth)
            self.children[node][c] = (start, start + lcp, mid)
            self.children[mid][t[start + lcp]] = (start + lcp, stop, child)
            if pos + lcp == n:
                self.suffix[mid] = True
            else:
                leaf = self._new_node(n - j, n)
                self.children[mid][t[pos + lcp]] = (pos + lcp, n, leaf)
                self.suffix[leaf] = True
            return
        self.suffix[node] = True

    def postorder(self):
        order = []
        stack = [(0, False)]
        while stack:
            node, done = stack.pop()
            if done:
                order.append(node)
                continue
            stack.append((node, True))
            for _, _, child in self.children[node].values():
                stack.append((child, False))
        return order


class Cdawg:
    """An immutable CDAWG over ``text``.

    ``nodes[k]`` is the node with id ``k``; the source has id 0 and the sink
    has the largest id. ``edges[k]`` maps the first character of each
    out-edge label of node ``k`` to its :class:`Edge`.
    """

    def __init__(self, text, nodes, edges):
        self.text = text
        self.nodes = tuple(nodes)
        self.edges = tuple(dict(e) for e in edges)

    @property
    def source(self):
        return 0

    @property
    def sink(self):
        return len(self.nodes) - 1

    @property
    def edge_count(self):
        return sum(len(out) for out in self.edges)

    @property
    def node_count(self):
        return len(self.nodes)

    def out_degree(self, node):
        return len(self.edges[node])

    def node_string(self, node):
        nd = self.nodes[node]
        return self.text[nd.end - nd.length:nd.end]

    def label(self, edge):
        return self.text[edge.begin - 1:edge.end]

    def node_strings(self):
        return [self.node_string(k) for k in range(len(self.nodes))]

    def all_edges(self):
        for out in self.edges:
            for c in sorted(out):
                yield out[c]

    def find(self, node_str):
        """Id of the node whose canonical string is ``node_str``, else None."""
        for k in range(len(self.nodes)):
            if self.nodes[k].length == len(node_str) and self.node_string(k) == node_str:
                return k
        return None

    def _walk(self, p):
        """Follow ``p`` from the source.

        Returns ``(node, spelled)`` where ``node`` is reached after finishing
        the edge on which ``p`` ends and ``spelled`` is the length of the
        string read along that path, or None if ``p`` is not a substring.
        """
        t = self.text
        node = self.source
        matched = 0
        while matched < len(p):
            edge = self.edges[node].get(p[matched])
            if edge is None:
                return None
            size = edge.end - edge.begin + 1
            step = min(size, len(p) - matched)
            if t[edge.begin - 1:edge.begin - 1 + step] != p[matched:matched + step]:
                return None
            matched += step
            node = edge.target
            if step < size:
                return node, matched + size - step
        return node, matched

    def count(self, p):
        hit = self._walk(p)
        return 0 if hit is None else self.nodes[hit[0]].count

    def locate(self, p):
        hit = self._walk(p)
        if hit is None:
            return []
        n = len(self.text)
        starts = []
        stack = [hit]
        while stack:
            node, depth = stack.pop()
            if self.nodes[node].is_suffix:
                starts.append(n - depth + 1)
            for edge in self.edges[node].values():
                stack.append((edge.target, depth + edge.end - edge.begin + 1))
        starts.sort()
        return starts

    def __eq__(self, other):
        if not isinstance(other, Cdawg):
            return NotImplemented
        return (self.text, self.nodes, self.edges) == (other.text, other.nodes, other.edges)

    def __repr__(self):
        return f"Cdawg(n={len(self.text)}, nodes={len(self.nodes)}, edges={self.edge_count})"


def build(t):
    """Build the CDAWG of a non-empty string ``t``."""
    if not t:
        raise ValueError("cannot build a CDAWG of the empty string")
    st = _SuffixTree(t)

    # hash-cons isomorphic subtrees
    class_of = [0] * len(st.depth)
    signatures = {}
    rep = []
    for node in st.postorder():
        sig = (
            st.suffix[node],
            tuple(sorted(
                (c, stop - start, class_of[child])
                for c, (start, stop, child) in st.children[node].items()
            )),
        )
        cls = signatures.get(sig)
        if cls is None:
            cls = len(rep)
            signatures[sig] = cls
            rep.append(node)
        elif st.depth[node] > st.depth[rep[cls]]:
            rep[cls] = node
        class_of[node] = cls

    # renumber classes so that the source is 0 and the sink is last
    order = sorted(range(len(rep)), key=lambda c: (st.depth[rep[c]], st.end[rep[c]]))
    new_id = {c: k for k, c in enumerate(order)}

    edges = []
    for c in order:
        out = {}
        for ch, (start, stop, child) in st.children[rep[c]].items():
            out[ch] = Edge(new_id[c], new_id[class_of[child]], start + 1, stop)
        edges.append(out)

    counts = [0] * len(order)
    for k in reversed(range(len(order))):
        counts[k] = int(st.suffix[rep[order[k]]]) + sum(counts[e.target] for e in edges[k].values())

    nodes = [
        Node(k, st.depth[rep[c]], st.end[rep[c]], counts[k], st.suffix[rep[c]])
        for k, c in enumerate(order)
    ]
    return Cdawg(t, nodes, edges)


def stats(g):
    return SizeStats(len(g.text), g.edge_count, g.node_count, len(set(g.text)))


def count_pattern(g, p):
    """Number of occurrences of ``p`` in the indexed text (``n + 1`` for the empty pattern)."""
    return g.count(p)


def locate_pattern(g, p):
    """Ascending 1-based start positions of ``p`` in the indexed text."""
    return g.locate(p)


def _dot_quote(s):
    return '"' + s.replace("\\", "\\\\").replace('"', '\\"').replace("\n", "\\n") + '"'


def export_dot(g):
    """Render ``g`` in Graphviz DOT. One line per node, one line per edge."""
    lines = ["digraph cdawg {", "  rankdir=LR;"]
    for k in range(g.node_count):
        label = g.node_string(k) or "\u03b5"
        shape = "doublecircle" if k == g.sink else "circle"
        lines.append(f"  n{k} [label={_dot_quote(label)}, shape={shape}];")
    for edge in g.all_edges():
        lines.append(f"  n{edge.source} -> n{edge.target} [label={_dot_quote(g.label(edge))}];")
    lines.append("}")
    return "\n".join(lines) + "\n"


def serialize(g):
    doc = {
        "format_version": FORMAT_VERSION,
        "text": g.text,
        "nodes": [
            {"id": nd.id, "length": nd.length, "end": nd.end, "count": nd.count, "suffix": nd.is_suffix}
            for nd in g.nodes
        ],
        "edges": [
            {"source": e.source, "target": e.target, "begin": e.begin, "end": e.end}
            for e in g.all_edges()
        ],
    }
    return json.dumps(doc, separators=(",", ":"), ensure_ascii=True).encode("ascii")


def _require(cond, msg):
    if not cond:
        raise IndexFormatError(msg)


def deserialize(doc):
    """Inverse of :func:`serialize`. Raises IndexFormatError on bad input."""
    try:
        data = json.loads(doc)
    except (UnicodeDecodeError, json.JSONDecodeError) as exc:
        raise IndexFormatError(f"not a serialized index: {exc}") from None
    _require(isinstance(data, dict), "index document must be an object")
    _require("format_version" in data, "missing format_version")
    _require(data["format_version"] == FORMAT_VERSION,
             f"unsupported format_version {data['format_version']!r}")
    for key in ("text", "nodes", "edges"):
        _require(key in data, f"missing field {key!r}")
    text = data["text"]
    _require(isinstance(text, str) and text, "text must be a non-empty string")
    n = len(text)

    nodes = []
    try:
        for k, raw in enumerate(data["nodes"]):
            nd = Node(int(raw["id"]), int(raw["length"]), int(raw["end"]),
                      int(raw["count"]), bool(raw["suffix"]))
            _require(nd.id == k, "node ids must be 0..N-1 in order")
            _require(0 <= nd.length <= nd.end <= n, f"node {k} span out of range")
            nodes.append(nd)
        edges = [{} for _ in nodes]
        for raw in data["edges"]:
            e = Edge(int(raw["source"]), int(raw["target"]), int(raw["begin"]), int(raw["end"]))
            _require(0 <= e.source < len(nodes) and 0 <= e.target < len(nodes),
                     "edge endpoint out of range")
            _require(1 <= e.begin <= e.end <= n, "edge label span out of range")
            _require(nodes[e.source].length + e.end - e.begin + 1 <= nodes[e.target].length,
                     "edge label longer than its target allows")
            first = text[e.begin - 1]
            _require(first not in edges[e.source], f"node {e.source} has two edges starting with {first!r}")
            edges[e.source][first] = e
    except (KeyError, TypeError, ValueError) as exc:
        if isinstance(exc, IndexFormatError):
            raise
        raise IndexFormatError(f"malformed index: {exc!r}") from None
    _require(len(nodes) >= 2, "an index needs a source and a sink")
    _require(nodes[0].length == 0, "node 0 must be the source")
    _require(nodes[-1].length == n, "last node must be the sink")
    return Cdawg(text, nodes, edges)
