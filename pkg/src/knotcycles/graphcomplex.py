"""Decorated graph complex of even type: canonical labeling with sign
tracking, the bigrading, the contraction coboundary, enumeration, and
cocycle verification.

A decorated graph is an oriented circle with external vertices 1..v_e in
cyclic order, internal vertices v_e+1..v_e+v_i, and an enumerated list of
edges (unordered vertex pairs).  Over the rationals a graph with a repeated
edge or any self-loop is zero, and re-enumerating edges costs the sign of
the permutation.  Rotating the external labels is an isomorphism; it costs
the parity of the induced vertex permutation times the edge-permutation
parity (without the vertex parity the two-chord diagram would be killed by
its own rotation, contradicting the known cocycle with coefficient 1/4).
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Iterable, List, Sequence, Tuple

from .exactalg import SparseMatrix, homology_rank, rational

Edge = Tuple[int, int]


def _perm_parity(perm: Sequence[int]) -> int:
    """Sign of a permutation given as a sequence of images of 0..n-1."""
    seen = [False] * len(perm)
    sign = 1
    for i in range(len(perm)):
        if seen[i]:
            continue
        j = i
        length = 0
        while not seen[j]:
            seen[j] = True
            j = perm[j]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


@dataclass(frozen=True)
class DecoratedGraph:
    """External vertices 1..v_e on the circle, internal v_e+1..v_e+v_i."""

    v_e: int
    v_i: int
    edges: Tuple[Edge, ...]

    def __post_init__(self):
        n = self.v_e + self.v_i
        if self.v_e < 1 or self.v_i < 0:
            raise ValueError("need at least one external vertex")
        for (a, b) in self.edges:
            if not (1 <= a <= n and 1 <= b <= n):
                raise ValueError(f"edge ({a},{b}) out of range 1..{n}")

    @property
    def n_edges(self) -> int:
        return len(self.edges)

    def valences(self) -> Dict[int, int]:
        val = {v: 0 for v in range(1, self.v_e + self.v_i + 1)}
        for (a, b) in self.edges:
            val[a] += 1
            val[b] += 1
        return val

    def is_admissible(self) -> bool:
        """Vertex valences and connectivity (circle arcs included)."""
        val = self.valences()
        for v in range(1, self.v_e + 1):
            if val[v] < 1:
                return False
        for v in range(self.v_e + 1, self.v_e + self.v_i + 1):
            if val[v] < 3:
                return False
        return self._connected()

    def _connected(self) -> bool:
        n = self.v_e + self.v_i
        adj = {v: set() for v in range(1, n + 1)}
        for (a, b) in self.edges:
            adj[a].add(b)
            adj[b].add(a)
        for i in range(1, self.v_e):
            adj[i].add(i + 1)
            adj[i + 1].add(i)
        if self.v_e > 1:
            adj[self.v_e].add(1)
            adj[1].add(self.v_e)
        seen = {1}
        stack = [1]
        while stack:
            v = stack.pop()
            for w in adj[v]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        return len(seen) == n

    def grading(self) -> Tuple[int, int]:
        """(order, degree) = (e - v_i, 2e - 3 v_i - v_e)."""
        e = self.n_edges
        return e - self.v_i, 2 * e - 3 * self.v_i - self.v_e

    def __repr__(self):
        es = ",".join(f"{{{a},{b}}}" for a, b in self.edges)
        return f"G(ve={self.v_e},vi={self.v_i};{es})"


def grading(g: DecoratedGraph) -> Tuple[int, int]:
    return g.grading()


def canonicalize(g: DecoratedGraph) -> Tuple[DecoratedGraph | None, int]:
    """Canonical representative and relative sign; (None, 0) for a graph
    that is zero (self-loop, doubled edge, or odd self-symmetry)."""
    norm_edges = []
    for (a, b) in g.edges:
        if a == b:
            return None, 0
        norm_edges.append((min(a, b), max(a, b)))
    if len(set(norm_edges)) != len(norm_edges):
        return None, 0

    best_key = None
    best_variants: List[int] = []
    n_int = g.v_i
    for k in range(g.v_e):
        # rotation: external i -> ((i-1+k) mod v_e)+1, parity (v_e-1)*k
        rot_sign = -1 if ((g.v_e - 1) * k) % 2 else 1
        for perm in itertools.permutations(range(n_int)):
            def relabel(v, _k=k, _perm=perm):
                if v <= g.v_e:
                    return (v - 1 + _k) % g.v_e + 1
                return g.v_e + 1 + _perm[v - g.v_e - 1]

            mapped = [tuple(sorted((relabel(a), relabel(b))))
                      for (a, b) in norm_edges]
            order = sorted(range(len(mapped)), key=lambda i: mapped[i])
            key = tuple(mapped[i] for i in order)
            sign = rot_sign * _perm_parity(order)
            if best_key is None or key < best_key:
                best_key = key
                best_variants = [sign]
            elif key == best_key:
                best_variants.append(sign)
    if 1 in best_variants and -1 in best_variants:
        return None, 0
    canon = DecoratedGraph(g.v_e, g.v_i, best_key)
    return canon, best_variants[0]


class GraphSum:
    """Rational combination of canonical decorated graphs, one bidegree."""

    def __init__(self, terms: Dict[DecoratedGraph, Fraction] | None = None):
        self.terms: Dict[DecoratedGraph, Fraction] = {}
        if terms:
            for g, c in terms.items():
                self.add(g, c)

    def add(self, g: DecoratedGraph, c) -> None:
        c = rational(c)
        if c == 0:
            return
        canon, sign = canonicalize(g)
        if sign == 0:
            return
        cur = self.terms.get(canon, Fraction(0)) + c * sign
        if cur == 0:
            self.terms.pop(canon, None)
        else:
            self.terms[canon] = cur

    @classmethod
    def from_terms(cls, pairs: Iterable[Tuple[Fraction, DecoratedGraph]]):
        out = cls()
        for c, g in pairs:
            out.add(g, c)
        return out

    def is_zero(self) -> bool:
        return not self.terms

    def __add__(self, other: "GraphSum") -> "GraphSum":
        out = GraphSum(dict(self.terms))
        for g, c in other.terms.items():
            cur = out.terms.get(g, Fraction(0)) + c
            if cur == 0:
                out.terms.pop(g, None)
            else:
                out.terms[g] = cur
        return out

    def scale(self, c) -> "GraphSum":
        c = rational(c)
        return GraphSum({g: v * c for g, v in self.terms.items()})

    def grading(self) -> Tuple[int, int] | None:
        gradings = {g.grading() for g in self.terms}
        if not gradings:
            return None
        if len(gradings) > 1:
            raise ValueError(f"inhomogeneous graph sum: {gradings}")
        return gradings.pop()

    def __eq__(self, other):
        return isinstance(other, GraphSum) and self.terms == other.terms

    def __repr__(self):
        if not self.terms:
            return "0"
        return " + ".join(
            f"({c})*{g}" for g, c in sorted(self.terms.items(),
                                            key=lambda kv: repr(kv[0])))


# ---------------------------------------------------------------------------
# contractions

def _contract_arc(g: DecoratedGraph, i: int, j: int) -> DecoratedGraph:
    """Merge external vertex j into external vertex i (j = i+1, or the
    closing arc (v_e, 1) where the last vertex merges into 1)."""
    removed = j if j == i + 1 else i  # closing arc removes vertex v_e

    def relabel(v):
        if v == removed:
            return min(i, j)
        return v - 1 if v > removed else v

    edges = tuple((relabel(a), relabel(b)) for (a, b) in g.edges)
    return DecoratedGraph(g.v_e - 1, g.v_i, edges)


def _contract_edge(g: DecoratedGraph, l: int) -> DecoratedGraph | None:
    """Contract edge l (1-based) joining an external and internal vertex;
    the internal vertex is absorbed into the external one."""
    a, b = g.edges[l - 1]
    a_ext = a <= g.v_e
    b_ext = b <= g.v_e
    if a_ext == b_ext:
        return None  # external-external and internal-internal not contracted
    ext, internal = (a, b) if a_ext else (b, a)

    def relabel(v):
        if v == internal:
            return ext
        return v - 1 if v > internal else v

    edges = tuple((relabel(x), relabel(y))
                  for m, (x, y) in enumerate(g.edges) if m != l - 1)
    return DecoratedGraph(g.v_e, g.v_i - 1, edges)


def cobound_graph(g: DecoratedGraph) -> GraphSum:
    """Signed sum of arc contractions and edge contractions of one graph."""
    out = GraphSum()
    if g.v_e >= 2:
        for i in range(1, g.v_e):
            sign = -1 if (i + 1) % 2 else 1
            out.add(_contract_arc(g, i, i + 1), sign)
        sign = -1 if (g.v_e + 1) % 2 else 1
        out.add(_contract_arc(g, g.v_e, 1), sign)
    for l in range(1, g.n_edges + 1):
        contracted = _contract_edge(g, l)
        if contracted is None:
            continue
        sign = -1 if (l + g.v_e) % 2 else 1
        out.add(contracted, sign)
    return out


def cobound(s: GraphSum) -> GraphSum:
    s.grading()  # raises on inhomogeneous input
    out = GraphSum()
    for g, c in s.terms.items():
        out = out + cobound_graph(g).scale(c)
    return out


def cocycle_check(s: GraphSum) -> bool:
    return cobound(s).is_zero()


# ---------------------------------------------------------------------------
# enumeration and cohomology

def enumerate_graphs(max_edges: int, order: int, degree: int
                     ) -> List[DecoratedGraph]:
    """All canonical admissible graphs of the bidegree with e <= max_edges."""
    out = {}
    for e in range(max(order, 1), max_edges + 1):
        v_i = e - order
        if v_i < 0:
            continue
        v_e = 2 * e - 3 * v_i - degree
        if v_e < 1:
            continue
        for g in _raw_graphs(v_e, v_i, e):
            canon, sign = canonicalize(g)
            if sign == 0:
                continue
            out.setdefault(canon, None)
    return sorted(out, key=repr)


def _raw_graphs(v_e: int, v_i: int, e: int):
    n = v_e + v_i
    pairs = [(a, b) for a in range(1, n + 1) for b in range(a + 1, n + 1)]
    for combo in itertools.combinations(pairs, e):
        g = DecoratedGraph(v_e, v_i, combo)
        if g.is_admissible():
            yield g


def all_graphs_up_to(max_edges: int) -> List[DecoratedGraph]:
    """Every canonical admissible graph with at most max_edges edges."""
    out = {}
    for e in range(1, max_edges + 1):
        for v_i in range(0, e):
            for v_e in range(1, 2 * e - 2 * v_i + 1):
                if 3 * v_i > 2 * e - v_e:
                    continue
                for g in _raw_graphs(v_e, v_i, e):
                    canon, sign = canonicalize(g)
                    if sign != 0:
                        out.setdefault(canon, None)
    return sorted(out, key=repr)


def cobound_matrix(max_edges: int, order: int, degree: int
                   ) -> Tuple[SparseMatrix, List[DecoratedGraph],
                              List[DecoratedGraph]]:
    """Matrix of the coboundary from bidegree (order, degree) to
    (order, degree+1) on the e <= max_edges bases."""
    dom = enumerate_graphs(max_edges, order, degree)
    cod = enumerate_graphs(max_edges, order, degree + 1)
    index = {g: i for i, g in enumerate(cod)}
    cols = []
    for g in dom:
        img = cobound_graph(g)
        col = {}
        for h, c in img.terms.items():
            if h not in index:
                raise ValueError(
                    f"coboundary image {h!r} missing from target basis; "
                    f"raise max_edges")
            col[index[h]] = c
        cols.append(col)
    return SparseMatrix.from_columns(len(cod), cols), dom, cod


def cohomology_rank(order: int, degree: int, max_edges: int) -> int:
    """Rank of the contraction cohomology at (order, degree)."""
    d_in, _, _ = cobound_matrix(max_edges, order, degree - 1)
    d_out, _, _ = cobound_matrix(max_edges, order, degree)
    return homology_rank(d_in, d_out)


# ---------------------------------------------------------------------------
# the two reference cocycles

def chord_diagram_graph() -> DecoratedGraph:
    return DecoratedGraph(4, 0, ((1, 3), (2, 4)))


def tripod_graph() -> DecoratedGraph:
    return DecoratedGraph(3, 1, ((1, 4), (2, 4), (3, 4)))


def classical_cocycle() -> GraphSum:
    """The two-term degree-(2, 0) cocycle: 1/4 chord - 1/3 tripod."""
    return GraphSum.from_terms([
        (Fraction(1, 4), chord_diagram_graph()),
        (Fraction(-1, 3), tripod_graph()),
    ])


def star_graph() -> DecoratedGraph:
    """Four circle vertices joined to one internal vertex; the edge
    enumeration (1,5),(4,5),(3,5),(2,5) is part of the data."""
    return DecoratedGraph(4, 1, ((1, 5), (4, 5), (3, 5), (2, 5)))


def second_nontrivalent_graph() -> DecoratedGraph:
    return DecoratedGraph(5, 0, ((1, 3), (1, 4), (2, 5)))


def longoni_cocycle() -> GraphSum:
    """The (3, 1) cocycle: star graph + 2 * five-vertex graph."""
    return GraphSum.from_terms([
        (Fraction(1), star_graph()),
        (Fraction(2), second_nontrivalent_graph()),
    ])


# ---------------------------------------------------------------------------
# serialization

def graph_to_json(g: DecoratedGraph) -> dict:
    return {"v_e": g.v_e, "v_i": g.v_i,
            "edges": [[a, b] for (a, b) in g.edges]}


def graph_from_json(obj) -> DecoratedGraph:
    return DecoratedGraph(obj["v_e"], obj["v_i"],
                          tuple((a, b) for a, b in obj["edges"]))


def sum_to_json(s: GraphSum) -> list:
    return [{"coeff": str(c), "graph": graph_to_json(g)}
            for g, c in sorted(s.terms.items(), key=lambda kv: repr(kv[0]))]


def sum_from_json(data) -> GraphSum:
    if isinstance(data, str):
        data = json.loads(data)
    out = GraphSum()
    for item in data:
        out.add(graph_from_json(item["graph"]), rational(item["coeff"]))
    return out
