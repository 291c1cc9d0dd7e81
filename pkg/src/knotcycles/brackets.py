"""Bracket-expression subcomplex of the first page of the homology spectral
sequence for long-knot spaces, with the doubling differential.

Trees are nested tuples: a leaf is an int variable index, an internal node is
a pair ``(left, right)`` standing for the bracket of its children.  A monomial
is an ordered product of such factor trees; a factor that is a single leaf is
a free variable.

Sign conventions (bracket symmetry, factor commutativity, Leibniz expansion)
are not forced by a single formula; they are collected in a
:class:`SignConvention` and the shipped default is the unique table (found by
exhaustive search, see :func:`search_conventions`) under which the doubling
differential squares to zero and the canonical five-variable cycle closes.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Iterable, List, Sequence, Tuple

from .exactalg import SparseMatrix, homology_rank, rank, rational

Tree = object  # int leaf | (Tree, Tree) node


# ---------------------------------------------------------------------------
# tree helpers

def is_leaf(t) -> bool:
    return isinstance(t, int)


def q_of(t) -> int:
    """Number of bracket pairs (internal nodes) in a tree."""
    if is_leaf(t):
        return 0
    return 1 + q_of(t[0]) + q_of(t[1])


def leaves_of(t) -> Tuple[int, ...]:
    if is_leaf(t):
        return (t,)
    return leaves_of(t[0]) + leaves_of(t[1])


def min_leaf(t) -> int:
    if is_leaf(t):
        return t
    return min(min_leaf(t[0]), min_leaf(t[1]))


def map_leaves(t, fn):
    if is_leaf(t):
        return fn(t)
    return (map_leaves(t[0], fn), map_leaves(t[1], fn))


# ---------------------------------------------------------------------------
# sign conventions

@dataclass(frozen=True)
class SignConvention:
    """Sign table for the even-ambient-dimension bracket calculus.

    Each triple gives exponent bits (c0, c1, c2) of the sign
    ``(-1) ** (c0 + c1*q*q' + c2*(q+q'))`` where q, q' are the bracket counts
    of the two subexpressions taking part in the move.
    """

    node_swap: Tuple[int, int, int] = (1, 0, 0)
    factor_swap: Tuple[int, int, int] = (0, 0, 0)
    # [C, A*B] = [C,A]*B + s * A*[C,B];  s uses (qA, qC) below
    leibniz: Tuple[int, int, int] = (0, 0, 0)
    # sign s in [[A,B],C] = [A,[B,C]] + s(A,B) [B,[A,C]]:
    # "minus" | "plus" | "graded" (s = -(-1)^((qA+1)(qB+1))) | "koszul"
    # (s = -(-1)^(qA qB))
    jacobi_rule: str = "minus"
    parity: str = "even"

    def sign_node_swap(self, qL: int, qR: int) -> int:
        c0, c1, c2 = self.node_swap
        return -1 if (c0 + c1 * qL * qR + c2 * (qL + qR)) % 2 else 1

    def sign_factor_swap(self, qF: int, qG: int) -> int:
        c0, c1, c2 = self.factor_swap
        return -1 if (c0 + c1 * qF * qG + c2 * (qF + qG)) % 2 else 1

    def sign_leibniz(self, qA: int, qC: int) -> int:
        c0, c1, c2 = self.leibniz
        return -1 if (c0 + c1 * qA * (qC + 1) + c2 * qA) % 2 else 1

    def sign_jacobi(self, qA: int, qB: int) -> int:
        """s in [[A,B],C] = [A,[B,C]] + s [B,[A,C]]."""
        if self.jacobi_rule == "minus":
            return -1
        if self.jacobi_rule == "plus":
            return 1
        if self.jacobi_rule == "graded":
            return -1 if ((qA + 1) * (qB + 1)) % 2 == 0 else 1
        if self.jacobi_rule == "koszul":
            return -1 if (qA * qB) % 2 == 0 else 1
        raise ValueError(f"unknown jacobi rule {self.jacobi_rule!r}")


DEFAULT_CONVENTION = SignConvention()

_PROD = "*"  # tag for an unexpanded product node inside a working tree


def _expand(t, conv: SignConvention) -> List[Tuple[int, Tuple[Tree, ...]]]:
    """Rewrite a working tree (which may contain product tags) into a signed
    sum of plain factor tuples, Leibniz-expanding products inside brackets."""
    if is_leaf(t):
        return [(1, (t,))]
    if t[0] == _PROD:
        out = []
        for sa, fa in _expand(t[1], conv):
            for sb, fb in _expand(t[2], conv):
                out.append((sa * sb, fa + fb))
        return out
    out = []
    for sl, lf in _expand(t[0], conv):
        for sr, rf in _expand(t[1], conv):
            if len(lf) == 1 and len(rf) == 1:
                out.append((sl * sr, ((lf[0], rf[0]),)))
                continue
            if len(lf) > 1:
                # [A*B, C]: swap to [C, A*B] first, then expand on the right
                qAB = sum(q_of(f) for f in lf)
                for s2, facs in _leibniz_right(rf, lf, conv):
                    q_rf = sum(q_of(f) for f in rf)
                    s_swap = conv.sign_node_swap(qAB, q_rf)
                    out.append((sl * sr * s_swap * s2, facs))
            else:
                for s2, facs in _leibniz_right(lf, rf, conv):
                    out.append((sl * sr * s2, facs))
    return out


def _leibniz_right(cf: Tuple[Tree, ...], prod: Tuple[Tree, ...],
                   conv: SignConvention):
    """Expand [C, A*B*...] where cf is a single-factor tuple (C,)."""
    if len(cf) != 1:
        raise ValueError("nested products on both sides of a bracket")
    C = cf[0]
    qC = q_of(C)
    if len(prod) == 1:
        return [(1, ((C, prod[0]),))]
    A, rest = prod[0], prod[1:]
    out = []
    for s, facs in _leibniz_right(cf, rest, conv):
        out.append((conv.sign_leibniz(q_of(A), qC) * s, (A,) + facs))
    out.append((1, ((C, A),) + rest))
    return out


def _canon_tree(t, conv: SignConvention) -> Tuple[int, Tree]:
    """Orient every node so its left child carries the least leaf."""
    if is_leaf(t):
        return 1, t
    sl, L = _canon_tree(t[0], conv)
    sr, R = _canon_tree(t[1], conv)
    s = sl * sr
    if min_leaf(R) < min_leaf(L):
        s *= conv.sign_node_swap(q_of(L), q_of(R))
        L, R = R, L
    return s, (L, R)


def _canon_factors(factors: Sequence[Tree], conv: SignConvention
                   ) -> Tuple[int, Tuple[Tree, ...]]:
    sign = 1
    canon = []
    for f in factors:
        s, cf = _canon_tree(f, conv)
        sign *= s
        canon.append(cf)
    # insertion sort by least leaf, one adjacent transposition at a time
    for i in range(1, len(canon)):
        j = i
        while j > 0 and min_leaf(canon[j]) < min_leaf(canon[j - 1]):
            sign *= conv.sign_factor_swap(q_of(canon[j - 1]), q_of(canon[j]))
            canon[j - 1], canon[j] = canon[j], canon[j - 1]
            j -= 1
    return sign, tuple(canon)


# ---------------------------------------------------------------------------
# monomials and sums

@dataclass(frozen=True)
class BracketMonomial:
    """Canonical product of bracket trees over variables {1..p}."""

    factors: Tuple[Tree, ...]
    parity: str = "even"

    def __post_init__(self):
        seen = []
        for f in self.factors:
            seen.extend(leaves_of(f))
        p = len(seen)
        if sorted(seen) != list(range(1, p + 1)):
            raise ValueError(
                f"variables must be exactly 1..{p} without repeats: {seen}")

    @property
    def p(self) -> int:
        return sum(len(leaves_of(f)) for f in self.factors)

    @property
    def q(self) -> int:
        return sum(q_of(f) for f in self.factors)

    def all_in_brackets(self) -> bool:
        return all(not is_leaf(f) for f in self.factors)

    def __repr__(self):
        return "*".join(_tree_str(f) for f in self.factors)


def _tree_str(t) -> str:
    if is_leaf(t):
        return f"x{t}"
    return f"[{_tree_str(t[0])},{_tree_str(t[1])}]"


def monomial(factors: Sequence[Tree], parity: str = "even",
             conv: SignConvention = DEFAULT_CONVENTION
             ) -> Tuple[int, BracketMonomial]:
    """Canonicalize a product of plain trees; returns (sign, monomial)."""
    s, canon = _canon_factors(tuple(factors), conv)
    return s, BracketMonomial(canon, parity)


class BracketSum:
    """Formal rational combination of canonical monomials of one bidegree."""

    def __init__(self, terms: Dict[BracketMonomial, Fraction] | None = None):
        self.terms: Dict[BracketMonomial, Fraction] = {}
        if terms:
            for m, c in terms.items():
                self._add(m, c)

    def _add(self, m: BracketMonomial, c: Fraction):
        c = rational(c)
        if c == 0:
            return
        cur = self.terms.get(m, Fraction(0)) + c
        if cur == 0:
            self.terms.pop(m, None)
        else:
            self.terms[m] = cur

    @classmethod
    def from_terms(cls, raw: Iterable[Tuple[Fraction, Sequence[Tree]]],
                   parity: str = "even",
                   conv: SignConvention = DEFAULT_CONVENTION) -> "BracketSum":
        out = cls()
        for c, factors in raw:
            expanded = []
            for f in factors:
                expanded.append(_expand(f, conv))
            # factors are multiplied left to right; products expand per factor
            for combo in itertools.product(*expanded):
                sign = 1
                facs: Tuple[Tree, ...] = ()
                for s, fl in combo:
                    sign *= s
                    facs = facs + fl
                s2, mono = monomial(facs, parity, conv)
                out._add(mono, rational(c) * sign * s2)
        return out

    def is_zero(self) -> bool:
        return not self.terms

    def __add__(self, other: "BracketSum") -> "BracketSum":
        out = BracketSum(dict(self.terms))
        for m, c in other.terms.items():
            out._add(m, c)
        return out

    def scale(self, c) -> "BracketSum":
        c = rational(c)
        return BracketSum({m: v * c for m, v in self.terms.items()})

    def __eq__(self, other):
        return isinstance(other, BracketSum) and self.terms == other.terms

    def __repr__(self):
        if not self.terms:
            return "0"
        return " + ".join(f"({c})*{m}" for m, c in sorted(
            self.terms.items(), key=lambda kv: repr(kv[0])))


def normalize(raw: Iterable[Tuple[Fraction, Sequence[Tree]]],
              parity: str = "even",
              conv: SignConvention = DEFAULT_CONVENTION) -> BracketSum:
    """Public entry: canonicalize a formal sum of (coefficient, factors)."""
    return BracketSum.from_terms(raw, parity, conv)


# ---------------------------------------------------------------------------
# structural operations

def rank_of_var(m: BracketMonomial, i: int) -> int:
    """Leaf count of the top-level bracket factor containing x_i, else 0."""
    if not (1 <= i <= m.p):
        raise IndexError(f"variable index {i} out of range 1..{m.p}")
    for f in m.factors:
        if i in leaves_of(f):
            return 0 if is_leaf(f) else len(leaves_of(f))
    raise AssertionError("unreachable: variable not found")


def _remove_leaf(t, i):
    """Delete leaf i; a node left with one child collapses to that child."""
    if is_leaf(t):
        return None if t == i else t
    L = _remove_leaf(t[0], i)
    R = _remove_leaf(t[1], i)
    if L is None:
        return R
    if R is None:
        return L
    return (L, R)


def remove_var(m: BracketMonomial, i: int) -> BracketMonomial:
    if not (1 <= i <= m.p):
        raise IndexError(f"variable index {i} out of range 1..{m.p}")
    factors = []
    for f in m.factors:
        g = _remove_leaf(f, i)
        if g is not None:
            factors.append(map_leaves(g, lambda k: k - 1 if k > i else k))
    _, mono = monomial(factors, m.parity)
    return mono


def delta_i(m: BracketMonomial, i: int,
            conv: SignConvention = DEFAULT_CONVENTION) -> BracketSum:
    """Doubling map: 0 prepends a free variable, p+1 appends one, and for
    1 <= i <= p the variable x_i becomes the product x_i * x_{i+1}."""
    p = m.p
    if not (0 <= i <= p + 1):
        raise IndexError(f"doubling index {i} out of range 0..{p + 1}")
    if i == 0:
        factors = (1,) + tuple(
            map_leaves(f, lambda k: k + 1) for f in m.factors)
        return BracketSum.from_terms([(Fraction(1), factors)], m.parity, conv)
    if i == p + 1:
        factors = tuple(m.factors) + (p + 1,)
        return BracketSum.from_terms([(Fraction(1), factors)], m.parity, conv)

    def subst(k):
        if k < i:
            return k
        if k == i:
            return (_PROD, i, i + 1)
        return k + 1

    factors = tuple(map_leaves(f, subst) for f in m.factors)
    return BracketSum.from_terms([(Fraction(1), factors)], m.parity, conv)


def d1(s: BracketSum, conv: SignConvention = DEFAULT_CONVENTION) -> BracketSum:
    """Alternating sum of the doubling maps over i = 0 .. p+1."""
    out = BracketSum()
    for m, c in s.terms.items():
        for i in range(0, m.p + 2):
            sign = -1 if i % 2 else 1
            out = out + delta_i(m, i, conv).scale(c * sign)
    return out


def d1_monomial(m: BracketMonomial,
                conv: SignConvention = DEFAULT_CONVENTION) -> BracketSum:
    return d1(BracketSum({m: Fraction(1)}), conv)


# ---------------------------------------------------------------------------
# bases and ranks

def _canonical_trees(leafset: Tuple[int, ...]) -> List[Tree]:
    """All canonical bracket trees on an ordered leaf set."""
    if len(leafset) == 1:
        return [leafset[0]]
    lo = leafset[0]
    rest = leafset[1:]
    out = []
    for r in range(0, len(rest)):
        for right_set in itertools.combinations(rest, len(rest) - r):
            left_set = (lo,) + tuple(x for x in rest if x not in right_set)
            if not right_set or not left_set:
                continue
            for L in _canonical_trees(left_set):
                for R in _canonical_trees(right_set):
                    out.append((L, R))
    # combinations above can repeat left/right splits; dedupe structurally
    seen = set()
    uniq = []
    for t in out:
        if t not in seen:
            seen.add(t)
            uniq.append(t)
    return uniq


def _set_partitions(items: Tuple[int, ...], min_block: int):
    """Partitions of items into blocks each of size >= min_block."""
    if not items:
        yield []
        return
    first, rest = items[0], items[1:]
    for k in range(min_block - 1, len(rest) + 1):
        for others in itertools.combinations(rest, k):
            block = (first,) + others
            remaining = tuple(x for x in rest if x not in others)
            for sub in _set_partitions(remaining, min_block):
                yield [block] + sub


def e1_basis(p: int, q: int, parity: str = "even") -> List[BracketMonomial]:
    """All canonical monomials of arity p with q brackets, every variable
    inside a bracket and no product inside a bracket."""
    if p < 1 or q < 1:
        return []
    n_factors = p - q
    if n_factors < 1 or 2 * n_factors > p:
        return []
    out = []
    for part in _set_partitions(tuple(range(1, p + 1)), 2):
        if len(part) != n_factors:
            continue
        tree_choices = [_canonical_trees(tuple(sorted(b))) for b in part]
        for combo in itertools.product(*tree_choices):
            s, mono = monomial(combo, parity)
            assert s == 1, "basis representatives are already canonical"
            out.append(mono)
    out.sort(key=repr)
    return out


def all_monomials(p: int, parity: str = "even") -> List[BracketMonomial]:
    """Every canonical monomial of arity p (free variables allowed)."""
    out = []
    for part in _set_partitions(tuple(range(1, p + 1)), 1):
        tree_choices = [_canonical_trees(tuple(sorted(b))) for b in part]
        for combo in itertools.product(*tree_choices):
            _, mono = monomial(combo, parity)
            out.append(mono)
    out.sort(key=repr)
    return out


def d1_matrix(p: int, q: int, parity: str = "even",
              conv: SignConvention = DEFAULT_CONVENTION
              ) -> Tuple[SparseMatrix, List[BracketMonomial],
                         List[BracketMonomial]]:
    """Matrix of d1 from the (p, q) basis to the (p+1, q) basis.

    Raises if the differential leaves the span of the target basis (it must
    not: terms with free variables cancel in the alternating sum).
    """
    dom = e1_basis(p, q, parity)
    cod = e1_basis(p + 1, q, parity)
    index = {m: i for i, m in enumerate(cod)}
    cols = []
    for m in dom:
        img = d1_monomial(m, conv)
        col = {}
        for mono, c in img.terms.items():
            if mono not in index:
                raise ValueError(
                    f"d1 image leaves the bracket subcomplex at {mono!r}")
            col[index[mono]] = c
        cols.append(col)
    return SparseMatrix.from_columns(len(cod), cols), dom, cod


def e2_rank(p: int, q: int, parity: str = "even",
            conv: SignConvention = DEFAULT_CONVENTION,
            jacobi: bool = False, one_term: bool = False) -> int:
    """Homology rank of d1 at arity p (column -p), bracket count q.

    With ``jacobi`` the span is reduced by graded Jacobi relations; with
    ``one_term`` additionally by monomials in which two consecutive
    variables are directly bracketed together.  The plain rank, the Jacobi
    rank and the fully reduced rank can all differ; the fully reduced one
    reproduces the published rank-one value at (5, 3).
    """
    d_in, _, _ = d1_matrix(p - 1, q, parity, conv)
    d_out, _, _ = d1_matrix(p, q, parity, conv)
    if not jacobi and not one_term:
        return homology_rank(d_in, d_out)
    rels_b: List[Dict[BracketMonomial, Fraction]] = []
    rels_c: List[Dict[BracketMonomial, Fraction]] = []
    if jacobi:
        rels_b += jacobi_relations(p, q, parity, conv)
        rels_c += jacobi_relations(p + 1, q, parity, conv)
    if one_term:
        rels_b += one_term_vectors(p, q, parity)
        rels_c += one_term_vectors(p + 1, q, parity)
    return _quotient_homology_rank(p, q, parity, d_in, d_out, rels_b, rels_c)


def has_consecutive_pair(m: BracketMonomial) -> bool:
    """True if some bracket pair joins x_i and x_{i+1} directly."""

    def scan(t) -> bool:
        if is_leaf(t):
            return False
        L, R = t
        if is_leaf(L) and is_leaf(R) and abs(L - R) == 1:
            return True
        return scan(L) or scan(R)

    return any(scan(f) for f in m.factors)


def one_term_vectors(p: int, q: int, parity: str = "even"
                     ) -> List[Dict[BracketMonomial, Fraction]]:
    """Single-monomial relation vectors spanning the one-term ideal."""
    return [{m: Fraction(1)} for m in e1_basis(p, q, parity)
            if has_consecutive_pair(m)]


# ---------------------------------------------------------------------------
# optional Jacobi identification

def jacobi_relations(p: int, q: int, parity: str = "even",
                     conv: SignConvention = DEFAULT_CONVENTION
                     ) -> List[Dict[BracketMonomial, Fraction]]:
    """Spanning set of graded-Jacobi relation vectors inside the (p,q) span.

    For every basis monomial and every node shaped [[A,B],C] the relation
    [[A,B],C] - [A,[B,C]] - s(A,B) [B,[A,C]] with s per the convention.
    """
    rels = []
    basis = e1_basis(p, q, parity)

    def node_paths(t, path=()):
        if is_leaf(t):
            return
        yield path, t
        yield from node_paths(t[0], path + (0,))
        yield from node_paths(t[1], path + (1,))

    def replace(t, path, new):
        if not path:
            return new
        if path[0] == 0:
            return (replace(t[0], path[1:], new), t[1])
        return (t[0], replace(t[1], path[1:], new))

    def emit(m, fi, f, path, A, B, C):
        s = conv.sign_jacobi(q_of(A), q_of(B))
        variants = [
            (Fraction(1), ((A, B), C)),
            (Fraction(-1), (A, (B, C))),
            (Fraction(-s), (B, (A, C))),
        ]
        vec: Dict[BracketMonomial, Fraction] = {}
        for coeff, newnode in variants:
            nf = list(m.factors)
            nf[fi] = replace(f, path, newnode)
            s, mono = monomial(nf, parity, conv)
            cur = vec.get(mono, Fraction(0)) + coeff * s
            if cur == 0:
                vec.pop(mono, None)
            else:
                vec[mono] = cur
        if vec:
            rels.append(vec)

    for m in basis:
        for fi, f in enumerate(m.factors):
            for path, node in node_paths(f):
                L, R = node
                if not is_leaf(L):
                    emit(m, fi, f, path, L[0], L[1], R)
                if not is_leaf(R):
                    emit(m, fi, f, path, R[0], R[1], L)
    return rels


def _subspace_matrix(vectors, basis_index, nrows) -> SparseMatrix:
    cols = []
    for vec in vectors:
        cols.append({basis_index[m]: c for m, c in vec.items()})
    return SparseMatrix.from_columns(nrows, cols)


def _quotient_homology_rank(p, q, parity, d_in, d_out, rels_b, rels_c) -> int:
    dom_b = e1_basis(p, q, parity)
    dom_c = e1_basis(p + 1, q, parity)
    idx_b = {m: i for i, m in enumerate(dom_b)}
    idx_c = {m: i for i, m in enumerate(dom_c)}
    rb = _subspace_matrix(rels_b, idx_b, len(dom_b))
    rc = _subspace_matrix(rels_c, idx_c, len(dom_c))
    # the differential must descend to the quotient by the relation subspace
    if rank(_hstack(rc, d_out @ rb)) != rank(rc):
        raise ValueError("doubling differential does not preserve the "
                         "relation subspace")
    # U = preimage of span(rc) under d_out: kernel of [d_out | rc] restricted
    # to the d_out block; dim U = dim ker of stacked system.
    stacked = _hstack(d_out, rc)
    dim_ker_stacked = stacked.cols - rank(stacked)
    # kernel vectors of stacked = (x, y) with d_out x = -rc y; the x-part
    # spans U, and (0, y) kernel vectors account for ker rc.
    dim_u = dim_ker_stacked - (rc.cols - rank(rc))
    im_plus_rb = _hstack(d_in, rb)
    return dim_u - rank(im_plus_rb)


def _hstack(a: SparseMatrix, b: SparseMatrix) -> SparseMatrix:
    if a.rows != b.rows:
        raise ValueError("row mismatch in hstack")
    entries = dict(a.items())
    for (i, j), v in b.items():
        entries[(i, j + a.cols)] = v
    return SparseMatrix(a.rows, a.cols + b.cols, entries)


# ---------------------------------------------------------------------------
# reference elements and serialization

BETA1_FACTORS = (((1, 4), 3), (2, 5))
BETA2_FACTORS = ((1, 4), ((2, 5), 3))


def beta_cycle(parity: str = "even",
               conv: SignConvention = DEFAULT_CONVENTION) -> BracketSum:
    """The five-variable, three-bracket cycle (sum of the two monomials)."""
    return BracketSum.from_terms(
        [(Fraction(1), BETA1_FACTORS), (Fraction(1), BETA2_FACTORS)],
        parity, conv)


def tree_to_json(t):
    if is_leaf(t):
        return t
    return [tree_to_json(t[0]), tree_to_json(t[1])]


def tree_from_json(obj):
    if isinstance(obj, int):
        return obj
    if isinstance(obj, list) and len(obj) == 2:
        return (tree_from_json(obj[0]), tree_from_json(obj[1]))
    raise ValueError(f"malformed bracket tree: {obj!r}")


def sum_to_json(s: BracketSum) -> list:
    out = []
    for m, c in sorted(s.terms.items(), key=lambda kv: repr(kv[0])):
        out.append({"coeff": str(c),
                    "monomial": [tree_to_json(f) for f in m.factors]})
    return out


def sum_from_json(data, parity: str = "even",
                  conv: SignConvention = DEFAULT_CONVENTION) -> BracketSum:
    if isinstance(data, str):
        data = json.loads(data)
    terms = []
    for item in data:
        factors = tuple(tree_from_json(f) for f in item["monomial"])
        terms.append((rational(item["coeff"]), factors))
    return BracketSum.from_terms(terms, parity, conv)


# ---------------------------------------------------------------------------
# convention search (development / audit utility)

def convention_ok(conv: SignConvention, max_p: int = 4) -> bool:
    """d1 . d1 = 0 on every monomial with p <= max_p, and the five-variable
    cycle closes, and d1 never leaves the bracket subcomplex on basis input."""
    try:
        if not d1(beta_cycle(conv=conv), conv).is_zero():
            return False
        for p in range(1, max_p + 1):
            for m in all_monomials(p):
                if not d1(d1_monomial(m, conv), conv).is_zero():
                    return False
        d1_matrix(4, 2, conv=conv)
        d1_matrix(5, 3, conv=conv)
    except ValueError:
        return False
    return True


def search_conventions(max_p: int = 3) -> List[SignConvention]:
    """Exhaust the sign-bit space; used once to pin DEFAULT_CONVENTION."""
    found = []
    bits = (0, 1)
    for n in itertools.product(bits, repeat=3):
        for f in itertools.product(bits, repeat=3):
            for l in itertools.product(bits, repeat=3):
                conv = SignConvention(n, f, l)
                if convention_ok(conv, max_p):
                    found.append(conv)
    return found
