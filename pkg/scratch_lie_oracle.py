"""Independent oracle: free Poisson algebra normal form on the multilinear
left-normed Lie-word basis (assumes plain antisymmetry + ordinary Jacobi +
unsigned Leibniz/commutativity, matching the shipped bracket convention)."""

from fractions import Fraction
from itertools import product

# element: dict {tuple(sorted tuple-of-words): Fraction}
# word: tuple of letters, left-normed [[..[w1,w2],w3]..], w1 = min of word


def add(d, k, c):
    v = d.get(k, Fraction(0)) + c
    if v == 0:
        d.pop(k, None)
    else:
        d[k] = v


def bracket_words(u, v):
    """Lie bracket of two basis words -> dict {word: coeff}."""
    out = {}
    if len(v) == 1:
        b = v[0]
        if len(u) == 1:
            a = u[0]
            if a == b:
                return {}
            if a < b:
                add(out, (a, b), Fraction(1))
            else:
                add(out, (b, a), Fraction(-1))
            return out
        if b > u[0]:
            add(out, u + (b,), Fraction(1))
            return out
        # b < min(u): [u, b] = -[b, u]; and
        # [b, [u', uk]] = [[b,u'],uk] - [[b,uk],u']
        up, uk = u[:-1], u[-1]
        for w, c in bracket_words((b,), up).items():
            for w2, c2 in bracket_words(w, (uk,)).items():
                add(out, w2, -c * c2)
        for w, c in bracket_words((b,), (uk,)).items():
            for w2, c2 in bracket_words(w, up).items():
                add(out, w2, c * c2)
        return out
    vp, vk = v[:-1], v[-1]
    # [u, [v', vk]] = [[u,v'],vk] - [[u,vk],v']
    for w, c in bracket_words(u, vp).items():
        for w2, c2 in bracket_words(w, (vk,)).items():
            add(out, w2, c * c2)
    for w, c in bracket_words(u, (vk,)).items():
        for w2, c2 in bracket_words(w, vp).items():
            add(out, w2, -c * c2)
    return out


def nf_tree(t):
    """Lie normal form of a bracket tree (no products inside)."""
    if isinstance(t, int):
        return {(t,): Fraction(1)}
    L, R = nf_tree(t[0]), nf_tree(t[1])
    out = {}
    for u, cu in L.items():
        for v, cv in R.items():
            for w, c in bracket_words(u, v).items():
                add(out, w, cu * cv * c)
    return out


def nf_monomial(factors):
    """Normal form of a product of trees: dict {sorted word tuple: coeff}."""
    parts = [nf_tree(f) for f in factors]
    out = {}
    for combo in product(*[p.items() for p in parts]):
        words = tuple(sorted(w for w, _ in combo))
        c = Fraction(1)
        for _, cc in combo:
            c *= cc
        add(out, words, c)
    return out


def shift_leaves(t, fn):
    if isinstance(t, int):
        return fn(t)
    return (shift_leaves(t[0], fn), shift_leaves(t[1], fn))


def delta_tree(t, i):
    """Substitute leaf i by product x_i * x_{i+1} (leaves > i shifted up).

    Returns element as dict {tuple-of-words: coeff} of the arity+1 algebra.
    Implemented by Poisson-expanding at the tree level: the doubled leaf is
    handled by linearity of the bracket in each slot plus Leibniz.
    """
    def go(tt):
        # returns dict {tuple(words): coeff} representing the (possibly
        # product-valued) image of subtree tt
        if isinstance(tt, int):
            if tt < i:
                return {((tt,),): Fraction(1)}
            if tt == i:
                return {((i,), (i + 1,)): Fraction(1)}
            return {((tt + 1,),): Fraction(1)}
        A, B = go(tt[0]), go(tt[1])
        out = {}
        for fa, ca in A.items():
            for fb, cb in B.items():
                # [fa_prod, fb_prod] with Leibniz on both sides, unsigned
                for ia in range(len(fa)):
                    for ib in range(len(fb)):
                        rest = tuple(fa[:ia] + fa[ia + 1:] +
                                     fb[:ib] + fb[ib + 1:])
                        for w, c in bracket_words(fa[ia], fb[ib]).items():
                            add(out, tuple(sorted(rest + (w,))), ca * cb * c)
        return out

    return go(t)


def delta_monomial(factors, i, p):
    if i == 0:
        parts = [{((1,),): Fraction(1)}]
        for f in factors:
            nf = nf_tree(shift_leaves(f, lambda k: k + 1))
            parts.append({(w,): c for w, c in nf.items()})
    elif i == p + 1:
        parts = [{((p + 1,),): Fraction(1)}]
        for f in factors:
            nf = nf_tree(f)
            parts.append({(w,): c for w, c in nf.items()})
    else:
        parts = [delta_tree(f, i) for f in factors]
    out = {}
    for combo in product(*[pp.items() for pp in parts]):
        words = ()
        c = Fraction(1)
        for ws, cc in combo:
            words = words + ws
            c *= cc
        add(out, tuple(sorted(words)), c)
    return out


def d1_monomial(factors, p):
    out = {}
    for i in range(0, p + 2):
        s = -1 if i % 2 else 1
        for k, c in delta_monomial(factors, i, p).items():
            add(out, k, c * s)
    return out


def word_basis(p, q):
    """All monomial keys at arity p, q brackets, every letter in a bracket."""
    from itertools import combinations

    def partitions(items, min_block=2):
        if not items:
            yield []
            return
        first, rest = items[0], items[1:]
        for k in range(min_block - 1, len(rest) + 1):
            for others in combinations(rest, k):
                block = (first,) + others
                remaining = tuple(x for x in rest if x not in others)
                for sub in partitions(remaining, min_block):
                    yield [block] + sub

    from itertools import permutations
    out = []
    for part in partitions(tuple(range(1, p + 1))):
        if len(part) != p - q:
            continue
        choices = []
        for block in part:
            b = tuple(sorted(block))
            words = [(b[0],) + perm for perm in permutations(b[1:])]
            choices.append(words)
        for combo in product(*choices):
            out.append(tuple(sorted(combo)))
    return sorted(set(out))


if __name__ == "__main__":
    import sys
    sys.path.insert(0, "src")
    from knotcycles.exactalg import SparseMatrix, rank, homology_rank

    def d1_matrix(p, q):
        dom = word_basis(p, q)
        cod = word_basis(p + 1, q)
        idx = {m: i for i, m in enumerate(cod)}
        # build tree representative for each word-monomial
        def word_tree(w):
            t = w[0]
            for b in w[1:]:
                t = (t, b)
            return t
        cols = []
        for m in dom:
            factors = [word_tree(w) for w in m]
            img = d1_monomial(factors, p)
            col = {}
            for k, c in img.items():
                if any(len(w) == 1 for w in k):
                    if c != 0:
                        raise AssertionError(f"free variable survives: {k}")
                    continue
                col[idx[k]] = c
            cols.append(col)
        return SparseMatrix.from_columns(len(cod), cols), dom, cod

    print("dims:", len(word_basis(4, 3)), len(word_basis(5, 3)),
          len(word_basis(6, 3)))
    din, _, _ = d1_matrix(4, 3)
    dout, _, _ = d1_matrix(5, 3)
    print("rank d_in:", rank(din), "rank d_out:", rank(dout))
    print("h(5,3) with Jacobi (oracle):", homology_rank(din, dout))
    # q=2 row for sanity
    din2, _, _ = d1_matrix(3, 2)
    print("dims q=2:", len(word_basis(3, 2)), len(word_basis(4, 2)))
    print("rank d (3,2)->(4,2):", rank(din2))
    z = SparseMatrix(0, len(word_basis(3, 2)))
    zin = SparseMatrix(len(word_basis(3, 2)), 0)
    print("h(3,2):", len(word_basis(3, 2)) - rank(din2))
    print("h(4,2):", len(word_basis(4, 2)) - rank(din2))
