"""Pure-Python hot kernels.

Every function here has a twin in ``_speedups.pyx`` with the same
signature and results; ``topocheck.kernels`` picks one at import time.
Tables are indexed by subset mask, so ``len(table) == 1 << n``.
"""


def up_sets(n, nbhd):
    """up[q] = mask of points p whose minimal neighbourhood contains q."""
    up = [0] * n
    for p in range(n):
        row = nbhd[p]
        q = 0
        while row:
            if row & 1:
                up[q] |= 1 << p
            row >>= 1
            q += 1
    return up


def closure_table(n, nbhd):
    # p is in cl(A) iff nbhd[p] meets A, so cl is additive over points of A
    up = up_sets(n, nbhd)
    size = 1 << n
    cl = [0] * size
    for a in range(1, size):
        low = a & -a
        cl[a] = cl[a ^ low] | up[low.bit_length() - 1]
    return cl


def interior_table(n, nbhd):
    cl = closure_table(n, nbhd)
    full = (1 << n) - 1
    return [full ^ cl[full ^ a] for a in range(1 << n)]


def subset_union(n, flags):
    """out[A] = union of all flagged subsets of A."""
    out = [a if f else 0 for a, f in enumerate(flags)]
    size = 1 << n
    for i in range(n):
        bit = 1 << i
        for a in range(size):
            if a & bit:
                out[a] |= out[a ^ bit]
    return out


def superset_meet(n, flags):
    """out[A] = intersection of all flagged supersets of A (full if none)."""
    full = (1 << n) - 1
    out = [a if f else full for a, f in enumerate(flags)]
    size = 1 << n
    for i in range(n):
        bit = 1 << i
        for a in range(size):
            if not a & bit:
                out[a] &= out[a | bit]
    return out


def all_subsets(n, flags):
    """out[A] = 1 iff every subset of A is flagged."""
    out = [1 if f else 0 for f in flags]
    size = 1 << n
    for i in range(n):
        bit = 1 << i
        for a in range(size):
            if a & bit and not out[a ^ bit]:
                out[a] = 0
    return out


def enumerate_preorders(n):
    """All reflexive transitive relations on n points as row masks.

    Row p is the set of q with p <= q; transitivity is the pairwise
    condition ``q in row[p] -> row[q] <= row[p]``, checked as soon as the
    later of the two rows is fixed.
    """
    rows = [0] * n
    result = []
    others = [[m for m in range(1 << n) if m >> p & 1] for p in range(n)]

    def place(p):
        if p == n:
            result.append(tuple(rows))
            return
        for row in others[p]:
            ok = True
            for q in range(p):
                rq = rows[q]
                if row >> q & 1 and rq & ~row:
                    ok = False
                    break
                if rq >> p & 1 and row & ~rq:
                    ok = False
                    break
            if ok:
                rows[p] = row
                place(p + 1)
        rows[p] = 0

    place(0)
    return result


def opens_from_basis(n, basis):
    """All unions of basis masks (the empty union included), canonically sorted."""
    opens = {0}
    for b in set(basis):
        opens |= {u | b for u in opens}
    return sorted(opens, key=lambda m: (bin(m).count("1"), m))
