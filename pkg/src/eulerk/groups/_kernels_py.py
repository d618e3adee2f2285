"""Pure-Python implementations of the search kernels.

Signatures and outputs match ``_kernels.pyx`` exactly; the backend is chosen
in ``_backend``. Arrays are int32 numpy arrays on both sides.
"""

import numpy as np

MODE_ALL = 0
MODE_INJECTIVE = 1
MODE_FIRST_INJECTIVE = 2


def search_homs(src, gens, tgt, cand, counts, mode):
    """Enumerate homomorphisms determined by generator images.

    ``cand[j, :counts[j]]`` lists the allowed images of ``gens[j]``. Returns an
    (m, |src|) array of full image maps in lexicographic order of the
    generator-image tuples.
    """
    s = src.tolist()
    t = tgt.tolist()
    gens = [int(g) for g in gens]
    cands = [[int(c) for c in cand[j, : counts[j]]] for j in range(len(gens))]
    n = len(s)
    k = len(gens)
    out = []
    images = [0] * k

    def extend(level):
        # BFS over <g_0..g_level> checking phi(x g_i) = phi(x) h_i
        phi = [-1] * n
        phi[0] = 0
        queue = [0]
        for x in queue:
            px = t[phi[x]]
            sx = s[x]
            for i in range(level + 1):
                y = sx[gens[i]]
                z = px[images[i]]
                if phi[y] < 0:
                    phi[y] = z
                    queue.append(y)
                elif phi[y] != z:
                    return None
        return phi

    def rec(level):
        for h in cands[level]:
            images[level] = h
            phi = extend(level)
            if phi is None:
                continue
            if level + 1 < k:
                if rec(level + 1):
                    return True
                continue
            if mode != MODE_ALL and any(phi[x] == 0 for x in range(1, n)):
                continue
            out.append(phi)
            if mode == MODE_FIRST_INJECTIVE:
                return True
        return False

    if k == 0:
        out.append([0] * n)
    else:
        rec(0)
    return np.array(out, dtype=np.int32).reshape(len(out), n)


def count_reps(src, gens, tgt, inv, cand, counts, injective):
    """Homomorphisms up to conjugation in the target, counted without storing them.

    Only generator-image tuples that are lexicographically least among their
    conjugates are counted; a prefix with a smaller conjugate is pruned,
    since every completion of it has one too.
    """
    s = src.tolist()
    t = tgt.tolist()
    inv = inv.tolist()
    gens = [int(g) for g in gens]
    cands = [[int(c) for c in cand[j, : counts[j]]] for j in range(len(gens))]
    n, m, k = len(s), len(t), len(gens)
    if k == 0:
        return 1 if (n == 1 or not injective) else 0
    images = [0] * k
    conj = [[t[t[h][x]][inv[h]] for x in range(m)] for h in range(m)]

    def prefix_minimal(level):
        for h in range(1, m):
            ch = conj[h]
            for j in range(level + 1):
                x = images[j]
                c = ch[x]
                if c != x:
                    if c < x:
                        return False
                    break
        return True

    def extend(level):
        phi = [-1] * n
        phi[0] = 0
        queue = [0]
        for x in queue:
            px = t[phi[x]]
            sx = s[x]
            for i in range(level + 1):
                y = sx[gens[i]]
                z = px[images[i]]
                if phi[y] < 0:
                    phi[y] = z
                    queue.append(y)
                elif phi[y] != z:
                    return None
        return phi

    def rec(level):
        total = 0
        for h in cands[level]:
            images[level] = h
            phi = extend(level)
            if phi is None or not prefix_minimal(level):
                continue
            if level + 1 < k:
                total += rec(level + 1)
            elif not injective or all(phi[x] != 0 for x in range(1, n)):
                total += 1
        return total

    return rec(0)


def count_conj_orbits(rows, tgt, inv):
    """Count rows that are lexicographically least under h x h^-1 for all h."""
    t = tgt.tolist()
    inv = inv.tolist()
    m = len(t)
    count = 0
    for row in rows.tolist():
        minimal = True
        for h in range(1, m):
            th, hi = t[h], inv[h]
            for x in row:
                c = t[th[x]][hi]
                if c != x:
                    if c < x:
                        minimal = False
                    break
            if not minimal:
                break
        if minimal:
            count += 1
    return count


def canonical_table(tab, cand, counts):
    """Least relabeled table over irredundant generating tuples.

    Position j of the tuple ranges over ``cand[j, :counts[j]]`` and must lie
    outside the span of the earlier positions. Each generating tuple relabels
    the group in BFS discovery order. Returns None when no tuple generates.
    """
    t = tab.tolist()
    n = len(t)
    d = len(counts)
    cands = [[int(c) for c in cand[j, : counts[j]]] for j in range(d)]
    best = None
    gens = [0] * d

    def span(level):
        seen = [False] * n
        seen[0] = True
        queue = [0]
        for x in queue:
            tx = t[x]
            for i in range(level + 1):
                y = tx[gens[i]]
                if not seen[y]:
                    seen[y] = True
                    queue.append(y)
        return seen, queue

    def relabel(order):
        label = [0] * n
        for new, old in enumerate(order):
            label[old] = new
        return [label[t[a][b]] for a in order for b in order]

    def rec(level, prev_seen):
        nonlocal best
        for g in cands[level]:
            if prev_seen[g]:
                continue
            gens[level] = g
            seen, order = span(level)
            if level + 1 < d:
                rec(level + 1, seen)
            elif len(order) == n:
                flat = relabel(order)
                if best is None or flat < best:
                    best = flat
    base = [False] * n
    base[0] = True
    if d == 0:
        return [0] if n == 1 else None
    rec(0, base)
    return best
