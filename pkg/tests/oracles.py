"""Independent brute-force oracles used to cross-check the main algorithms.

These deliberately avoid the production code paths: the coloring oracle
enumerates raw (non-canonical) colorings, and the word oracle explores the
full rewriting orbit instead of scanning for cancellable pairs.
"""
from __future__ import annotations


def brute_local_coloring_exists(adj, r: int, m: int) -> bool:
    """Recursive enumeration of all total colorings with colors 1..m,
    pruned only by properness and the local bound; no symmetry breaking."""
    verts = sorted(adj)
    n = len(verts)
    idx = {v: i for i, v in enumerate(verts)}
    nbrs = [sorted(idx[w] for w in adj[v]) for v in verts]
    color = [0] * n

    def around(i):
        return {color[j] for j in nbrs[i] if color[j]}

    def rec(i):
        if i == n:
            return all(len(around(j)) <= r - 1 for j in range(n))
        for k in range(1, m + 1):
            if any(color[j] == k for j in nbrs[i]):
                continue
            color[i] = k
            feasible = len(around(i)) <= r - 1 and all(
                len(around(j)) <= r - 1 for j in nbrs[i]
            )
            if feasible and rec(i + 1):
                return True
            color[i] = 0
        return False

    return rec(0)


def orbit_is_identity(letters, commutes_gens) -> bool:
    """Explore the full orbit of a word under adjacent commuting swaps and
    free cancellations; the word is the identity iff the empty word is
    reachable.  Letters are (generator, sign) pairs; states are raw words,
    deduplicated verbatim.
    """
    gens = sorted({g for g, _ in letters})
    gid = {g: i for i, g in enumerate(gens)}
    n = len(gens)
    masks = [0] * (2 * n)
    for a in gens:
        for b in gens:
            if a != b and commutes_gens(a, b):
                for sa in (0, 1):
                    for sb in (0, 1):
                        masks[2 * gid[a] + sa] |= 1 << (2 * gid[b] + sb)

    start = tuple(2 * gid[g] + (1 if e < 0 else 0) for g, e in letters)
    if not start:
        return True
    seen = {start}
    stack = [start]
    while stack:
        w = stack.pop()
        for i in range(len(w) - 1):
            a, b = w[i], w[i + 1]
            if a == b ^ 1:
                nw = w[:i] + w[i + 2:]
                if not nw:
                    return True
                if nw not in seen:
                    seen.add(nw)
                    stack.append(nw)
            elif masks[a] >> b & 1:
                nw = w[:i] + (b, a) + w[i + 2:]
                if nw not in seen:
                    seen.add(nw)
                    stack.append(nw)
    return False
