"""The concrete embedded graphs the toolkit certifies.

``G0`` is U(5,3) minus its triangle edges, embedded with all 4-cycles as
quadrilateral faces and the two-colored 6-cycles as hexagonal faces; the
surface is the non-orientable one of genus 7.  ``G1`` is the analogous
subgraph of U(6,3) on the vertices (i, H) with exactly one of {1,2,3} in
H, giving genus 5.  Adding a main diagonal to every hexagon produces the
odd quadrangulations ``G0'`` and ``G1'``; crosscap surgery then raises the
genus one unit at a time, ending at U(5,3) itself (genus 17) resp. the
induced U(6,3) subgraph (genus 11) once every original hexagon has been
treated.

Face lists are generated programmatically (4-cycle and two-colored 6-cycle
censuses) so the assembler's disk checks certify the embeddings.
"""
from __future__ import annotations

from itertools import combinations

from .errors import InputError, InternalConsistencyError
from .localcolor import Coloring, build_U, is_local_coloring, u_vertex_name
from .quadform import (
    ODD,
    crosscap_hexagon,
    find_crosscap_candidates,
    quad_parity,
    require_quadrangulation,
)
from .surface_map import (
    EmbeddedGraph,
    FaceListComplex,
    assemble_embedding,
    classify_surface,
    insert_chord,
)


def four_cycles(adj):
    """All 4-cycles of a simple graph, as canonical vertex walks."""
    verts = sorted(adj)
    out = set()
    for u, w in combinations(verts, 2):
        common = sorted(adj[u] & adj[w])
        for a, b in combinations(common, 2):
            cyc = (u, a, w, b)
            best = min(
                rot[i:] + rot[:i] for rot in (cyc, cyc[::-1]) for i in range(4)
            )
            out.add(best)
    return sorted(out)


def six_cycles_two_colored(adj, coloring):
    """All 6-cycles showing exactly two colors, as canonical vertex walks."""
    out = set()

    def canon(cyc):
        return min(rot[i:] + rot[:i] for rot in (cyc, cyc[::-1]) for i in range(6))

    verts = sorted(adj)
    for start in verts:
        stack = [(start, [start])]
        while stack:
            v, path = stack.pop()
            if len(path) == 6:
                if start in adj[v]:
                    cyc = tuple(path)
                    if len({coloring[x] for x in cyc}) == 2:
                        out.add(canon(cyc))
                continue
            for w in sorted(adj[v]):
                if w in path or w < start:
                    continue
                stack.append((w, path + [w]))
    return sorted(out)


def _u_minus_triangles(m: int, keep=None):
    """Adjacency of U(m,3) minus triangle edges, restricted to ``keep``."""
    U = build_U(m, 3)
    verts = [u_vertex_name(i, A) for (i, A) in U.vertices]
    if keep is not None:
        verts = [v for v in verts if keep(U.pair_of(v))]
    vset = set(verts)
    adj = {
        v: {w for w in U.adjacency[v] if w in vset and frozenset((v, w)) not in U.triangle_edges}
        for v in verts
    }
    return U, adj


def _assemble_with_census(adj, coloring, expect_quads, expect_hexes):
    quads = four_cycles(adj)
    hexes = six_cycles_two_colored(adj, coloring)
    if len(quads) != expect_quads or len(hexes) != expect_hexes:
        raise InternalConsistencyError(
            f"face census {len(quads)}+{len(hexes)} != {expect_quads}+{expect_hexes}"
        )
    return assemble_embedding(FaceListComplex.from_lists(quads + hexes))


def build_G0():
    """U(5,3) without triangle edges on the non-orientable genus-7 surface."""
    U, adj = _u_minus_triangles(5)
    natural = U.natural_coloring()
    G = _assemble_with_census(adj, natural.assignment, 15, 10)
    c = Coloring({v: natural.assignment[v] for v in G.vertices}, 5)
    sc = classify_surface(G)
    if (G.n_vertices, G.n_edges, len(G.faces)) != (30, 60, 25) or sc.orientable or sc.genus != 7:
        raise InternalConsistencyError("G0 census failed")
    return G, c


def build_G1():
    """The U(6,3) subgraph on vertices (i, H) with |H ∩ {1,2,3}| = 1,
    without triangle edges, on the non-orientable genus-5 surface."""
    U, adj = _u_minus_triangles(6, keep=lambda p: len(p[1] & {1, 2, 3}) == 1)
    natural = U.natural_coloring()
    sub_coloring = {v: natural.assignment[v] for v in adj}
    G = _assemble_with_census(adj, sub_coloring, 27, 6)
    c = Coloring({v: sub_coloring[v] for v in G.vertices}, 6)
    sc = classify_surface(G)
    if (G.n_vertices, G.n_edges, len(G.faces)) != (36, 72, 33) or sc.orientable or sc.genus != 5:
        raise InternalConsistencyError("G1 census failed")
    return G, c


def hexagon_faces(G: EmbeddedGraph):
    return [i for i, f in enumerate(G.faces) if len(f) == 6]


def add_main_diagonals(G: EmbeddedGraph, c: Coloring, choices=None):
    """Add one main diagonal to every hexagonal face.

    ``choices`` optionally picks the diagonal (0, 1 or 2, by walk position)
    per hexagon in canonical hexagon order; by default the diagonal with
    the lexicographically least endpoint pair is used.  Any choice yields
    an odd quadrangulation and keeps the natural coloring local-3.
    """
    hex_walks = sorted(
        tuple(G.face_vertex_walk(G.faces[i])) for i in hexagon_faces(G)
    )
    if choices is not None and len(choices) != len(hex_walks):
        raise InputError("one diagonal choice per hexagon required")
    out = G
    diagonals = []
    for n, walk in enumerate(hex_walks):
        idx = next(
            i for i, f in enumerate(out.faces)
            if len(f) == 6 and tuple(out.face_vertex_walk(f)) == walk
        )
        if choices is None:
            j = min(range(3), key=lambda j: tuple(sorted((walk[j], walk[j + 3]))))
        else:
            j = choices[n]
            if j not in (0, 1, 2):
                raise InputError("diagonal choice must be 0, 1 or 2")
        out, ends = insert_chord(out, idx, j, j + 3)
        diagonals.append(tuple(sorted(ends)))
    require_quadrangulation(out)
    c2 = Coloring(dict(c.assignment), c.m)
    if quad_parity(out) != ODD:
        raise InternalConsistencyError("diagonal insertion must give an odd quadrangulation")
    if not is_local_coloring(out, c2, 3):
        raise InternalConsistencyError("natural coloring must stay local-3")
    return out, c2, diagonals


def build_G0_prime():
    G, c = build_G0()
    out, c2, _ = add_main_diagonals(G, c)
    return out, c2


def build_G1_prime():
    G, c = build_G1()
    out, c2, _ = add_main_diagonals(G, c)
    return out, c2


def g1_prime_negative_edges():
    """The twelve one-sided edges certifying that G1' has type PHI3."""
    pairs = (
        ((2, (3, 5)), (3, (2, 6))),
        ((2, (3, 6)), (3, (2, 5))),
        ((5, (2, 6)), (6, (3, 5))),
        ((5, (3, 6)), (6, (2, 5))),
        ((3, (1, 4)), (4, (3, 5))),
        ((3, (1, 4)), (4, (3, 6))),
        ((1, (2, 6)), (6, (1, 4))),
        ((1, (3, 6)), (6, (1, 4))),
        ((1, (2, 5)), (5, (1, 4))),
        ((1, (3, 5)), (5, (1, 4))),
        ((2, (1, 4)), (4, (2, 5))),
        ((2, (1, 4)), (4, (2, 6))),
    )
    return tuple(
        (u_vertex_name(i, set(a)), u_vertex_name(j, set(b))) for (i, a), (j, b) in pairs
    )


def g1_prime_certificate_edges(G: EmbeddedGraph):
    """The twelve-edge one-sided list completed by the diagonal signs it
    forces on a quadrangulation G1'.

    Around every face of a rotation-signature representation the number of
    negative edges is even (the sign accumulator returns to its start).
    Two hexagons of G1 carry their two listed edges at antipodal rim
    positions, so whichever main diagonal splits them leaves one listed
    edge on each quadrilateral; that diagonal must then be negative too.
    The bare list is therefore not a valid negative set for any diagonal
    choice; the completed one is.
    """
    listed = g1_prime_negative_edges()
    listed_set = {frozenset(e) for e in listed}
    odd_faces = [
        f for f in G.faces
        if sum(1 for d in f.tails if frozenset(G.edges[G.edge_of[d]]) in listed_set) % 2
    ]
    counts = {}
    for f in odd_faces:
        for d in f.tails:
            e = tuple(sorted(G.edges[G.edge_of[d]]))
            counts[e] = counts.get(e, 0) + 1
    forced = tuple(sorted(
        e for e, n in counts.items() if n == 2 and frozenset(e) not in listed_set
    ))
    if len(forced) != len(odd_faces) // 2:
        raise InternalConsistencyError("certificate completion did not find one diagonal per face pair")
    return tuple(listed) + forced


def build_K4_projective():
    """K4 with three quadrilateral faces on the projective plane.

    Rotations list the other three vertices in ascending order; the
    signature is the first one (in lexicographic order, + before -) making
    the Euler characteristic 1, verified rather than assumed.
    """
    verts = ["1", "2", "3", "4"]
    pairs = [(u, w) for i, u in enumerate(verts) for w in verts[i + 1:]]
    vertex_of = [None] * 12
    for k, (u, w) in enumerate(pairs):
        vertex_of[2 * k] = u
        vertex_of[2 * k + 1] = w
    rotation = [0] * 12
    for v in verts:
        inc = []
        for k, (u, w) in enumerate(pairs):
            if u == v:
                inc.append((w, 2 * k))
            elif w == v:
                inc.append((u, 2 * k + 1))
        inc.sort()
        for i, (_, d) in enumerate(inc):
            rotation[d] = inc[(i + 1) % 3][1]
    pairing = [d ^ 1 for d in range(12)]

    from itertools import product

    for sig in product((1, -1), repeat=6):
        G = EmbeddedGraph(rotation, pairing, list(sig), vertex_of)
        sc = classify_surface(G)
        if sc.euler_characteristic == 1 and sorted(len(f) for f in G.faces) == [4, 4, 4]:
            c = Coloring({v: int(v) for v in verts}, 4)
            if quad_parity(G) != ODD:
                raise InternalConsistencyError("K4 on the projective plane must be odd")
            return G, c
    raise InternalConsistencyError("no signature realizes K4 on the projective plane")


def build_high_genus_family(base: str, extra_genus: int):
    """Crosscap surgery applied ``extra_genus`` times to G0' or G1'.

    The first rounds treat each original hexagon once (removing its
    diagonal and drawing all three through a crosscap); at
    ``extra_genus = number of hexagons`` the underlying graph is exactly
    U(5,3) resp. the induced U(6,3) subgraph.  Further rounds continue on
    the first admissible two-colored face pair in canonical edge order.
    """
    if extra_genus < 0:
        raise InputError("extra_genus must be non-negative")
    if base == "g0p":
        G, c = build_G0()
    elif base == "g1p":
        G, c = build_G1()
    else:
        raise InputError("base must be 'g0p' or 'g1p'")
    G, c, diagonals = add_main_diagonals(G, c)
    genus0 = classify_surface(G).genus

    for step in range(extra_genus):
        if step < len(diagonals):
            u, w = diagonals[step]
            ks = G.edges_between(u, w)
            if len(ks) != 1:
                raise InternalConsistencyError("hexagon diagonal is not a unique edge")
            k = ks[0]
            if k not in find_crosscap_candidates(G, c):
                raise InternalConsistencyError("hexagon diagonal lost its two-colored face pair")
        else:
            candidates = find_crosscap_candidates(G, c)
            if not candidates:
                raise InternalConsistencyError("no admissible two-colored face pair found")
            k = candidates[0]
        G, c = crosscap_hexagon(G, c, k)
        if classify_surface(G).genus != genus0 + step + 1:
            raise InternalConsistencyError("crosscap failed to raise the genus by one")
    return G, c


# -- transitivity checks -------------------------------------------------------


def _induced_vertex_map(perm, name_to_pair):
    def act(name):
        i, A = name_to_pair[name]
        return u_vertex_name(perm[i], {perm[a] for a in A})

    return act


def _is_graph_automorphism(adj, act):
    for v, ns in adj.items():
        if {act(w) for w in ns} != set(adj[act(v)]):
            return False
    return True


def _orbit(items, maps, start):
    seen = {start}
    frontier = [start]
    while frontier:
        x = frontier.pop()
        for f in maps:
            y = f(x)
            if y not in seen:
                seen.add(y)
                frontier.append(y)
    return seen


def g0_is_edge_transitive() -> bool:
    """Color permutations act on G0; one edge orbit must cover all 60."""
    U, adj = _u_minus_triangles(5)
    name_to_pair = {u_vertex_name(i, A): (i, A) for (i, A) in U.vertices}
    perms = []
    base = list(range(1, 6))
    swaps = [dict(zip(base, base))]
    for a, b in combinations(base, 2):
        p = dict(zip(base, base))
        p[a], p[b] = b, a
        swaps.append(p)
    acts = [_induced_vertex_map(p, name_to_pair) for p in swaps]
    if not all(_is_graph_automorphism(adj, act) for act in acts):
        return False
    edge_maps = [lambda e, a=act: frozenset((a(min(e)), a(max(e)))) for act in acts]
    edges = {frozenset((v, w)) for v in adj for w in adj[v]}
    return _orbit(edges, edge_maps, next(iter(sorted(edges, key=sorted)))) == edges


def g1_is_vertex_transitive() -> bool:
    """Permutations preserving the split {1,2,3} | {4,5,6} (and the swap of
    the two classes) act on G1; one vertex orbit must cover all 36."""
    U, adj = _u_minus_triangles(6, keep=lambda p: len(p[1] & {1, 2, 3}) == 1)
    name_to_pair = {u_vertex_name(i, A): (i, A) for (i, A) in U.vertices
                    if u_vertex_name(i, A) in adj}
    gens = [
        {1: 2, 2: 1, 3: 3, 4: 4, 5: 5, 6: 6},
        {1: 2, 2: 3, 3: 1, 4: 4, 5: 5, 6: 6},
        {1: 1, 2: 2, 3: 3, 4: 5, 5: 4, 6: 6},
        {1: 1, 2: 2, 3: 3, 4: 5, 5: 6, 6: 4},
        {1: 4, 4: 1, 2: 5, 5: 2, 3: 6, 6: 3},
    ]
    acts = [_induced_vertex_map(p, name_to_pair) for p in gens]
    if not all(_is_graph_automorphism(adj, act) for act in acts):
        return False
    verts = set(adj)
    return _orbit(verts, acts, sorted(verts)[0]) == verts
