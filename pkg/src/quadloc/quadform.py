"""Quadrangulation structure: parity, cycle parity map, auxiliary graph,
degree excess, and the surgeries that raise genus or reshuffle faces.

Parity comes in two equivalent computations.  The direct one orients every
face arbitrarily and counts edges traversed twice in the same direction.
The second orients the *edges* and counts odd faces (three boundary edges
one way, one the other); both parities agree for every edge orientation.

The cycle parity map assigns each homology class the length parity of its
closed walks; evaluated against the one-sidedness functional it yields the
four types PHI0..PHI3.
"""
from __future__ import annotations

from dataclasses import dataclass

from .errors import (
    CertificateMismatchError,
    ColoringError,
    InputError,
    InternalConsistencyError,
    LoopError,
    NotQuadrangulationError,
    OrientationError,
    SurgeryRejectedError,
    UnsupportedInputError,
)
from .localcolor import Coloring, coloring_violation, is_local_coloring
from .surface_map import (
    EmbeddedGraph,
    classify_surface,
    delete_edge,
    insert_chord,
    _pairing_map,
    _reassemble,
    _vertex_map,
)

EVEN = "even"
ODD = "odd"


def require_quadrangulation(G: EmbeddedGraph):
    if G.has_loop():
        raise LoopError("quadrangulations are loopless")
    bad = [len(f) for f in G.faces if len(f) != 4]
    if bad:
        raise NotQuadrangulationError(f"face of length {bad[0]} present")


def _edge_slot_tails(G: EmbeddedGraph):
    """Edge index -> the two tail darts with which its slots traverse it."""
    tails = [[] for _ in range(G.n_edges)]
    for f in G.faces:
        for d in f.tails:
            tails[G.edge_of[d]].append(d)
    if any(len(t) != 2 for t in tails):
        raise InternalConsistencyError("every edge must carry exactly two face slots")
    return tails


def quad_parity(G: EmbeddedGraph) -> str:
    """Parity of the number of consistency-breaking edges.

    An edge breaks consistency iff its two face slots traverse it in the
    same direction; the count's parity does not depend on how the faces
    were oriented.
    """
    require_quadrangulation(G)
    breaking = sum(1 for t1, t2 in _edge_slot_tails(G) if t1 == t2)
    return ODD if breaking % 2 else EVEN


def color_order_orientation(G: EmbeddedGraph, c: Coloring):
    """Head dart per edge, orienting each edge toward its larger color."""
    heads = {}
    for k, d in enumerate(G.edge_reps):
        u, w = G.vertex_of[d], G.vertex_of[G.pairing[d]]
        if c.assignment[u] == c.assignment[w]:
            raise ColoringError(f"edge {u}-{w} has equal end colors; orientation undefined")
        heads[k] = G.pairing[d] if c.assignment[u] < c.assignment[w] else d
    return heads


def odd_faces_parity(G: EmbeddedGraph, orientation):
    """Parity of the number of odd faces under an edge orientation.

    ``orientation`` maps every edge index to its head dart.  A face is odd
    when its boundary traverses an odd number of edges with (equivalently,
    against) their orientation.  Returns ``(parity, odd_face_count)``; the
    parity equals :func:`quad_parity` for every orientation.
    """
    require_quadrangulation(G)
    if sorted(orientation) != list(range(G.n_edges)):
        raise OrientationError("orientation must pick a head dart for every edge")
    for k, h in orientation.items():
        if G.edge_of[h] != k:
            raise OrientationError(f"dart {h} does not belong to edge {k}")
    odd_count = 0
    for f in G.faces:
        aligned = sum(1 for d in f.tails if orientation[G.edge_of[d]] == G.pairing[d])
        if aligned % 2:
            odd_count += 1
    return (ODD if odd_count % 2 else EVEN), odd_count


def increasing_color_quad_faces(G: EmbeddedGraph, c: Coloring):
    """Quadrilateral faces whose colors read strictly increasing in some
    cyclic direction; these are exactly the odd faces of the color-order
    orientation."""
    out = []
    for i, f in enumerate(G.faces):
        if len(f) != 4:
            continue
        cols = [c.assignment[v] for v in G.face_vertex_walk(f)]
        hits = False
        for seq in (cols, cols[::-1]):
            for r in range(4):
                rot = seq[r:] + seq[:r]
                if rot[0] < rot[1] < rot[2] < rot[3]:
                    hits = True
        if hits:
            out.append(i)
    return out


# -- cycle parity map ---------------------------------------------------------


@dataclass(frozen=True)
class BasisCycle:
    cotree_edge: int
    edges: tuple  # edge indices around the fundamental cycle

    def __len__(self):
        return len(self.edges)


@dataclass
class ParityProfile:
    parity: str | None          # quadrangulation parity, when applicable
    orientable: bool
    basis: tuple                # BasisCycle per cotree edge
    phi_values: tuple           # length parity bit per basis cycle
    w1_values: tuple            # one-sidedness bit per basis cycle
    phi_type: str | None

    def certificate_text(self, G: EmbeddedGraph) -> str:
        lines = ["# quadloc-cert v1", "cycle-parity profile"]
        lines.append(f"surface {classify_surface(G).describe()}")
        lines.append(f"quad-parity {self.parity if self.parity else 'n/a'}")
        for cyc, phi, w1 in zip(self.basis, self.phi_values, self.w1_values):
            edges = " ".join("%s~%s" % G.edges[k] for k in cyc.edges)
            lines.append(f"cycle {cyc.cotree_edge} : {edges} phi={phi} w1={w1}")
        lines.append(f"type {self.phi_type if self.phi_type else 'n/a'}")
        return "\n".join(lines) + "\n"


def _spanning_tree(G: EmbeddedGraph, order: str = "bfs"):
    """Tree edges and parent pointers, rooted at the smallest vertex."""
    root = G.vertices[0]
    parent = {root: None}       # vertex -> (parent vertex, edge index)
    tree_edges = set()
    frontier = [root]
    while frontier:
        v = frontier.pop(0 if order == "bfs" else -1)
        for d in G.darts_at[v]:
            w = G.vertex_of[G.pairing[d]]
            if w not in parent:
                parent[w] = (v, G.edge_of[d])
                tree_edges.add(G.edge_of[d])
                frontier.append(w)
    return tree_edges, parent


def _fundamental_cycle(G, parent, k):
    d = G.edge_reps[k]
    u, w = G.vertex_of[d], G.vertex_of[G.pairing[d]]

    def root_path(v):
        path = []
        while parent[v] is not None:
            p, e = parent[v]
            path.append(e)
            v = p
        return path

    pu, pw = root_path(u), root_path(w)
    edges = set(pu) ^ set(pw)
    edges.add(k)
    return BasisCycle(k, tuple(sorted(edges)))


def cycle_parity_profile(G: EmbeddedGraph, tree_order: str = "bfs") -> ParityProfile:
    """Length-parity and one-sidedness bits on a fundamental-cycle basis.

    Requires every face even (the length parity is then a homology
    functional).  The type classification is attached for quadrangulations
    of non-orientable surfaces; for orientable input only the parity map is
    reported.
    """
    if any(len(f) % 2 for f in G.faces):
        raise InputError("parity map undefined: odd face present")
    tree_edges, parent = _spanning_tree(G, tree_order)
    basis = tuple(
        _fundamental_cycle(G, parent, k) for k in range(G.n_edges) if k not in tree_edges
    )
    phi = tuple(len(cyc) % 2 for cyc in basis)
    w1 = tuple(
        sum(1 for e in cyc.edges if G.signature[e] < 0) % 2 for cyc in basis
    )
    sc = classify_surface(G)
    parity = None
    if not G.has_loop() and all(len(f) == 4 for f in G.faces):
        parity = quad_parity(G)
    profile = ParityProfile(parity, sc.orientable, basis, phi, w1, None)
    if not sc.orientable and parity is not None:
        profile.phi_type = classify_phi_type(profile, parity)
    return profile


def classify_phi_type(profile: ParityProfile, parity: str) -> str:
    """PHI0 if the parity map vanishes; PHI3 if it equals the
    one-sidedness functional (this takes precedence, covering the genus-1
    coincidence); otherwise PHI1 for odd and PHI2 for even
    quadrangulations."""
    if profile.orientable:
        raise UnsupportedInputError("type classification needs a non-orientable surface")
    if not any(profile.phi_values):
        return "PHI0"
    if profile.phi_values == profile.w1_values:
        return "PHI3"
    return "PHI1" if parity == ODD else "PHI2"


@dataclass
class CertificateReport:
    passed: bool
    lines: tuple

    def text(self) -> str:
        head = "phi3-certificate: " + ("pass" if self.passed else "FAIL")
        return "\n".join((head,) + self.lines) + "\n"


def phi3_certificate(G: EmbeddedGraph, negative_edges) -> CertificateReport:
    """Check a one-sided-edge list certifying type PHI3.

    ``negative_edges`` lists vertex pairs.  They must equal the negative
    edges of some switching representative of ``G`` (verified on every
    fundamental cycle); the certificate passes iff removing them leaves a
    bipartite graph in which each removed edge joins same-class vertices.
    A pass implies every one-sided closed walk has odd length, i.e. PHI3.
    """
    listed = set()
    for u, w in negative_edges:
        ks = G.edges_between(str(u), str(w))
        if len(ks) != 1:
            raise CertificateMismatchError(f"edge {u}~{w} matches {len(ks)} edges of the map")
        listed.add(ks[0])

    tree_edges, parent = _spanning_tree(G)
    for k in range(G.n_edges):
        if k in tree_edges:
            continue
        cyc = _fundamental_cycle(G, parent, k)
        w1 = sum(1 for e in cyc.edges if G.signature[e] < 0) % 2
        s1 = sum(1 for e in cyc.edges if e in listed) % 2
        if w1 != s1:
            raise CertificateMismatchError(
                "listed set is not the negative edge set of any switching representative"
            )

    # 2-color the graph minus the listed edges
    side = {G.vertices[0]: 0}
    stack = [G.vertices[0]]
    lines = []
    bipartite = True
    while stack:
        v = stack.pop()
        for d in G.darts_at[v]:
            if G.edge_of[d] in listed:
                continue
            w = G.vertex_of[G.pairing[d]]
            if w not in side:
                side[w] = 1 - side[v]
                stack.append(w)
            elif side[w] == side[v]:
                bipartite = False
    if len(side) != G.n_vertices:
        bipartite = False
        lines.append("graph minus listed edges is disconnected")
    lines.append(f"graph minus listed edges bipartite: {bipartite}")
    same_class = bipartite and all(
        side[G.vertex_of[G.edge_reps[k]]] == side[G.vertex_of[G.pairing[G.edge_reps[k]]]]
        for k in listed
    )
    lines.append(f"every removed edge joins same-class vertices: {same_class}")
    return CertificateReport(bipartite and same_class, tuple(lines))


# -- auxiliary graph and excess -------------------------------------------------


@dataclass
class AuxiliaryGraph:
    vertices: tuple
    edges: tuple      # same-color diagonal pairs, with multiplicity
    face_tags: tuple  # per face: bichromatic | four-chromatic | other


def auxiliary_graph(G: EmbeddedGraph, c: Coloring):
    require_quadrangulation(G)
    if coloring_violation(G, c, G.n_vertices + 2) is not None:
        raise ColoringError("auxiliary graph needs a proper coloring")
    tags = []
    edges = []
    for f in G.faces:
        walk = G.face_vertex_walk(f)
        distinct = len({c.assignment[v] for v in walk})
        if distinct == 2:
            tags.append("bichromatic")
            for a, b in ((walk[0], walk[2]), (walk[1], walk[3])):
                edges.append(tuple(sorted((a, b))))
        elif distinct == 4:
            tags.append("four-chromatic")
        else:
            tags.append("other")
    for a, b in edges:
        if c.assignment[a] != c.assignment[b]:
            raise InternalConsistencyError("auxiliary edge joins unequal colors")
    return AuxiliaryGraph(G.vertices, tuple(sorted(edges)), tuple(tags))


@dataclass
class ExcessReport:
    per_vertex: dict
    total: int
    genus: int

    def text(self) -> str:
        lines = [f"total excess {self.total} = 4*(genus {self.genus} - 2)"]
        irregular = {v: e for v, e in sorted(self.per_vertex.items()) if e != 0}
        lines.append(f"irregular vertices: {len(irregular)}")
        return "\n".join(lines) + "\n"


def excess_report(G: EmbeddedGraph) -> ExcessReport:
    """Per-vertex degree excess over 4; the total must equal 4(g - 2) on a
    quadrangulation of the non-orientable genus-g surface."""
    require_quadrangulation(G)
    sc = classify_surface(G)
    if sc.orientable:
        raise UnsupportedInputError("excess identity applies to non-orientable surfaces")
    per = {v: G.degree(v) - 4 for v in G.vertices}
    total = sum(per.values())
    if total != 4 * (sc.genus - 2):
        raise InternalConsistencyError(
            f"excess identity violated: {total} != 4*({sc.genus} - 2); malformed embedding"
        )
    return ExcessReport(per, total, sc.genus)


# -- surgeries -------------------------------------------------------------------


def find_crosscap_candidates(G: EmbeddedGraph, c: Coloring):
    """Edges whose two incident faces are distinct quadrilaterals with a
    two-colored union, in canonical edge order."""
    faces_of_edge = [[] for _ in range(G.n_edges)]
    for i, f in enumerate(G.faces):
        for d in f.tails:
            faces_of_edge[G.edge_of[d]].append(i)
    out = []
    for k in range(G.n_edges):
        fa, fb = faces_of_edge[k]
        if fa == fb:
            continue
        if len(G.faces[fa]) != 4 or len(G.faces[fb]) != 4:
            continue
        cols = {
            c.assignment[v]
            for i in (fa, fb)
            for v in G.face_vertex_walk(G.faces[i])
        }
        if len(cols) == 2:
            out.append(k)
    return out


def crosscap_hexagon(G: EmbeddedGraph, c: Coloring, shared_edge: int):
    """Replace two adjacent two-colored quadrilaterals by a crosscap.

    The shared edge is removed, restoring a hexagonal region, and the three
    main diagonals are drawn through a crosscap added in its middle.  The
    genus rises by one, an odd quadrangulation stays odd, and the coloring
    still locally 3-colors the result.
    """
    require_quadrangulation(G)
    if coloring_violation(G, c, G.n_vertices + 2) is not None:
        raise ColoringError("crosscap surgery needs a proper coloring")
    if shared_edge not in find_crosscap_candidates(G, c):
        raise SurgeryRejectedError(
            "shared edge must bound two distinct quadrilaterals with a two-colored union"
        )
    was_local3 = is_local_coloring(G, c, 3)
    parity_before = quad_parity(G)
    sc_before = classify_surface(G)

    # merge the two quadrilaterals into a hexagon walk
    a = G.edge_reps[shared_edge]
    locs = []
    for fi, f in enumerate(G.faces):
        for pos, d in enumerate(f.tails):
            if G.edge_of[d] == shared_edge:
                locs.append((fi, pos))
    (f1, p1), (f2, p2) = locs
    w1 = list(G.faces[f1].tails)
    w2 = list(G.faces[f2].tails)
    a1 = w1[p1 + 1:] + w1[:p1]
    a2 = w2[p2 + 1:] + w2[:p2]
    if w1[p1] == G.pairing[w2[p2]]:
        hexagon = a1 + a2
    else:
        hexagon = a1 + [G.pairing[d] for d in reversed(a2)]

    # three diagonals through the crosscap: diagonal j joins walk positions
    # j and j+3, with dart (x, j, 0) at position j and (x, j, 1) at j+3.
    # The region between consecutive diagonals glues across the crosscap
    # into the quadrilateral x_i, x_{i+1}, x_{i+4}, x_{i+3}: rim slot i,
    # then the position-(i+1) diagonal, rim slot i+3 reversed, diagonal i.
    new = {j: (("x", j, 0), ("x", j, 1)) for j in range(3)}
    diag_tail_at = {j: new[j][0] for j in range(3)}
    diag_tail_at.update({j + 3: new[j][1] for j in range(3)})
    faces = [list(f.tails) for i, f in enumerate(G.faces) if i not in (f1, f2)]
    for i in range(3):
        faces.append([
            hexagon[i],
            diag_tail_at[i + 1],
            G.pairing[hexagon[i + 3]],
            diag_tail_at[(i + 3) % 6],
        ])

    pairing = _pairing_map(G)
    vertex_of = _vertex_map(G)
    for d in (a, G.pairing[a]):
        del pairing[d], vertex_of[d]
    for i in range(3):
        p, q = new[i]
        pairing[p], pairing[q] = q, p
        vertex_of[p] = G.vertex_of[hexagon[i]]
        vertex_of[q] = G.vertex_of[hexagon[i + 3]]
    G2, _ = _reassemble(faces, pairing, vertex_of)

    require_quadrangulation(G2)
    sc_after = classify_surface(G2)
    if sc_after.orientable or sc_after.euler_characteristic != sc_before.euler_characteristic - 1:
        raise InternalConsistencyError("crosscap must lower chi by exactly one")
    if parity_before == ODD and quad_parity(G2) != ODD:
        raise InternalConsistencyError("crosscap lost the odd parity")
    if was_local3 and not is_local_coloring(G2, c, 3):
        raise InternalConsistencyError("crosscap broke the local 3-coloring")
    if not find_crosscap_candidates(G2, c):
        raise InternalConsistencyError("crosscap left no two-colored face pair to repeat on")
    return G2, c


def refine_3x3(G: EmbeddedGraph, c: Coloring):
    """Subdivide each edge in three and each face into nine.

    Parity and surface are untouched, parallel edges disappear, and the
    coloring extends with the same color set: new vertices copy a nearby
    corner (a graph homomorphism onto the original, so properness and
    locality carry over verbatim).
    """
    require_quadrangulation(G)
    if coloring_violation(G, c, G.n_vertices + 2) is not None:
        raise ColoringError("refinement extends a proper coloring only")
    parity_before = quad_parity(G)
    sc_before = classify_surface(G)

    taken = set(G.vertices)

    def fresh(base):
        name = base
        while name in taken:
            name = "_" + name
        taken.add(name)
        return name

    side_name = {}
    for k in range(G.n_edges):
        d = G.edge_reps[k]
        side_name[d] = fresh(f"e{k}a")
        side_name[G.pairing[d]] = fresh(f"e{k}b")

    faces = []
    colors = dict(c.assignment)
    for k in range(G.n_edges):
        d = G.edge_reps[k]
        colors[side_name[d]] = c.assignment[G.vertex_of[G.pairing[d]]]
        colors[side_name[G.pairing[d]]] = c.assignment[G.vertex_of[d]]

    for fi, f in enumerate(G.faces):
        walk = list(f.tails)
        corner = [G.vertex_of[d] for d in walk]
        inner = {}
        for r in (1, 2):
            for s in (1, 2):
                inner[(r, s)] = fresh(f"f{fi}.{r}{s}")
                colors[inner[(r, s)]] = c.assignment[corner[[(0, 0), (0, 1), (1, 1), (1, 0)].index((r % 2, s % 2))]]

        def grid(r, s):
            # corners
            if (r, s) == (0, 0):
                return corner[0]
            if (r, s) == (0, 3):
                return corner[1]
            if (r, s) == (3, 3):
                return corner[2]
            if (r, s) == (3, 0):
                return corner[3]
            # sides: top = slot 0, right = slot 1, bottom = slot 2, left = slot 3
            if r == 0:
                return side_name[walk[0]] if s == 1 else side_name[G.pairing[walk[0]]]
            if s == 3:
                return side_name[walk[1]] if r == 1 else side_name[G.pairing[walk[1]]]
            if r == 3:
                return side_name[walk[2]] if s == 2 else side_name[G.pairing[walk[2]]]
            if s == 0:
                return side_name[walk[3]] if r == 2 else side_name[G.pairing[walk[3]]]
            return inner[(r, s)]

        for r in range(3):
            for s in range(3):
                faces.append((grid(r, s), grid(r, s + 1), grid(r + 1, s + 1), grid(r + 1, s)))

    from .surface_map import FaceListComplex, assemble_embedding

    G2 = assemble_embedding(FaceListComplex.from_lists(faces))
    c2 = Coloring({v: colors[v] for v in G2.vertices}, c.m)

    if (G2.n_vertices, G2.n_edges, len(G2.faces)) != (
        G.n_vertices + 2 * G.n_edges + 4 * len(G.faces),
        3 * G.n_edges + 12 * len(G.faces),
        9 * len(G.faces),
    ):
        raise InternalConsistencyError("refinement counts V+2E+4F / 3E+12F / 9F violated")
    if classify_surface(G2) != sc_before:
        raise InternalConsistencyError("refinement changed the surface")
    if len(set(G2.edges)) != G2.n_edges:
        raise InternalConsistencyError("refinement left parallel edges")
    if quad_parity(G2) != parity_before:
        raise InternalConsistencyError("refinement changed the parity")
    r_in = 1 + max(
        (len({c.assignment[w] for w in G.adjacency[v]}) for v in G.vertices), default=0
    )
    if coloring_violation(G2, c2, r_in) is not None:
        raise InternalConsistencyError("refinement broke the coloring")
    return G2, c2


def identify_face_diagonal(G: EmbeddedGraph, c: Coloring, face_index: int):
    """Cut out a face with four distinct vertices and sew its equal-colored
    diagonal together: x is identified with z, edge xy with zy, xt with zt.
    The surface and the parity stay, the face count drops by one."""
    require_quadrangulation(G)
    if coloring_violation(G, c, G.n_vertices + 2) is not None:
        raise ColoringError("identification needs a proper coloring")
    face = G.faces[face_index]
    walk = list(face.tails)
    names = [G.vertex_of[d] for d in walk]
    if len(set(names)) != 4:
        raise UnsupportedInputError("identification needs four distinct face vertices")

    eq = [p for p in ((0, 2), (1, 3)) if c.assignment[names[p[0]]] == c.assignment[names[p[1]]]]
    if not eq:
        raise SurgeryRejectedError("no equal-colored diagonal on this face")
    # rotate the walk so the identified pair sits at positions 0 and 2 with
    # the lexicographically least vertex first
    use13 = (0, 2) not in eq or (
        len(eq) == 2 and min(names[1], names[3]) < min(names[0], names[2])
    )
    if use13:
        walk = walk[1:] + walk[:1]
        names = names[1:] + names[:1]
    if names[2] < names[0]:
        walk = walk[2:] + walk[:2]
        names = names[2:] + names[:2]

    D = walk  # D0 at x, D1 at y, D2 at z, D3 at t
    x, y, z, t = names
    parity_before = quad_parity(G)
    sc_before = classify_surface(G)

    pairing = _pairing_map(G)
    remap = {
        D[1]: pairing[D[0]],
        pairing[D[1]]: D[0],
        D[2]: pairing[D[3]],
        pairing[D[2]]: D[3],
    }
    faces = []
    for i, f in enumerate(G.faces):
        if i == face_index:
            continue
        faces.append([remap.get(d, d) for d in f.tails])
    for d in (D[1], pairing[D[1]], D[2], pairing[D[2]]):
        del pairing[d]
    vertex_of = {d: (x if G.vertex_of[d] == z else G.vertex_of[d]) for d in pairing}
    G2, _ = _reassemble(faces, pairing, vertex_of)

    if len(G2.faces) != len(G.faces) - 1:
        raise InternalConsistencyError("identification must remove exactly one face")
    if classify_surface(G2) != sc_before:
        raise InternalConsistencyError("identification changed the surface")
    if quad_parity(G2) != parity_before:
        raise InternalConsistencyError("identification changed the parity")
    c2 = Coloring({v: c.assignment[v] for v in G2.vertices}, c.m)
    if coloring_violation(G2, c2, G2.n_vertices + 2) is not None:
        raise InternalConsistencyError("identification broke properness")
    return G2, c2
