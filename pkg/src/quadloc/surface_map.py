"""Graphs embedded in surfaces, encoded as rotation systems with signatures.

An embedding is stored on *darts* (half-edges): a permutation ``rotation``
whose cycles are the cyclic dart orders around vertices, a fixed-point-free
involution ``pairing`` matching the two darts of each edge, and a ``+1/-1``
signature per edge.  Signature ``-1`` marks edges along which local
orientation flips, so non-orientable surfaces are fully representable.

Faces are traced with a sign accumulator: a walk state is ``(dart, side)``,
crossing a negative edge flips the side, and the side decides whether the
walk turns by ``rotation`` or its inverse.  Each face is kept once (its
reversed traversal is discarded), so face lengths sum to ``2 * n_edges``.

The module also provides the inverse direction: :func:`assemble_from_slots`
rebuilds a rotation system with signature from an explicit face structure.
Every construction and surgery in the package funnels through it, and it
verifies its own output by re-tracing the faces.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

from .errors import (
    AlreadyOrientableError,
    AssemblyError,
    InternalConsistencyError,
    StructureError,
    UnsupportedInputError,
)


@dataclass(frozen=True)
class SurfaceClass:
    """Orientability, Euler characteristic and genus of a closed surface."""

    orientable: bool
    euler_characteristic: int
    genus: int

    def __post_init__(self):
        chi = self.euler_characteristic
        if self.orientable:
            if chi != 2 - 2 * self.genus:
                raise StructureError("orientable surface needs chi = 2 - 2g")
        else:
            if self.genus < 1 or chi != 2 - self.genus:
                raise StructureError("non-orientable surface needs chi = 2 - g, g >= 1")

    def describe(self) -> str:
        kind = "orientable" if self.orientable else "non-orientable"
        return f"{kind} genus {self.genus} (chi = {self.euler_characteristic})"


@dataclass(frozen=True)
class FaceWalk:
    """One facial walk: a cyclic sequence of (dart, side) slots.

    The slot ``(d, s)`` traverses the edge of ``d`` away from the vertex of
    ``d``; ``s`` is the sign-accumulator state while doing so.  An edge is
    covered by exactly two slots over the whole embedding, one per side.
    """

    slots: tuple

    def __len__(self):
        return len(self.slots)

    @property
    def tails(self):
        return tuple(d for d, _ in self.slots)


class EmbeddedGraph:
    """Immutable combinatorial map.

    Darts are ``0 .. n_darts-1``.  Edges are derived orbits of ``pairing``
    and indexed by their smaller dart in increasing order.  Vertex names are
    strings; ``rotation`` cycles must partition the darts exactly by
    ``vertex_of`` and the whole map must be connected.
    """

    __slots__ = ("rotation", "pairing", "signature", "vertex_of", "__dict__")

    def __init__(self, rotation, pairing, signature, vertex_of):
        self.rotation = tuple(rotation)
        self.pairing = tuple(pairing)
        self.signature = tuple(signature)
        self.vertex_of = tuple(vertex_of)
        self._validate()

    # -- structure ---------------------------------------------------------

    def _validate(self):
        n = len(self.rotation)
        if n == 0:
            raise StructureError("empty map")
        if len(self.pairing) != n or len(self.vertex_of) != n:
            raise StructureError("rotation, pairing and vertex_of must have equal length")
        if sorted(self.rotation) != list(range(n)):
            raise StructureError("rotation is not a permutation of the darts")
        for d, e in enumerate(self.pairing):
            if not 0 <= e < n or e == d or self.pairing[e] != d:
                raise StructureError("pairing is not a fixed-point-free involution")
        if any(not isinstance(v, str) for v in self.vertex_of):
            raise StructureError("vertex names must be strings")
        if len(self.signature) != self.n_edges:
            raise StructureError("signature must assign one sign per edge")
        if any(s not in (1, -1) for s in self.signature):
            raise StructureError("signature values must be +1 or -1")
        # rotation cycles must be exactly the fibers of vertex_of
        seen_vids = set()
        visited = [False] * n
        for d in range(n):
            if visited[d]:
                continue
            vid = self.vertex_of[d]
            if vid in seen_vids:
                raise StructureError(f"vertex {vid!r} split across several rotation cycles")
            seen_vids.add(vid)
            cur = d
            while not visited[cur]:
                visited[cur] = True
                if self.vertex_of[cur] != vid:
                    raise StructureError(f"rotation cycle mixes vertices {vid!r} and {self.vertex_of[cur]!r}")
                cur = self.rotation[cur]
        # connectivity under rotation and pairing
        stack = [0]
        reach = {0}
        while stack:
            d = stack.pop()
            for e in (self.rotation[d], self.pairing[d]):
                if e not in reach:
                    reach.add(e)
                    stack.append(e)
        if len(reach) != n:
            raise StructureError("map is not connected")

    # -- derived data ------------------------------------------------------

    @property
    def n_darts(self) -> int:
        return len(self.rotation)

    @cached_property
    def edge_reps(self):
        return tuple(d for d in range(self.n_darts) if d < self.pairing[d])

    @property
    def n_edges(self) -> int:
        return self.n_darts // 2

    @cached_property
    def edge_of(self):
        idx = [0] * self.n_darts
        for k, d in enumerate(self.edge_reps):
            idx[d] = idx[self.pairing[d]] = k
        return tuple(idx)

    @cached_property
    def dart_sign(self):
        return tuple(self.signature[self.edge_of[d]] for d in range(self.n_darts))

    @cached_property
    def vertices(self):
        return tuple(sorted(set(self.vertex_of)))

    @property
    def n_vertices(self) -> int:
        return len(self.vertices)

    @cached_property
    def darts_at(self):
        """Vertex name -> its rotation cycle, starting from the smallest dart."""
        firsts = {}
        for d in range(self.n_darts):
            v = self.vertex_of[d]
            if v not in firsts:
                firsts[v] = d
        out = {}
        for v, d0 in firsts.items():
            cyc = [d0]
            cur = self.rotation[d0]
            while cur != d0:
                cyc.append(cur)
                cur = self.rotation[cur]
            out[v] = tuple(cyc)
        return out

    def degree(self, vid: str) -> int:
        return len(self.darts_at[vid])

    def edge_endpoints(self, k: int):
        d = self.edge_reps[k]
        return (self.vertex_of[d], self.vertex_of[self.pairing[d]])

    @cached_property
    def edges(self):
        """Edge index -> sorted endpoint pair."""
        return tuple(tuple(sorted(self.edge_endpoints(k))) for k in range(self.n_edges))

    @cached_property
    def adjacency(self):
        """Vertex name -> frozenset of neighbor names (parallel edges collapsed)."""
        adj = {v: set() for v in self.vertices}
        for u, w in self.edges:
            adj[u].add(w)
            adj[w].add(u)
        return {v: frozenset(ns) for v, ns in adj.items()}

    def edges_between(self, u: str, w: str):
        key = tuple(sorted((u, w)))
        return tuple(k for k, e in enumerate(self.edges) if e == key)

    def has_loop(self) -> bool:
        return any(u == w for u, w in self.edges)

    # -- face tracing ------------------------------------------------------

    @cached_property
    def rotation_inv(self):
        inv = [0] * self.n_darts
        for d, e in enumerate(self.rotation):
            inv[e] = d
        return tuple(inv)

    def _next_slot(self, dart, side):
        side2 = side * self.dart_sign[dart]
        d2 = self.pairing[dart]
        return (self.rotation[d2] if side2 > 0 else self.rotation_inv[d2]), side2

    def _reversed_slot(self, dart, side):
        # the same edge passage, traversed the other way
        return self.pairing[dart], -side * self.dart_sign[dart]

    @cached_property
    def faces(self):
        """All facial walks, each kept in one traversal direction."""
        n2 = 2 * self.n_darts
        seen = [False] * n2

        def state_id(d, s):
            return 2 * d + (s < 0)

        walks = []
        for start in range(n2):
            if seen[start]:
                continue
            d0, s0 = start >> 1, -1 if start & 1 else 1
            walk = [(d0, s0)]
            seen[start] = True
            cur = self._next_slot(d0, s0)
            while cur != (d0, s0):
                walk.append(cur)
                seen[state_id(*cur)] = True
                cur = self._next_slot(*cur)
            for st in walk:
                mirror = self._reversed_slot(*st)
                if mirror in walk and len(walk) > 1:
                    raise InternalConsistencyError("facial walk coincides with its own reversal")
                seen[state_id(*mirror)] = True
            walks.append(FaceWalk(tuple(walk)))
        if sum(len(w) for w in walks) != 2 * self.n_edges:
            raise InternalConsistencyError("face lengths do not sum to twice the edge count")
        return tuple(walks)

    def face_vertex_walk(self, face: FaceWalk):
        return tuple(self.vertex_of[d] for d in face.tails)

    def face_lengths(self):
        return tuple(sorted(len(f) for f in self.faces))

    # -- switching ---------------------------------------------------------

    def switched(self, vids) -> "EmbeddedGraph":
        """Switch local orientation at ``vids``: reverse their rotations and
        flip the sign of every edge with exactly one end among them.  The
        same embedding, in a different gauge."""
        vids = set(vids)
        rot = list(self.rotation)
        for d in range(self.n_darts):
            if self.vertex_of[d] in vids:
                rot[d] = self.rotation_inv[d]
        sig = list(self.signature)
        for k, d in enumerate(self.edge_reps):
            ends = (self.vertex_of[d], self.vertex_of[self.pairing[d]])
            if (ends[0] in vids) != (ends[1] in vids):
                sig[k] = -sig[k]
        return EmbeddedGraph(rot, self.pairing, sig, self.vertex_of)


# -- classification ---------------------------------------------------------


def signature_is_switching_trivial(G: EmbeddedGraph) -> bool:
    """True iff some switching makes every edge positive.

    Decided by spanning-tree sign propagation: propagate a vertex sign along
    a spanning tree, then check every remaining edge closes its fundamental
    cycle with positive total sign.
    """
    sign = {G.vertices[0]: 1}
    stack = [G.vertices[0]]
    while stack:
        v = stack.pop()
        for d in G.darts_at[v]:
            w = G.vertex_of[G.pairing[d]]
            if w not in sign:
                sign[w] = sign[v] * G.dart_sign[d]
                stack.append(w)
    for k, d in enumerate(G.edge_reps):
        u, w = G.vertex_of[d], G.vertex_of[G.pairing[d]]
        if sign[u] * sign[w] * G.signature[k] != 1:
            return False
    return True


def classify_surface(G: EmbeddedGraph) -> SurfaceClass:
    """Euler characteristic, orientability and genus of the carrier surface."""
    chi = G.n_vertices - G.n_edges + len(G.faces)
    orientable = signature_is_switching_trivial(G)
    if orientable:
        if chi % 2 != 0 or chi > 2:
            raise InternalConsistencyError(f"orientable map with chi = {chi}")
        return SurfaceClass(True, chi, (2 - chi) // 2)
    if chi > 1:
        raise InternalConsistencyError(f"non-orientable map with chi = {chi}")
    return SurfaceClass(False, chi, 2 - chi)


def trace_faces(G: EmbeddedGraph):
    """All facial walks of the embedding (cached on the graph)."""
    return G.faces


# -- assembling maps from face structures -----------------------------------


def _canonical_cycle(seq):
    """Canonical form of a cyclic sequence, up to rotation only."""
    best = None
    n = len(seq)
    for i in range(n):
        cand = tuple(seq[i:] + seq[:i])
        if best is None or cand < best:
            best = cand
    return best


def _canonical_dart_face(tails, pairing):
    """Canonical form of a facial walk given by tail darts, up to rotation
    and reversal (the reversed walk has the paired darts in reverse order)."""
    fwd = list(tails)
    rev = [pairing[d] for d in reversed(fwd)]
    return min(_canonical_cycle(fwd), _canonical_cycle(rev))


def assemble_from_slots(slot_faces, pairing, vertex_of):
    """Build an :class:`EmbeddedGraph` realizing an explicit face structure.

    ``slot_faces``: faces as cyclic sequences of tail darts; every edge must
    be traversed exactly twice in total.  ``pairing`` and ``vertex_of`` are
    mappings on arbitrary sortable dart keys.  Returns ``(graph, dart_map)``
    where ``dart_map`` sends input keys to the dense dart ids of the result.

    The vertex links implied by the faces must close into a single cycle per
    vertex (disk condition); otherwise :class:`AssemblyError` names the
    pinched vertex.  The traced faces of the result are checked against the
    input before returning.
    """
    darts = sorted(pairing)
    if len(darts) != len(set(darts)):
        raise AssemblyError("duplicate dart keys")
    dartset = set(darts)
    for d in darts:
        e = pairing[d]
        if e not in dartset or e == d or pairing[e] != d:
            raise AssemblyError("pairing is not a fixed-point-free involution")
        if d not in vertex_of:
            raise AssemblyError(f"dart {d!r} has no vertex")

    # two traversals per edge
    per_edge = {}
    for f, face in enumerate(slot_faces):
        if not face:
            raise AssemblyError("empty face")
        for d in face:
            if d not in dartset:
                raise AssemblyError(f"unknown dart {d!r} in a face")
            rep = min(d, pairing[d])
            per_edge[rep] = per_edge.get(rep, 0) + 1
    for d in darts:
        rep = min(d, pairing[d])
        if per_edge.get(rep, 0) != 2:
            raise AssemblyError(f"edge of dart {d!r} is covered {per_edge.get(rep, 0)} times, need 2")

    # flags: (face, position, end); end 0 = tail of the slot, 1 = head
    def flag_dart(fl):
        f, i, end = fl
        d = slot_faces[f][i]
        return d if end == 0 else pairing[d]

    def flag_vertex(fl):
        return vertex_of[flag_dart(fl)]

    flags_of_dart = {}
    for f, face in enumerate(slot_faces):
        for i in range(len(face)):
            for end in (0, 1):
                fl = (f, i, end)
                flags_of_dart.setdefault(flag_dart(fl), []).append(fl)
    for d, fls in flags_of_dart.items():
        if len(fls) != 2:
            raise AssemblyError(f"dart {d!r} appears in {len(fls)} slots, need 2")

    def sigma2(fl):
        a, b = flags_of_dart[flag_dart(fl)]
        return b if fl == a else a

    def sigma1(fl):
        f, i, end = fl
        L = len(slot_faces[f])
        return (f, (i - 1) % L, 1) if end == 0 else (f, (i + 1) % L, 0)

    def sigma0(fl):
        f, i, end = fl
        return (f, i, 1 - end)

    # vertex links -> rotation cycles, with in/out flag per dart passage
    flags_at = {}
    for d in darts:
        for fl in flags_of_dart[d]:
            flags_at.setdefault(vertex_of[d], []).append(fl)

    rotation_cycles = {}
    flag_io = {}  # dart key -> (in_flag, out_flag) along its vertex link walk
    for v in sorted(flags_at):
        fls = flags_at[v]
        start = min(fls)
        walk_darts = []
        cur = start
        count = 0
        while True:
            nxt = sigma2(cur)
            d = flag_dart(cur)
            walk_darts.append(d)
            flag_io[d] = (cur, nxt)
            cur = sigma1(nxt)
            count += 2
            if cur == start:
                break
            if count > len(fls):
                raise AssemblyError(f"vertex {v!r} has no disk neighborhood", vertex=v)
        if count != len(fls):
            raise AssemblyError(f"vertex {v!r} has no disk neighborhood", vertex=v)
        rotation_cycles[v] = walk_darts

    # signatures from how the two link walks meet across each edge
    dart_ids = {d: i for i, d in enumerate(darts)}
    n = len(darts)
    rotation = [0] * n
    for cyc in rotation_cycles.values():
        for i, d in enumerate(cyc):
            rotation[dart_ids[d]] = dart_ids[cyc[(i + 1) % len(cyc)]]
    pair_list = [0] * n
    for d in darts:
        pair_list[dart_ids[d]] = dart_ids[pairing[d]]

    signature = []
    for di in range(n):
        if di < pair_list[di]:
            a = darts[di]
            b = pairing[a]
            in_a, _out_a = flag_io[a]
            _in_b, out_b = flag_io[b]
            signature.append(1 if sigma0(in_a) == out_b else -1)

    vof = [vertex_of[d] for d in darts]
    G = EmbeddedGraph(rotation, pair_list, signature, vof)

    # the assembled map must reproduce the requested faces exactly
    want = sorted(
        _canonical_dart_face([dart_ids[d] for d in face], pair_list) for face in slot_faces
    )
    got = sorted(_canonical_dart_face(list(f.tails), pair_list) for f in G.faces)
    if want != got:
        raise InternalConsistencyError("assembled map does not reproduce the input faces")
    return G, dict(dart_ids)


@dataclass(frozen=True)
class FaceListComplex:
    """Faces of a polygonal complex, each a cyclic vertex sequence.

    Only simple graphs can be described this way: every unordered vertex
    pair occurring on face boundaries must occur exactly twice overall.
    """

    faces: tuple

    @staticmethod
    def from_lists(faces):
        return FaceListComplex(tuple(tuple(str(v) for v in f) for f in faces))


def assemble_embedding(complex_: FaceListComplex):
    """Assemble a vertex-listed face complex into an embedded graph."""
    pair_count = {}
    for face in complex_.faces:
        if len(face) < 2:
            raise AssemblyError("faces need at least two sides")
        for i, u in enumerate(face):
            w = face[(i + 1) % len(face)]
            key = tuple(sorted((u, w)))
            pair_count[key] = pair_count.get(key, 0) + 1
    bad = {k: c for k, c in pair_count.items() if c != 2}
    if bad:
        k, c = sorted(bad.items())[0]
        raise AssemblyError(f"edge slot {k} occurs {c} times, need exactly 2")

    edges = sorted(pair_count)
    edge_idx = {e: i for i, e in enumerate(edges)}
    pairing = {}
    vertex_of = {}
    for i, (u, w) in enumerate(edges):
        pairing[("d", i, 0)] = ("d", i, 1)
        pairing[("d", i, 1)] = ("d", i, 0)
        vertex_of[("d", i, 0)] = u
        vertex_of[("d", i, 1)] = w

    used = {e: 0 for e in edges}
    slot_faces = []
    for face in complex_.faces:
        tails = []
        for i, u in enumerate(face):
            w = face[(i + 1) % len(face)]
            key = tuple(sorted((u, w)))
            k = edge_idx[key]
            if u == w:
                # loop: use each dart once as tail
                end = used[key]
            else:
                end = 0 if u == key[0] else 1
            used[key] += 1
            tails.append(("d", k, end))
        slot_faces.append(tails)
    G, _ = assemble_from_slots(slot_faces, pairing, vertex_of)
    # re-traced vertex walks must reproduce the input up to rotation/reflection
    want = sorted(min(_canonical_cycle(list(f)), _canonical_cycle(list(reversed(f)))) for f in complex_.faces)
    got = sorted(
        min(
            _canonical_cycle(list(G.face_vertex_walk(f))),
            _canonical_cycle(list(reversed(G.face_vertex_walk(f)))),
        )
        for f in G.faces
    )
    if want != got:
        raise InternalConsistencyError("assembled embedding changed the vertex walks")
    return G


# -- editing operations ------------------------------------------------------


def _slot_faces_of(G: EmbeddedGraph):
    return [list(f.tails) for f in G.faces]


def _pairing_map(G: EmbeddedGraph):
    return {d: G.pairing[d] for d in range(G.n_darts)}


def _vertex_map(G: EmbeddedGraph):
    return {d: G.vertex_of[d] for d in range(G.n_darts)}


def _reassemble(slot_faces, pairing, vertex_of):
    # dart keys may mix ints (inherited) and tuples (new); normalize
    keyed = {}
    for d in pairing:
        keyed[d] = (0, d) if isinstance(d, int) else (1,) + tuple(d)
    faces2 = [[keyed[d] for d in f] for f in slot_faces]
    pairing2 = {keyed[d]: keyed[e] for d, e in pairing.items()}
    vof2 = {keyed[d]: v for d, v in vertex_of.items()}
    G, dart_map = assemble_from_slots(faces2, pairing2, vof2)
    return G, {d: dart_map[keyed[d]] for d in pairing}


def delete_edge(G: EmbeddedGraph, edge_index: int) -> EmbeddedGraph:
    """Remove an edge bordering two distinct faces, merging them."""
    a = G.edge_reps[edge_index]
    b = G.pairing[a]
    locs = []
    for fi, face in enumerate(G.faces):
        for pos, d in enumerate(face.tails):
            if G.edge_of[d] == edge_index:
                locs.append((fi, pos))
    if len(locs) != 2:
        raise InternalConsistencyError("edge not covered by exactly two slots")
    (f1, p1), (f2, p2) = locs
    if f1 == f2:
        raise UnsupportedInputError("edge borders a single face; deletion unsupported")

    w1 = list(G.faces[f1].tails)
    w2 = list(G.faces[f2].tails)
    a1 = w1[p1 + 1:] + w1[:p1]  # walk 1 without its edge slot
    a2 = w2[p2 + 1:] + w2[:p2]
    if w1[p1] == G.pairing[w2[p2]]:
        merged = a1 + a2
    else:
        # both slots traverse the edge the same way: reverse one side
        merged = a1 + [G.pairing[d] for d in reversed(a2)]

    faces = [list(f.tails) for i, f in enumerate(G.faces) if i not in (f1, f2)]
    faces.append(merged)
    pairing = _pairing_map(G)
    vertex_of = _vertex_map(G)
    for d in (a, b):
        del pairing[d], vertex_of[d]
    G2, _ = _reassemble(faces, pairing, vertex_of)
    return G2


def insert_chord(G: EmbeddedGraph, face_index: int, pos_i: int, pos_j: int):
    """Add an edge inside a face between two of its corners.

    Corners are walk positions; the face splits in two.  Returns the new
    graph and the endpoints of the inserted edge.
    """
    face = G.faces[face_index]
    L = len(face)
    if pos_i == pos_j or not (0 <= pos_i < L and 0 <= pos_j < L):
        raise UnsupportedInputError("chord needs two distinct walk positions")
    i, j = min(pos_i, pos_j), max(pos_i, pos_j)
    w = list(face.tails)
    u = G.vertex_of[w[i]]
    v = G.vertex_of[w[j]]
    p, q = ("c", 0), ("c", 1)

    faces = [list(f.tails) for k, f in enumerate(G.faces) if k != face_index]
    faces.append(w[i:j] + [q])   # closes j -> i via the chord
    faces.append(w[j:] + w[:i] + [p])
    pairing = _pairing_map(G)
    vertex_of = _vertex_map(G)
    pairing[p], pairing[q] = q, p
    vertex_of[p], vertex_of[q] = u, v
    G2, dart_map = _reassemble(faces, pairing, vertex_of)
    return G2, (u, v)


# -- medial graph ------------------------------------------------------------


def medial_graph(G: EmbeddedGraph):
    """Medial map: one vertex per edge of ``G``, one edge per corner.

    Returns ``(M, tags)`` with one tag per face of ``M``: ``("star", v)``
    for the face around the vertex ``v`` of ``G`` and ``("cycle", i)`` for
    the face inside face ``i`` of ``G``.  The medial map lives on the same
    surface, which is verified.
    """
    if any(len(c) < 2 for c in G.darts_at.values()):
        raise UnsupportedInputError("medial graph needs minimum degree 2")

    rho, rho_inv, theta = G.rotation, G.rotation_inv, G.pairing

    def tau(d):
        return 1 if d < theta[d] else G.dart_sign[d]

    # medial dart (d, 0) sits at the midpoint of d's edge, (d, 1) at rho(d)'s
    n = G.n_darts
    ids = {}
    for d in range(n):
        ids[(d, 0)] = 2 * d
        ids[(d, 1)] = 2 * d + 1
    rotation = [0] * (2 * n)
    vertex_of = [""] * (2 * n)
    for k in range(G.n_edges):
        a = G.edge_reps[k]
        b = theta[a]
        if G.signature[k] > 0:
            cyc = [(b, 0), (rho_inv[b], 1), (a, 0), (rho_inv[a], 1)]
        else:
            cyc = [(rho_inv[b], 1), (b, 0), (a, 0), (rho_inv[a], 1)]
        for i, md in enumerate(cyc):
            rotation[ids[md]] = ids[cyc[(i + 1) % 4]]
            vertex_of[ids[md]] = f"e{k}"
    pairing = [0] * (2 * n)
    signature = []
    for d in range(n):
        pairing[2 * d] = 2 * d + 1
        pairing[2 * d + 1] = 2 * d
        signature.append(tau(d) * tau(rho[d]))
    M = EmbeddedGraph(rotation, pairing, signature, vertex_of)

    if any(M.degree(v) != 4 for v in M.vertices) or M.n_vertices != G.n_edges:
        raise InternalConsistencyError("medial map is not 4-regular on the edge set")

    # expected faces, as multisets of medial edges (= darts of G)
    expected = {}
    for v in G.vertices:
        key = tuple(sorted(G.darts_at[v]))
        expected.setdefault(key, []).append(("star", v))
    for i, f in enumerate(G.faces):
        corners = []
        for k in range(len(f)):
            d, _ = f.slots[k]
            d2, s2 = f.slots[(k + 1) % len(f)]
            corners.append(theta[d] if s2 > 0 else d2)
        key = tuple(sorted(corners))
        expected.setdefault(key, []).append(("cycle", i))

    tags = []
    for mf in M.faces:
        key = tuple(sorted(d // 2 for d in mf.tails))
        bucket = expected.get(key)
        if not bucket:
            raise InternalConsistencyError("medial face does not match a star or cycle face")
        tags.append(bucket.pop(0))
    if any(bucket for bucket in expected.values()):
        raise InternalConsistencyError("medial faces missing")

    if classify_surface(M) != classify_surface(G):
        raise InternalConsistencyError("medial map changed the surface")
    return M, tuple(tags)


# -- orientation double cover -------------------------------------------------


def orientation_double_cover(G: EmbeddedGraph) -> EmbeddedGraph:
    """The orientable double cover of a non-orientable map.

    Doubles the Euler characteristic and duplicates every face.  For
    orientable input the cover would be two disjoint copies, so the
    operation reports that instead of returning a disconnected map.
    """
    if classify_surface(G).orientable:
        raise AlreadyOrientableError("already orientable: two disjoint copies")
    n = G.n_darts

    def did(d, s):
        return 2 * d + (s < 0)

    rotation = [0] * (2 * n)
    pairing = [0] * (2 * n)
    vertex_of = [""] * (2 * n)
    for d in range(n):
        rotation[did(d, 1)] = did(G.rotation[d], 1)
        rotation[did(d, -1)] = did(G.rotation_inv[d], -1)
        for s in (1, -1):
            pairing[did(d, s)] = did(G.pairing[d], s * G.dart_sign[d])
            tag = "+" if s > 0 else "-"
            vertex_of[did(d, s)] = f"{G.vertex_of[d]}|{tag}"
    signature = [1] * n
    cover = EmbeddedGraph(rotation, pairing, signature, vertex_of)

    base = classify_surface(G)
    top = classify_surface(cover)
    if not top.orientable or top.euler_characteristic != 2 * base.euler_characteristic:
        raise InternalConsistencyError("double cover must be orientable with doubled chi")
    if sorted(cover.face_lengths()) != sorted(G.face_lengths() * 2):
        raise InternalConsistencyError("double cover must duplicate every face")
    return cover
