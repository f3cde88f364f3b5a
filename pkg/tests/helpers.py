"""Shared test utilities: relabeling, random orientations, small builders."""
from __future__ import annotations

import random

from quadloc.localcolor import Coloring
from quadloc.surface_map import EmbeddedGraph, FaceListComplex, assemble_embedding


def relabel_darts(G: EmbeddedGraph, rng: random.Random) -> EmbeddedGraph:
    perm = list(range(G.n_darts))
    rng.shuffle(perm)
    inv = [0] * G.n_darts
    for d, e in enumerate(perm):
        inv[e] = d
    rotation = [0] * G.n_darts
    pairing = [0] * G.n_darts
    vertex_of = [""] * G.n_darts
    for d in range(G.n_darts):
        rotation[perm[d]] = perm[G.rotation[d]]
        pairing[perm[d]] = perm[G.pairing[d]]
        vertex_of[perm[d]] = G.vertex_of[d]
    signature = []
    for d in range(G.n_darts):
        if d < pairing[d]:
            signature.append(G.dart_sign[inv[d]])
    return EmbeddedGraph(rotation, pairing, signature, vertex_of)


def random_orientation(G: EmbeddedGraph, rng: random.Random):
    out = {}
    for k, d in enumerate(G.edge_reps):
        out[k] = d if rng.random() < 0.5 else G.pairing[d]
    return out


def flip_random_faces(G: EmbeddedGraph, rng: random.Random):
    """Face slots with a random traversal direction per face, for checking
    that the breaking-edge parity ignores the choice."""
    tails_per_edge = [[] for _ in range(G.n_edges)]
    for f in G.faces:
        if rng.random() < 0.5:
            slots = [(d, s) for d, s in f.slots]
        else:
            slots = [G._reversed_slot(d, s) for d, s in reversed(f.slots)]
        for d, _ in slots:
            tails_per_edge[G.edge_of[d]].append(d)
    return tails_per_edge


def two_squares_sphere():
    G = assemble_embedding(FaceListComplex.from_lists([(1, 2, 3, 4), (1, 2, 3, 4)]))
    c = Coloring({"1": 1, "2": 2, "3": 1, "4": 2}, 2)
    return G, c


def greedy_coloring(G: EmbeddedGraph) -> Coloring:
    assignment = {}
    for v in G.vertices:
        used = {assignment[w] for w in G.adjacency[v] if w in assignment}
        k = 1
        while k in used:
            k += 1
        assignment[v] = k
    return Coloring(assignment, max(assignment.values()))


def torus_grid(n: int, m: int):
    faces = []
    for i in range(n):
        for j in range(m):
            faces.append((f"{i}.{j}", f"{(i + 1) % n}.{j}",
                          f"{(i + 1) % n}.{(j + 1) % m}", f"{i}.{(j + 1) % m}"))
    G = assemble_embedding(FaceListComplex.from_lists(faces))
    if n % 3 == 0 and m % 3 == 0:
        c = Coloring({v: (int(v.split(".")[0]) + int(v.split(".")[1])) % 3 + 1
                      for v in G.vertices}, 3)
    else:
        c = greedy_coloring(G)
    return G, c


def klein_bottle_grid(n: int = 4):
    faces = []
    for i in range(n):
        for j in range(n - 1):
            faces.append((f"{i}.{j}", f"{(i + 1) % n}.{j}",
                          f"{(i + 1) % n}.{j + 1}", f"{i}.{j + 1}"))
    for i in range(n):
        faces.append((f"{i}.{n - 1}", f"{(i + 1) % n}.{n - 1}",
                      f"{(-(i + 1)) % n}.0", f"{(-i) % n}.0"))
    G = assemble_embedding(FaceListComplex.from_lists(faces))
    c = Coloring({v: (int(v.split(".")[0]) + int(v.split(".")[1])) % 2 + 1 for v in G.vertices}, 2)
    return G, c


def bipyramid_over_c5():
    faces = []
    for i in range(5):
        faces.append((f"v{i}", f"v{(i + 1) % 5}", "a"))
        faces.append((f"v{i}", f"v{(i + 1) % 5}", "b"))
    G = assemble_embedding(FaceListComplex.from_lists(faces))
    c = Coloring({"v0": 1, "v1": 2, "v2": 1, "v3": 2, "v4": 3, "a": 4, "b": 4}, 4)
    return G, c
