"""Core graph/tree machinery against independent brute-force oracles."""

from __future__ import annotations

import itertools
import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st_

from stirhom import trees as T


def build_two_vertex_tree(n, child_labels):
    """The n-tree with one edge whose child vertex carries child_labels."""
    child_labels = sorted(child_labels)
    root_labels = [lab for lab in range(n + 1) if lab not in child_labels]
    flag_vertex = [None] * (n + 1)
    for lab in root_labels:
        flag_vertex[lab] = 0
    for lab in child_labels:
        flag_vertex[lab] = 1
    involution = list(range(n + 1)) + [n + 2, n + 1]
    flag_vertex += [0, 1]
    legs = {lab: lab for lab in range(n + 1)}
    return T.Tree(T.Graph(2, flag_vertex, involution, legs))


def corolla(n):
    legs = {lab: lab for lab in range(n + 1)}
    return T.Tree(T.Graph(1, [0] * (n + 1), list(range(n + 1)), legs))


# ---------------------------------------------------------------------------
# brute-force enumeration oracle via labeled trees and graph isomorphism


def oracle_count_stable_trees(n, i):
    """Count isomorphism classes by exhausting labeled trees.

    Nodes 0..n are the legs (degree one, keeping their labels); i+1 further
    unlabeled nodes are internal and must reach degree >= 3.  Labeled trees
    come from Pruefer sequences; classes are merged by isomorphism matching
    on leg labels.
    """
    internal = i + 1
    total = n + 1 + internal
    found = []
    for seq in itertools.product(range(total), repeat=total - 2):
        g = nx.from_prufer_sequence(list(seq))
        if any(g.degree[leg] != 1 for leg in range(n + 1)):
            continue
        if any(g.degree[v] < 3 for v in range(n + 1, total)):
            continue
        for node in g.nodes:
            g.nodes[node]["label"] = node if node <= n else -1
        if not any(nx.is_isomorphic(
                g, h, node_match=lambda a, b: a["label"] == b["label"])
                for h in found):
            found.append(g)
    return len(found)


@pytest.mark.parametrize("n,i", [(3, 1), (4, 1), (4, 2)])
def test_enumeration_matches_bruteforce(n, i):
    assert len(T.enumerate_stable_trees(n, i)) == oracle_count_stable_trees(n, i)


def test_enumeration_edge_cases():
    assert len(T.enumerate_stable_trees(2, 0)) == 1
    assert T.enumerate_stable_trees(5, 4) == []
    with pytest.raises(T.GraphError):
        T.enumerate_stable_trees(1, 0)


def test_enumeration_codes_sorted_and_distinct():
    for n, i in [(4, 2), (5, 2), (5, 3)]:
        codes = [T.canonical_code(t) for t in T.enumerate_stable_trees(n, i)]
        assert codes == sorted(codes)
        assert len(set(codes)) == len(codes)


def test_flag_count_and_genus_invariants():
    for n, i in [(4, 0), (4, 2), (5, 3), (6, 2)]:
        for t in T.enumerate_stable_trees(n, i):
            g = t.graph
            assert g.num_flags == 2 * g.num_edges + len(g.legs)
            assert g.first_betti() == 0
            assert all(g.valence(v) >= 3 for v in range(g.num_vertices))
            assert g.num_edges == i


# ---------------------------------------------------------------------------
# canonical codes


def test_canonical_code_invariant_under_flag_permutation():
    # same tree, internal flags allocated in the opposite order
    a = build_two_vertex_tree(3, (2, 3))
    flag_vertex = [0, 0, 1, 1, 1, 0]
    involution = [0, 1, 2, 3, 5, 4]
    b = T.Tree(T.Graph(2, flag_vertex, involution, {0: 0, 1: 1, 2: 2, 3: 3}))
    assert T.canonical_code(a) == T.canonical_code(b)


def test_canonical_code_separates_leg_placements():
    a = build_two_vertex_tree(3, (1, 2))
    b = build_two_vertex_tree(3, (1, 3))
    assert T.canonical_code(a) != T.canonical_code(b)


def triangle_graph(leg_vertex):
    flag_vertex = [leg_vertex[1], leg_vertex[2], leg_vertex[3]]
    involution = [0, 1, 2]
    for u, w in [(0, 1), (1, 2), (2, 0)]:
        a = len(flag_vertex)
        flag_vertex.extend((u, w))
        involution.extend((a + 1, a))
    return T.ModularGraph(
        T.Graph(3, flag_vertex, involution, {1: 0, 2: 1, 3: 2}), (0, 0, 0))


def test_triangle_mirror_same_code():
    # brute-force isomorphism oracle: some vertex bijection preserving legs
    # and adjacency exists between the two presentations
    a = triangle_graph({1: 0, 2: 1, 3: 2})
    b = triangle_graph({1: 0, 2: 2, 3: 1})

    def iso_exists(x, y):
        gx, gy = x.graph, y.graph
        leg_x = {lab: gx.flag_vertex[f] for lab, f in gx.legs.items()}
        leg_y = {lab: gy.flag_vertex[f] for lab, f in gy.legs.items()}
        def pairs(g):
            out = []
            for f1, f2 in g.edges:
                u, w = g.flag_vertex[f1], g.flag_vertex[f2]
                out.append((min(u, w), max(u, w)))
            return sorted(out)
        for perm in itertools.permutations(range(gx.num_vertices)):
            if any(perm[leg_x[lab]] != leg_y[lab] for lab in leg_x):
                continue
            mapped = sorted((min(perm[u], perm[w]), max(perm[u], perm[w]))
                            for u, w in pairs(gx))
            if mapped == pairs(gy):
                return True
        return False

    assert iso_exists(a, b)
    assert T.canonical_code(a) == T.canonical_code(b)


# ---------------------------------------------------------------------------
# contraction


def test_corolla_has_no_edges():
    t = corolla(3)
    assert t.graph.num_edges == 0
    with pytest.raises(T.GraphError):
        T.contract_edge(t, (0, 1))


def test_contract_two_vertex_tree_gives_corolla():
    t = build_two_vertex_tree(3, (2, 3))
    (edge,) = t.graph.edges
    result = T.contract_edge(t, edge)
    assert T.canonical_code(result) == T.canonical_code(corolla(3))


def test_contract_loop():
    g = T.Graph(1, [0, 0, 0], [0, 2, 1], {1: 0})
    mg = T.ModularGraph(g, (0,))
    assert mg.total_genus() == 1
    out = T.contract_edge(mg, (1, 2))
    assert out.genus == (1,)
    assert out.graph.num_edges == 0
    assert out.total_genus() == 1
    assert len(out.graph.legs) == 1


def test_contract_counts_and_genus():
    for t in T.enumerate_stable_trees(5, 2):
        for edge in t.graph.edges:
            out = T.contract_edge(t, edge)
            assert out.graph.num_edges == t.graph.num_edges - 1
            assert out.graph.num_vertices == t.graph.num_vertices - 1
    mg = triangle_graph({1: 0, 2: 1, 3: 2})
    for edge in mg.graph.edges:
        out = T.contract_edge(mg, edge)
        assert out.total_genus() == 1
        assert out.graph.num_edges == mg.graph.num_edges - 1


@settings(max_examples=40, deadline=None)
@given(st_.integers(0, 10 ** 6))
def test_double_contraction_commutes(pick):
    trees = T.enumerate_stable_trees(5, 2) + T.enumerate_stable_trees(6, 3)
    t = trees[pick % len(trees)]
    edges = t.graph.edges
    e1, e2 = edges[pick % len(edges)], edges[(pick // 7) % len(edges)]
    if e1 == e2:
        return
    r1, fm1, _ = T.contract_edge_with_maps(t, e1)
    r12 = T.contract_edge(r1, T.map_edge(fm1, e2))
    r2, fm2, _ = T.contract_edge_with_maps(t, e2)
    r21 = T.contract_edge(r2, T.map_edge(fm2, e1))
    assert T.canonical_code(r12) == T.canonical_code(r21)


def test_contract_rejects_non_edges():
    t = build_two_vertex_tree(3, (2, 3))
    with pytest.raises(T.GraphError):
        T.contract_edge(t, (0, 1))
    with pytest.raises(T.GraphError):
        T.contract_edge(t, (50, 51))


# ---------------------------------------------------------------------------
# automorphisms (vs an exhaustive flag-permutation oracle)


def oracle_automorphisms(mg):
    """All flag permutations commuting with the structure, by raw search."""
    g = mg.graph
    nf = g.num_flags
    out = []
    legs = set(g.legs.values())
    for phi in itertools.permutations(range(nf)):
        if any(phi[f] != f for f in legs):
            continue
        if any(phi[g.involution[f]] != g.involution[phi[f]] for f in range(nf)):
            continue
        # the induced vertex map must be a well-defined genus-preserving bijection
        vmap = {}
        ok = True
        for f in range(nf):
            v, w = g.flag_vertex[f], g.flag_vertex[phi[f]]
            if vmap.setdefault(v, w) != w:
                ok = False
                break
        if not ok or len(set(vmap.values())) != g.num_vertices:
            continue
        if any(mg.genus[v] != mg.genus[w] for v, w in vmap.items()):
            continue
        out.append(phi)
    return sorted(out)


def test_tree_automorphisms_trivial():
    for t in T.enumerate_stable_trees(4, 2):
        autos = T.automorphisms(t.as_modular())
        assert autos == [tuple(range(t.graph.num_flags))]


def test_parallel_edge_automorphisms():
    g = T.Graph(2, [0, 1, 0, 0, 1, 1], [0, 1, 4, 5, 2, 3], {1: 0, 2: 1})
    mg = T.ModularGraph(g, (0, 0))
    autos = T.automorphisms(mg)
    assert autos == oracle_automorphisms(mg)
    assert len(autos) == 2
    assert T.has_odd_automorphism(mg)


def test_loop_automorphisms():
    g = T.Graph(1, [0, 0, 0], [0, 2, 1], {1: 0})
    mg = T.ModularGraph(g, (0,))
    autos = T.automorphisms(mg)
    assert autos == oracle_automorphisms(mg)
    assert len(autos) == 2
    # the loop-flag swap fixes the single edge, hence acts evenly
    assert not T.has_odd_automorphism(mg)


def test_automorphisms_closed_under_composition():
    g = T.Graph(2, [0, 1, 0, 0, 1, 1], [0, 1, 4, 5, 2, 3], {1: 0, 2: 1})
    mg = T.ModularGraph(g, (0, 0))
    autos = set(T.automorphisms(mg))
    assert tuple(range(mg.graph.num_flags)) in autos
    for a in autos:
        for b in autos:
            assert tuple(a[x] for x in b) in autos


# ---------------------------------------------------------------------------
# paths


def test_unique_shortest_paths_in_trees():
    for t in T.enumerate_stable_trees(5, 3):
        nv = t.graph.num_vertices
        for v in range(nv):
            for w in range(nv):
                _dist, count = T.count_shortest_paths(t.graph, v, w)
                assert count == 1


def test_output_flags_point_to_root():
    for t in T.enumerate_stable_trees(5, 3):
        assert t.output_flag(t.root_vertex) == t.graph.legs[0]
        for v in range(t.graph.num_vertices):
            assert len(t.input_flags(v)) == t.graph.valence(v) - 1
            depth = len(t.path_edges_to_root(v))
            dist, _ = T.count_shortest_paths(t.graph, v, t.root_vertex)
            assert depth == dist


# ---------------------------------------------------------------------------
# dot export


def test_dot_export_mentions_decorations():
    t = build_two_vertex_tree(3, (2, 3))
    dv = 1
    alt = t.input_flags(dv)[:2]
    text = T.to_dot(t, dv=dv, alt=alt)
    assert "color=red" in text
    assert text.count("leg") >= 4
    mg = triangle_graph({1: 0, 2: 1, 3: 2})
    assert 'label="g=0"' in T.to_dot(mg)
