"""Acceptance suite: one check per criterion, each printing a PASS/FAIL line.

Run under pytest (the lines appear in the verbose log) or directly with
``python tests/test_acceptance.py``.
"""
import random
import sys
import time
from functools import lru_cache

from khgraph import corpus
from khgraph.chromhom import chromatic_complex, chromatic_homology, les_bound_check
from khgraph.errors import ComplexIntegrityError
from khgraph.corpus import (FIGURE_EIGHT, HANDCUFF, HANDCUFF_HOPF, HOPF_NEG, THETA, TREFOIL_LEFT, TREFOIL_LOOP,
                            TREFOIL_RIGHT, UNKNOT, UNLINK2)
from khgraph.khovanov import (EMPTY_LINK_TABLE, UNKNOT_TABLE, KhTable, build_complex, dual_table, graded_euler,
                              khovanov_homology, tensor_tables)
from khgraph.laurent import LaurentPoly, chromatic_state_sum, count_proper_colorings, jones_state_sum
from khgraph.linkdiag import LinkDiagram, crossing_signs, disjoint_union, mirror, permute_crossings
from khgraph.spatialgraph import graph_khovanov, kauffman_family

SEED = 20240611
HOPF_GOLDEN = KhTable({(0, 0): 1, (0, -2): 1, (-2, -4): 1, (-2, -6): 1})
UNLINK2_TABLE = KhTable({(0, 2): 1, (0, 0): 2, (0, -2): 1})
ONE_PLUS_Q = LaurentPoly({0: 1, 1: 1})


@lru_cache(maxsize=None)
def link_corpus():
    rng = random.Random(SEED)
    named = [UNKNOT, UNLINK2, LinkDiagram(free_loops=3), TREFOIL_LEFT, TREFOIL_RIGHT, FIGURE_EIGHT, HOPF_NEG]
    return tuple(named + [corpus.random_diagram(rng, max_crossings=8) for _ in range(110)])


@lru_cache(maxsize=None)
def exhaustive_graphs():
    return tuple(corpus.connected_graphs_up_to(5))


@lru_cache(maxsize=None)
def random_graphs():
    rng = random.Random(SEED + 1)
    return tuple(corpus.random_graph(rng, max_edges=7) for _ in range(50))


@lru_cache(maxsize=None)
def kh(d):
    return khovanov_homology(d)


def report(n, ok, detail):
    line = f"AC{n} {'PASS' if ok else 'FAIL'}: {detail}"
    print(line, flush=True)
    return ok


def check_1():
    t0 = time.perf_counter()
    neg = khovanov_homology(HOPF_NEG)
    pos_link = mirror(HOPF_NEG)
    pos = khovanov_homology(pos_link)
    dt = time.perf_counter() - t0
    ok = (crossing_signs(HOPF_NEG).n_minus == 2 and crossing_signs(pos_link).n_plus == 2
          and neg == HOPF_GOLDEN and pos == dual_table(HOPF_GOLDEN) and dt < 1.0)
    return report(1, ok, f"Hopf n-=2 table {'exact' if neg == HOPF_GOLDEN else 'WRONG'}, "
                         f"n+=2 dual {'exact' if pos == dual_table(HOPF_GOLDEN) else 'WRONG'}, {dt:.3f}s (< 1s)")


def check_2():
    t0 = time.perf_counter()
    links = link_corpus()
    bad = [d for d in links if graded_euler(kh(d)) != jones_state_sum(d)]
    dt = time.perf_counter() - t0
    ok = not bad and len(links) >= 100 and dt < 60
    return report(2, ok, f"Euler == Jones on {len(links) - len(bad)}/{len(links)} diagrams, {dt:.2f}s (< 60s)")


def _d_squared_ok(build, x):
    try:
        build(x, check=False).check_d_squared()
    except ComplexIntegrityError:
        return False
    return True


def check_3():
    bad_links = [d for d in link_corpus() if not _d_squared_ok(build_complex, d)]
    graphs = exhaustive_graphs()
    bad_graphs = [g for g in graphs if not _d_squared_ok(chromatic_complex, g)]
    ok = not bad_links and not bad_graphs
    return report(3, ok, f"d^2 = 0 on {len(link_corpus()) - len(bad_links)}/{len(link_corpus())} link complexes "
                         f"and {len(graphs) - len(bad_graphs)}/{len(graphs)} chromatic complexes")


def _parity_ok(d, t):
    return all((j - d.n_components) % 2 == 0 for (_, j) in t.dims)


def check_4():
    links = link_corpus()
    small = [d for d in links if len(d.crossings) <= 5]
    rng = random.Random(SEED + 2)
    tensor_bad = 0
    pairs = [(rng.choice(small), rng.choice(small)) for _ in range(25)]
    for d1, d2 in pairs:
        if kh(disjoint_union(d1, d2)) != tensor_tables(kh(d1), kh(d2)):
            tensor_bad += 1
    mirror_bad = sum(kh(mirror(d)) != dual_table(kh(d)) for d in links)
    parity_bad = sum(not _parity_ok(d, kh(d)) for d in links)
    same_bad = [name for name, (a, b) in corpus.SAME_LINK_PAIRS.items() if kh(a) != kh(b)]
    n_same = len(corpus.SAME_LINK_PAIRS)
    ok = not (tensor_bad or mirror_bad or parity_bad or same_bad) and n_same >= 3
    return report(4, ok, f"tensor {len(pairs) - tensor_bad}/{len(pairs)}, mirror {len(links) - mirror_bad}/{len(links)}, "
                         f"parity {len(links) - parity_bad}/{len(links)}, same-link pairs {n_same - len(same_bad)}/{n_same}")


def check_5():
    t0 = time.perf_counter()
    graphs = exhaustive_graphs() + random_graphs()
    euler_bad = 0
    color_bad = 0
    for g in graphs:
        p = chromatic_state_sum(g)
        if graded_euler(chromatic_homology(g)) != p.substitute(ONE_PLUS_Q):
            euler_bad += 1
        if any(p(t) != count_proper_colorings(g, t) for t in range(6)):
            color_bad += 1
    dt = time.perf_counter() - t0
    ok = not euler_bad and not color_bad and dt < 60
    return report(5, ok, f"Euler == P(1+q) on {len(graphs) - euler_bad}/{len(graphs)} graphs, colorings t=0..5 on "
                         f"{len(graphs) - color_bad}/{len(graphs)}, {dt:.2f}s (< 60s)")


def check_6():
    cases = [(g, e) for g in exhaustive_graphs() for e in range(len(g.edges))]
    bad = sum(not les_bound_check(g, e) for g, e in cases)
    return report(6, not bad, f"LES bound on {len(cases) - bad}/{len(cases)} (graph, edge) pairs")


def check_7():
    t0 = time.perf_counter()
    theta = set(kauffman_family(THETA).tables())
    handcuff = set(kauffman_family(HANDCUFF).tables())
    hopf_tables = kauffman_family(HANDCUFF_HOPF).tables()
    sums_ok = True
    for g in (THETA, HANDCUFF, HANDCUFF_HOPF, TREFOIL_LOOP):
        fam = kauffman_family(g)
        total = KhTable({})
        jones = LaurentPoly()
        for m in fam.members:
            total = total + m.table
            jones = jones + jones_state_sum(m.diagram)
        sums_ok &= graph_khovanov(g) == total and graded_euler(total) == jones
    dt = time.perf_counter() - t0
    checks = {
        "theta": theta == {UNKNOT_TABLE, EMPTY_LINK_TABLE},
        "handcuff": handcuff == {UNLINK2_TABLE, UNKNOT_TABLE, EMPTY_LINK_TABLE},
        "hopf-handcuff": HOPF_GOLDEN in hopf_tables or dual_table(HOPF_GOLDEN) in hopf_tables,
        "sums": sums_ok,
        "time": dt < 10,
    }
    detail = ", ".join(f"{k} {'ok' if v else 'FAILED'}" for k, v in checks.items())
    return report(7, all(checks.values()), f"{detail}, {dt:.2f}s (< 10s)")


def _family_text(g):
    return "|".join(t.to_csv() + t.to_grid() for t in kauffman_family(g, dedup_mode="multiset").tables())


def check_8():
    rng = random.Random(SEED + 3)
    link_bad = 0
    links = link_corpus()
    for d in links:
        ref = kh(d)
        order = list(range(len(d.crossings)))
        rng.shuffle(order)
        for var in (corpus.random_relabeling(d, rng), permute_crossings(d, order)):
            t = khovanov_homology(var)
            if t.to_csv() != ref.to_csv() or t.to_grid() != ref.to_grid():
                link_bad += 1
    spatial = [THETA, HANDCUFF, HANDCUFF_HOPF, TREFOIL_LOOP]
    spatial += [corpus.spatial_from_link(d, rng, 0.35, 0.25, 0.1) for d in links[7:47] if len(d.crossings) <= 6]
    spatial_bad = 0
    for g in spatial:
        ref = _family_text(g), graph_khovanov(g).to_grid()
        for _ in range(2):
            r = corpus.random_spatial_relabeling(g, rng)
            if (_family_text(r), graph_khovanov(r).to_grid()) != ref:
                spatial_bad += 1
    graphs = exhaustive_graphs() + random_graphs()
    graph_bad = 0
    for g in graphs:
        ref = chromatic_homology(g)
        t = chromatic_homology(corpus.permute_edges(g, rng))
        if t.to_csv() != ref.to_csv() or t.to_grid() != ref.to_grid():
            graph_bad += 1
    ok = not (link_bad or spatial_bad or graph_bad)
    return report(8, ok, f"links {2 * len(links) - link_bad}/{2 * len(links)}, spatial graphs "
                         f"{2 * len(spatial) - spatial_bad}/{2 * len(spatial)}, abstract graphs "
                         f"{len(graphs) - graph_bad}/{len(graphs)} byte-identical")


def test_ac1_hopf_golden_table(capsys):
    with capsys.disabled():
        assert check_1()


def test_ac2_euler_equals_jones(capsys):
    with capsys.disabled():
        assert check_2()


def test_ac3_d_squared_zero(capsys):
    with capsys.disabled():
        assert check_3()


def test_ac4_structural_properties(capsys):
    with capsys.disabled():
        assert check_4()


def test_ac5_chromatic_euler(capsys):
    with capsys.disabled():
        assert check_5()


def test_ac6_les_bound(capsys):
    with capsys.disabled():
        assert check_6()


def test_ac7_kauffman_families(capsys):
    with capsys.disabled():
        assert check_7()


def test_ac8_invariance(capsys):
    with capsys.disabled():
        assert check_8()


if __name__ == "__main__":
    results = []
    for check in (check_1, check_2, check_3, check_4, check_5, check_6, check_7, check_8):
        t0 = time.perf_counter()
        results.append(check())
        print(f"    ({time.perf_counter() - t0:.2f}s)")
    sys.exit(0 if all(results) else 1)
