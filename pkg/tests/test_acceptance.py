"""Acceptance suite: one test per criterion, each with its time limit.

Every test prints a single PASS/FAIL line; the lines are repeated in a
summary section at the end of the pytest run.
"""

import random
import time
from contextlib import contextmanager

from tverberg.certify import certify_tverberg, is_prime_power
from tverberg.complementary import check_complementary_acyclic
from tverberg.complex_core import face_poset, order_complex
from tverberg.deleted_product import deleted_product
from tverberg.errors import SizeLimitExceeded
from tverberg.generators import (
    boundary_simplex,
    cross_polytope_boundary,
    cycle_graph,
    minimal_cw_sphere,
    path_graph,
    simplex,
    y_graph,
)
from tverberg.graphs import Multigraph, classify_12_tverberg, corpus_crosscheck, graph_to_cw
from tverberg.homology import (
    HomologyProfile,
    IntegerMatrix,
    euler_characteristic,
    is_n_acyclic,
    reduced_homology,
    smith_normal_form,
)

from conftest import ACCEPTANCE_LINES
from corpus import generator_corpus, simplicial_corpus
from oracles import is_prime_power_brute, prime_power_table, snf_by_minors


@contextmanager
def criterion(number, title, limit):
    start = time.perf_counter()
    status, detail = "FAIL", ""
    try:
        yield
        elapsed = time.perf_counter() - start
        if elapsed < limit:
            status = "PASS"
        else:
            detail = f" over the {limit:g} s limit"
            raise AssertionError(f"criterion {number} took {elapsed:.2f} s, limit {limit} s")
    finally:
        elapsed = time.perf_counter() - start
        line = f"[{status}] criterion {number:>2}: {title} ({elapsed:.2f} s){detail}"
        ACCEPTANCE_LINES.append(line)
        print("\n" + line)


def sphere(n):
    return HomologyProfile(tuple([0] * n + [1]), tuple(() for _ in range(n + 1)))


def test_01_sphere_homology():
    with criterion(1, "sphere homology", 10):
        cases = [(boundary_simplex(n + 1), n) for n in (1, 2, 3)]
        cases += [(cross_polytope_boundary(d), d) for d in (2, 3)]
        for K, n in cases:
            assert reduced_homology(K) == sphere(n)


def test_02_sphere_complementary_instances():
    with criterion(2, "complementary acyclicity of small spheres", 30):
        for S in (boundary_simplex(3), cross_polytope_boundary(2)):
            for k in (1, 2, 3):
                rep = check_complementary_acyclic(S, k, 2 - k, exhaustive=True)
                assert rep.passed, rep.failures
        circles = [boundary_simplex(2)] + [graph_to_cw(cycle_graph(n)) for n in range(3, 7)]
        for S in circles:
            for k in (1, 2):
                rep = check_complementary_acyclic(S, k, 1 - k, exhaustive=True)
                assert rep.passed, rep.failures


def test_03_main_instances():
    with criterion(3, "simplex instances certified by both methods", 120):
        for X, d, r in [(simplex(2), 1, 2), (simplex(4), 1, 3), (simplex(3), 2, 2)]:
            for method in ("complementary", "deleted_product"):
                cert = certify_tverberg(X, d, r, method)
                assert cert.certified, (d, r, method, cert.reason)
        conf = deleted_product(simplex(3), 2)
        assert conf.census() == [12, 24, 14]
        assert reduced_homology(conf) == sphere(2)
        assert euler_characteristic(conf) == 2


def test_04_y_split_verdict():
    with criterion(4, "Y graph split verdict", 5):
        Y = graph_to_cw(y_graph())
        comp = certify_tverberg(Y, 1, 2, "complementary")
        assert comp.verdict == "inconclusive"
        assert comp.evidence.counterexample.tuple.cells == ("v0",)
        assert certify_tverberg(Y, 1, 2, "deleted_product").certified
        conf = deleted_product(Y, 2)
        assert conf.census() == [12, 12]
        prof = reduced_homology(conf)
        assert prof.at(0) == (0, ()) and prof.at(1) == (1, ())
        assert prof == sphere(1)


def test_05_minimal_cw_sphere_negative():
    with criterion(5, "minimal CW sphere fails complementary check", 5):
        for d in (1, 2):
            X = minimal_cw_sphere(d)
            rep = check_complementary_acyclic(X, 1, 0)
            assert not rep.passed
            ce = rep.counterexample
            assert len(ce.tuple.cells) == 1
            assert X.cells[ce.tuple.cells[0]].dim == 1
            assert ce.homology.is_empty_complex


def test_06_conf_acyclicity_implication():
    checked = skipped = 0
    with criterion(6, "complementary pass implies Conf_r acyclic over the generator corpus", 600):
        for name, X in sorted(generator_corpus().items()):
            for r in (2, 3):
                passes = [n for n in (-1, 0, 1) if check_complementary_acyclic(X, r - 1, n).passed]
                if not passes:
                    continue
                try:
                    conf = deleted_product(X, r)
                except SizeLimitExceeded:
                    skipped += 1
                    continue
                for n in passes:
                    assert is_n_acyclic(conf, n), (name, r, n)
                    checked += 1
        assert checked > 0
    ACCEPTANCE_LINES.append(f"[note] criterion  6: {checked} implications checked, {skipped} skipped by the cell guard")


def test_07_subdivision_invariance():
    with criterion(7, "homology is invariant under barycentric subdivision", 300):
        for name, K in sorted(simplicial_corpus().items()):
            sd = order_complex(face_poset(K))
            assert reduced_homology(sd) == reduced_homology(K), name
        for name in ("min_cw_sphere_2", "Y", "C2"):
            X = generator_corpus()[name]
            assert reduced_homology(order_complex(face_poset(X))) == reduced_homology(X), name


def test_08_snf_oracle():
    rng = random.Random(20240521)
    with criterion(8, "Smith normal form matches minor gcds", 30):
        count = 0
        for rows in range(1, 5):
            for cols in range(1, 5):
                for _ in range(40):
                    m = [[rng.randint(-3, 3) for _ in range(cols)] for _ in range(rows)]
                    assert smith_normal_form(IntegerMatrix.from_dense(m)) == snf_by_minors(m), m
                    count += 1
        assert count >= 500


def test_09_graph_corpus_soundness():
    with criterion(9, "dimension-1 classifier sound on multigraphs up to 6 edges", 300):
        rows = corpus_crosscheck(6)
        assert len(rows) == 1 + 2 + 5 + 12 + 33 + 103
        assert [r.graph.edges for r in rows if r.violation] == []
        assert classify_12_tverberg(cycle_graph(3))
        assert classify_12_tverberg(y_graph())
        assert not classify_12_tverberg(cycle_graph(2))
        assert not classify_12_tverberg(Multigraph(2, [(0, 1)] * 3))
        for n in range(1, 8):
            assert not classify_12_tverberg(path_graph(n))


def test_10_prime_power_gate():
    with criterion(10, "prime-power gate", 5):
        table = prime_power_table(10000)
        for r in range(10001):
            w = is_prime_power(r)
            assert (None if w is None else (w.p, w.k)) == is_prime_power_brute(r) == table.get(r), r
        for method in ("complementary", "deleted_product", "both"):
            cert = certify_tverberg(simplex(5), 1, 6, method)
            assert cert.verdict == "inconclusive" and cert.reason_code == "NotPrimePower"
