"""Acceptance criteria 1-10, each run against its wall-clock budget.

Every criterion prints one ``ACCEPTANCE <k> PASS|FAIL`` line (visible with
``-s``) and the same lines are repeated in the pytest terminal summary.
"""

import random
import time
from math import comb

import pytest

from bicm import (
    PathMatrixSpec,
    alexander_dual,
    all_complexes,
    biCM_noncone,
    cone_bound_audit,
    enumerate_type,
    f_polynomial,
    f_sc,
    find_shelling,
    frame_invariant_c,
    has_linear_resolution,
    hilbert_series_S,
    identify_diagonals,
    is_biCM,
    is_CM,
    is_cone,
    is_isomorphic,
    is_shelling,
    iterated_cone,
    lex_shelling_order,
    path_complexes,
    path_dichotomy,
    rp2_six,
    skeleton_complex,
    type_of,
    verify_c1_bound,
)
from bicm.fvectors import h_vector, one_plus_t_power, poly_mul
from corpus import fixtures, random_corpus


def run_criterion(log, number, title, budget, body):
    start = time.perf_counter()
    error = None
    try:
        body()
    except AssertionError as exc:
        error = exc
    elapsed = time.perf_counter() - start
    ok = error is None and elapsed < budget
    detail = "" if error is None else f": {error}"
    if error is None and not ok:
        detail = f": over budget of {budget:g}s"
    line = f"ACCEPTANCE {number:>2} {'PASS' if ok else 'FAIL'}  {title} ({elapsed:.2f}s / {budget:g}s){detail}"
    print(line, flush=True)
    log.append(line)
    if not ok:
        pytest.fail(line)


def test_criterion_01_rp2(acceptance_log):
    def body():
        cx = rp2_six()
        f = f_polynomial(cx)
        assert list(f) == [1, 6, 15, 10]
        assert type_of(f, cx.n) == (6, 2, 5)
        assert is_isomorphic(cx, alexander_dual(cx))
        for p in (0, 3, 5):
            assert is_biCM(cx, p), f"not bi-CM in characteristic {p}"
        assert not is_CM(cx, 2).verdict
        assert find_shelling(cx) is None

    run_criterion(acceptance_log, 1, "six-vertex projective plane", 60, body)


def test_criterion_02_eagon_reiner(acceptance_log):
    def body():
        checked = 0
        for n in range(1, 6):
            for cx in all_complexes(n):
                if cx.is_full_simplex():
                    continue  # zero ideal, empty dual
                dual = alexander_dual(cx)
                for p in (0, 2):
                    assert has_linear_resolution(cx, p) == is_CM(dual, p).verdict, (cx, p)
                    checked += 1
        assert checked == 2 * (2 + 4 + 9 + 29 + 209 - 5)

    run_criterion(acceptance_log, 2, "linear resolution iff dual CM, n <= 5", 600, body)


def test_criterion_03_duality(acceptance_log):
    def body():
        corpus = random_corpus(500, 8) + [cx for cx in fixtures().values() if not cx.is_full_simplex()]
        for cx in corpus:
            n = cx.n
            dual = alexander_dual(cx)
            assert alexander_dual(dual) == cx
            f, fd = f_polynomial(cx), f_polynomial(dual)
            for i in range(-1, n - 1):
                a = fd[i + 1] if i + 1 < len(fd) else 0
                b = f[n - i - 1] if n - i - 1 < len(f) else 0
                assert a + b == comb(n, i + 1), (cx, i)
            assert frame_invariant_c(dual) + cx.d + 1 == n
            assert bool(is_cone(cx)) == bool(is_cone(dual))

    run_criterion(acceptance_log, 3, "Alexander duality identities on 500 random complexes and fixtures", 120, body)


def test_criterion_04_path_matrices(acceptance_log):
    def body():
        for p in range(1, 5):
            for q in range(1, 5):
                X, Y = path_complexes(p, q)
                assert alexander_dual(X) == Y and alexander_dual(Y) == X, (p, q)
                assert is_shelling(X, lex_shelling_order(p, q, "X")), (p, q, "X")
                assert is_shelling(Y, lex_shelling_order(p, q, "Y")), (p, q, "Y")
                assert (X.n, X.d, frame_invariant_c(X)) == (p * q, p * q - q, p - 1)
                assert type_of(f_polynomial(X), X.n) == (p * q, p - 1, p + q - 1)
                assert not is_cone(X)
                assert identify_diagonals(PathMatrixSpec.full(p, q)) == skeleton_complex(p + q - 1, p - 1)

    run_criterion(acceptance_log, 4, "path-matrix complexes for p, q <= 4", 120, body)


def _horizontal_exists(F, p, q):
    # rows reachable in column j by a nondecreasing path through F
    reach = set(range(1, p + 1))
    for j in range(1, q + 1):
        low = min(reach) if reach else p + 1
        reach = {i for i in range(low, p + 1) if (i, j) in F}
    return bool(reach)


def _vertical_exists_outside(F, p, q):
    reach = set(range(1, q + 1))
    for i in range(1, p + 1):
        low = min(reach) if reach else q + 1
        reach = {j for j in range(low, q + 1) if (i, j) not in F}
    return bool(reach)


def test_criterion_05_dichotomy(acceptance_log):
    def body():
        rng = random.Random(20240501)
        for p in range(1, 6):
            for q in range(1, 6):
                cells = [(i, j) for i in range(1, p + 1) for j in range(1, q + 1)]
                for _ in range(10_000):
                    F = frozenset(c for c in cells if rng.random() < 0.5)
                    path = path_dichotomy(F, p, q)
                    assert path.is_valid(p, q)
                    if path.kind == "horizontal":
                        assert path.cells() <= F
                    else:
                        assert not path.cells() & F
                    has_h = _horizontal_exists(F, p, q)
                    has_v = _vertical_exists_outside(F, p, q)
                    assert has_h != has_v, (p, q, F)
                    assert (path.kind == "horizontal") == has_h

    run_criterion(acceptance_log, 5, "path dichotomy, 10^4 subsets per grid up to 5x5", 60, body)


def test_criterion_06_hilbert(acceptance_log):
    def body():
        k_max = 12
        for s in range(2, 9):
            for c in range(1, s):
                base = hilbert_series_S(f_sc(s, c), s, c, k_max)
                assert all(x == 0 for x in base[: c + 1]), (s, c, base)
                assert base[c + 1] == comb(s, c + 1), (s, c, base)
                for n in range(s, s + 6):
                    f = poly_mul(one_plus_t_power(n - s), f_sc(s, c))
                    assert hilbert_series_S(f, n, c, k_max) == base, (n, c, s)

    run_criterion(acceptance_log, 6, "Hilbert series of the associated sheaf", 10, body)


def test_criterion_07_noncones(acceptance_log):
    def body():
        count = 0
        for s in range(2, 7):
            for c in range(1, min(3, s - 1) + 1):
                for n in range(s, (c + 1) * (s - c) + 1):
                    res = biCM_noncone(n, c, s)
                    assert res.found, (n, c, s)
                    cert = res.certificate
                    assert cert.ok and cert.noncone and cert.type_ncs == (n, c, s), (n, c, s)
                    assert set(cert.eagon_reiner) == set(cert.characteristics)
                    count += 1
        assert count == 43

    run_criterion(acceptance_log, 7, "certified bi-CM non-cones across the conjectured range", 600, body)


def test_criterion_08_c1_bound(acceptance_log):
    def body():
        res = verify_c1_bound(7)
        assert res.holds and res.counterexample is None
        assert res.trees > 0

    run_criterion(acceptance_log, 8, "n - s <= s - 2 for c = 1, all trees up to 7 vertices", 300, body)


def test_criterion_09_standing(acceptance_log, standing):
    def body():
        before = dict(standing)
        corpus = random_corpus(150, 7, seed=99) + list(fixtures().values())
        for cx in corpus:
            if cx.n > 12:
                continue
            for p in (0, 2):
                if is_CM(cx, p):
                    assert all(x >= 0 for x in h_vector(f_polynomial(cx)))
                if not cx.is_full_simplex():
                    is_biCM(cx, p)
        assert standing["cm"] > before["cm"]
        assert standing["bicm"] > before["bicm"]

    run_criterion(acceptance_log, 9, "standing CM / bi-CM numerical assertions", 120, body)


def test_criterion_10_cone_bound(acceptance_log):
    def body():
        corpus = [cx for cx in fixtures().values() if not cx.is_full_simplex()]
        for args in [(4, 1, 3), (5, 2, 4), (5, 1, 4), (6, 2, 4), (6, 2, 5)]:
            corpus += [e.complex for e in enumerate_type(*args, max_exemplars=10_000).exemplars]
        for s in range(2, 7):
            for c in range(1, min(3, s - 1) + 1):
                for n in range(s, (c + 1) * (s - c) + 1):
                    corpus.append(biCM_noncone(n, c, s).complex)
        bases = [skeleton_complex(s, c) for s in range(2, 7) for c in range(1, s)] + [rp2_six()]
        bases += [path_complexes(p, q)[0] for p in range(2, 4) for q in range(2, 4)]
        for base in bases:
            corpus += [iterated_cone(base, k) for k in range(0, 41 - base.n)]
        report = cone_bound_audit(corpus)
        assert not report.violations, report.violations[:3]
        assert max(e.n for e in report.entries) == 40
        assert any(e.binding for e in report.entries)

    run_criterion(acceptance_log, 10, "cone bound audit over fixtures, searches and iterated cones", 120, body)
