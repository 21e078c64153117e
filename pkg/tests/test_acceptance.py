"""Acceptance suite: one test per criterion, exact arithmetic throughout.

Every check is bit-exact; the random property suites run at the stated
sample counts with fixed seeds.
"""

import random
from itertools import permutations

from difftoric import (
    IntPoly,
    LatticeVector,
    MonomialMap,
    NEG_INF,
    Semimodule,
    ZxLattice,
    buchberger,
    enumerate_faces,
    face_saturated_necessary,
    grem,
    implicitize,
    is_ghnf,
    jacobi_number,
    lattices_equal,
    member,
    orth_complement,
    order_bound,
    parametrize,
    parse_poly,
    rank,
    s_polynomial,
    sat_zx,
    syzygy_basis,
    zx_factor,
)
from difftoric.semimodule import Face
from difftoric.syzygy_transform import matvec

from oracles import (
    bounded_kernel_vectors,
    combination_exists,
    random_lattice_generators,
    random_vector,
)

P = parse_poly


def V(*texts):
    return LatticeVector([P(t) for t in texts])


F1, F2 = V("1-x", "2", "0", "0"), V("0", "0", "1-x", "2")
KERNEL_MAP = MonomialMap((V("2", "0"), V("x-1", "0"), V("0", "2"), V("0", "x-1")))
C_COLS = [V("x", "2*x^2+1", "0"), V("x^2+1", "0", "4*x^2+2")]
C1_COLS = [V("x", "2*x^2+1", "0"), V("1", "x", "2")]


def _report(n, text):
    print(f"PASS criterion {n}: {text}")


def test_criterion_1_kernel_lattice_reproduction():
    result = implicitize(KERNEL_MAP)
    assert lattices_equal(result.lattice, ZxLattice([F1, F2]))
    assert [b.display() for b in result.binomials] == [
        "y1*y2^2 - y1^x",
        "y3*y4^2 - y3^x",
    ]
    assert result.dimension == 2
    _report(1, "implicitize recovers the two-block kernel lattice, binomials, dimension")


def test_criterion_2_single_binomial_reproduction():
    result = implicitize(MonomialMap((V("1", "1"), V("x", "x"), V("0", "1"))))
    assert [b.display() for b in result.binomials] == ["y1^x - y2"]
    assert rank(result.lattice) == 1
    _report(2, "implicitize recovers the single binomial and its rank-1 lattice")


def test_criterion_3_parametrize_round_trip():
    res = parametrize([F1, F2])
    assert list(res.map.columns) == [
        V("2", "0"),
        V("x-1", "0"),
        V("0", "2"),
        V("0", "x-1"),
    ]
    back = implicitize(res.map)
    assert lattices_equal(back.lattice, ZxLattice([F1, F2]))
    assert rank(res.complement) == 4 - 2
    _report(3, "parametrize/implicitize round trip with the rank law")


def test_criterion_4_saturation_golden_case():
    basis = buchberger(C_COLS)
    witnesses = zx_factor(basis)
    assert len(witnesses) == 1
    assert witnesses[0].vector == V("x", "-1", "4*x")
    assert witnesses[0].multiplier == P("2*x^2+1")

    grown = buchberger(C_COLS + [witnesses[0].vector])
    assert list(grown.columns) == C1_COLS

    assert zx_factor(buchberger(C1_COLS)) == []

    sat = sat_zx(C_COLS)
    assert sat.growth_rounds == 1
    assert lattices_equal(sat.lattice, ZxLattice(C1_COLS))
    _report(4, "golden saturation case: witness, grown basis, one growth round")


def test_criterion_5_face_enumeration():
    S = Semimodule((V("x", "1"), V("x", "2"), V("x", "3")))
    faces = enumerate_faces(S)
    assert [tuple(sorted(f.indices)) for f in faces] == [(), (0,), (2,), (0, 1, 2)]
    assert all(f.confirmed for f in faces)
    _report(5, "face enumeration yields exactly the four expected faces")


def test_criterion_6_face_saturation_witness():
    S = Semimodule((V("2", "0"), V("1", "1"), V("0", "1")))
    report = face_saturated_necessary(S, Face(S, frozenset({0})))
    assert not report.holds
    assert V("1", "0") in report.violations
    _report(6, "face-saturation necessary condition fails with witness (1, 0)")


def test_criterion_7a_buchberger_criterion():
    rng = random.Random(2024)
    for i in range(200):
        dim = 2 if i < 100 else 3
        gens = random_lattice_generators(rng, dim, rng.randint(1, 3))
        basis = buchberger(gens)
        ok, violations = is_ghnf(list(basis.columns))
        assert ok, violations
        cols = list(basis.columns)
        for a in range(len(cols)):
            for b in range(a):
                s = s_polynomial(cols[a], cols[b])
                if not s.is_zero():
                    assert grem(s, cols).is_zero()
        for g in gens:
            assert member(g, basis)
    _report(7, "(a) Groebner criterion and normal-form shape on 200 random lattices")


def test_criterion_7b_membership_vs_brute_force():
    rng = random.Random(2025)
    pairs = 0
    while pairs < 500:
        gens = random_lattice_generators(rng, 2, rng.randint(2, 3))
        lat = ZxLattice(gens)
        for _ in range(5):
            if rng.random() < 0.5:
                coeffs = [
                    IntPoly([rng.randint(-3, 3) for _ in range(3)]) for _ in gens
                ]
                f = LatticeVector.zero(2)
                for g, c in zip(gens, coeffs):
                    f = f + g.scale(c)
            else:
                f = random_vector(rng, 2, 2, 3)
            got = member(f, lat)
            oracle = combination_exists(gens, f, max_deg=4)
            if oracle:
                assert got
            if not got:
                assert not oracle
            pairs += 1
    _report(7, "(b) membership agrees with the integer-combination oracle on 500 pairs")


def test_criterion_7c_witnesses_and_idempotence():
    rng = random.Random(2026)
    for _ in range(100):
        gens = random_lattice_generators(rng, 2, rng.randint(1, 3))
        basis = buchberger(gens)
        for w in zx_factor(basis):
            assert member(w.vector.scale(w.multiplier), basis)
            assert not member(w.vector, basis)
        result = sat_zx(gens)
        again = sat_zx(list(result.lattice.generators))
        assert again.growth_rounds == 0
        assert lattices_equal(result.lattice, again.lattice)
    _report(7, "(c) witness validity and sat idempotence on 100 random lattices")


def test_criterion_7d_syzygy_exactness_and_completeness():
    rng = random.Random(2027)
    for _ in range(60):
        nrows = rng.randint(1, 2)
        cols = [random_vector(rng, nrows, 1, 2) for _ in range(rng.randint(1, 3))]
        if all(c.is_zero() for c in cols):
            continue
        gens = syzygy_basis(cols, nrows)
        for s in gens:
            assert matvec(cols, nrows, s).is_zero()
        emitted = ZxLattice(gens or [], len(cols))
        for v in bounded_kernel_vectors(cols, nrows, max_deg=2):
            assert member(v, emitted)
    _report(7, "(d) syzygy exactness and bounded kernel completeness")


def test_criterion_7e_double_complement():
    rng = random.Random(2028)
    done = 0
    while done < 50:
        nrows = rng.randint(1, 2)
        cols = [random_vector(rng, nrows, 1, 2) for _ in range(3)]
        gens = syzygy_basis(cols, nrows)
        if not gens:
            continue
        L = ZxLattice(gens)
        assert lattices_equal(orth_complement(orth_complement(L)), L)
        done += 1
    _report(7, "(e) double orthogonal complement restores 50 kernel lattices")


def test_criterion_7f_jacobi_brute_force():
    rng = random.Random(2029)
    for _ in range(200):
        n = rng.randint(1, 7)
        matrix = [
            [None if rng.random() < 0.15 else rng.randint(0, 20) for _ in range(n)]
            for _ in range(n)
        ]
        best = None
        for perm in permutations(range(n)):
            entries = [matrix[i][perm[i]] for i in range(n)]
            if any(e is None for e in entries):
                continue
            s = sum(entries)
            best = s if best is None else max(best, s)
        got = jacobi_number(matrix)
        assert got == (NEG_INF if best is None else best)
    _report(7, "(f) Jacobi number equals permutation brute force on 200 matrices")


def test_criterion_7g_order_bound():
    report = order_bound(KERNEL_MAP)
    assert report.bound == 2
    rng = random.Random(2030)
    cols = list(KERNEL_MAP.columns)
    for _ in range(8):
        rng.shuffle(cols)
        assert order_bound(MonomialMap(tuple(cols))).bound == 2
    _report(7, "(g) order bound equals 2 on the two-row map and is permutation-invariant")
