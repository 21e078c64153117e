import random

import pytest

from difftoric import (
    Bounds,
    Face,
    IntPoly,
    LatticeVector,
    Semimodule,
    ZxLattice,
    enumerate_faces,
    face_saturated_necessary,
    is_pointed,
    member,
    parse_poly,
    ss_member,
)
from difftoric.errors import ResourceExhausted

P = parse_poly


def V(*texts):
    return LatticeVector([P(t) for t in texts])


S_COLLINEAR = Semimodule((V("x", "1"), V("x", "2"), V("x", "3")))


def test_ss_member_by_construction():
    v = S_COLLINEAR.generators[0] + S_COLLINEAR.generators[2].scale(P("x"))
    ans = ss_member(v, S_COLLINEAR)
    assert ans.status == "yes"
    acc = LatticeVector.zero(2)
    for g, c in zip(S_COLLINEAR.generators, ans.certificate):
        acc = acc + g.scale(c)
    assert acc == v


def test_ss_member_no_example():
    S = Semimodule((V("x", "1"), V("x", "3")))
    ans = ss_member(V("x", "2"), S)
    assert ans.status == "no"
    assert ans.certificate is None


def test_ss_member_middle_generator_identity():
    S = Semimodule((V("x", "1"), V("x", "3")))
    ans = ss_member(V("2*x", "4"), S)  # 2*u2 = u1 + u3
    assert ans.status == "yes"
    assert list(ans.certificate) == [P("1"), P("1")]


def test_ss_member_zero_and_empty():
    assert ss_member(LatticeVector.zero(2), S_COLLINEAR).status == "yes"
    empty = Semimodule(())
    assert ss_member(V("0", "0"), empty).status == "yes"
    assert ss_member(V("1", "0"), Semimodule((V("0", "0"),))).status == "no"


def test_ss_member_polynomial_coefficients():
    S = Semimodule((V("1", "1"),))
    ans = ss_member(V("x^2+1", "x^2+1"), S)
    assert ans.status == "yes"
    assert list(ans.certificate) == [P("x^2+1")]


def test_ss_member_certificates_random():
    rng = random.Random(83)
    gens = (V("2", "1"), V("1", "3"), V("x", "0"))
    S = Semimodule(gens)
    for _ in range(30):
        coeffs = [
            IntPoly([rng.randint(0, 2) for _ in range(2)]) for _ in gens
        ]
        v = LatticeVector.zero(2)
        for g, c in zip(gens, coeffs):
            v = v + g.scale(c)
        ans = ss_member(v, S)
        assert ans.status == "yes"
        acc = LatticeVector.zero(2)
        for g, c in zip(gens, ans.certificate):
            acc = acc + g.scale(c)
        assert acc == v


def test_enumerate_faces_collinear_triple():
    faces = enumerate_faces(S_COLLINEAR)
    index_sets = [tuple(sorted(f.indices)) for f in faces]
    assert index_sets == [(), (0,), (2,), (0, 1, 2)]
    assert all(f.confirmed for f in faces)


def test_enumerate_faces_single_generator():
    faces = enumerate_faces(Semimodule((V("1", "0"),)))
    assert [tuple(sorted(f.indices)) for f in faces] == [(), (0,)]


def test_enumerate_faces_mixed_generators():
    S = Semimodule((V("2", "0"), V("1", "1"), V("0", "1")))
    faces = enumerate_faces(S)
    index_sets = {tuple(sorted(f.indices)) for f in faces}
    assert (0, 1, 2) in index_sets
    assert (0,) in index_sets


def test_enumerate_faces_cap():
    gens = tuple(V("1", str(k)) for k in range(13))
    with pytest.raises(ResourceExhausted):
        enumerate_faces(Semimodule(gens), Bounds(subset_cap=12))


def test_face_family_closed_under_intersection():
    for S in (S_COLLINEAR, Semimodule((V("2", "0"), V("1", "1"), V("0", "1")))):
        faces = enumerate_faces(S)
        sets = {frozenset(f.indices) for f in faces}
        for a in sets:
            for b in sets:
                assert a & b in sets


def test_face_axioms_spot_check():
    faces = enumerate_faces(S_COLLINEAR)
    probes = []
    for i, u in enumerate(S_COLLINEAR.generators):
        for j, w in enumerate(S_COLLINEAR.generators):
            for a in range(2):
                for b in range(2):
                    probes.append(u.scale(IntPoly.x(a)) + w.scale(IntPoly.x(b)))
    for f in faces:
        sub = f.sub_semimodule()
        for i, u in enumerate(S_COLLINEAR.generators):
            for j, w in enumerate(S_COLLINEAR.generators):
                s = u + w
                if ss_member(s, sub).status == "yes":
                    assert ss_member(u, sub).status == "yes"
                    assert ss_member(w, sub).status == "yes"
        for t in probes:
            if ss_member(t.scale(P("x")), sub).status == "yes":
                assert ss_member(t, sub).status == "yes"


def test_is_pointed_examples():
    assert is_pointed(S_COLLINEAR) is True
    assert is_pointed(Semimodule((V("1"), V("-1")))) is False
    assert is_pointed(Semimodule((V("1", "0"), V("0", "1")))) is True


def test_face_saturated_examples():
    S = Semimodule((V("2", "0"), V("1", "1"), V("0", "1")))
    report = face_saturated_necessary(S, Face(S, frozenset({0})))
    assert not report.holds
    assert V("1", "0") in report.violations

    full = face_saturated_necessary(S, Face(S, frozenset({0, 1, 2})))
    assert full.holds and not full.violations

    S2 = Semimodule((V("1", "0"), V("0", "1")))
    assert face_saturated_necessary(S2, Face(S2, frozenset({0}))).holds


def test_face_saturated_zero_face():
    report = face_saturated_necessary(S_COLLINEAR, Face(S_COLLINEAR, frozenset()))
    assert report.holds


def test_face_saturated_agrees_with_bounded_search():
    rng = random.Random(89)
    pool = [V("1", "0"), V("0", "1"), V("2", "0"), V("1", "1"), V("2", "1"), V("x", "1")]
    multipliers = [P("2"), P("3"), P("x"), P("x+1")]
    for _ in range(12):
        gens = tuple(rng.sample(pool, rng.randint(2, 3)))
        S = Semimodule(gens)
        idx = frozenset(rng.sample(range(len(gens)), rng.randint(1, len(gens))))
        F = Face(S, idx)
        report = face_saturated_necessary(S, F)
        f_lat = ZxLattice([gens[i] for i in sorted(idx)])
        s_lat = ZxLattice(list(gens))
        # direct bounded scan for violations (g, u): g*u in (F), u in (S)\(F)
        found = False
        coeffs = range(-2, 3)
        for c1 in coeffs:
            for c2 in coeffs:
                u = V(str(c1), str(c2)) if c1 >= 0 and c2 >= 0 else LatticeVector(
                    [IntPoly(c1), IntPoly(c2)]
                )
                if u.is_zero() or not member(u, s_lat) or member(u, f_lat):
                    continue
                for g in multipliers:
                    if member(u.scale(g), f_lat):
                        found = True
        if found:
            assert not report.holds
        if report.holds:
            assert not found


def test_unknown_on_tiny_budget():
    S = Semimodule((V("2", "1"), V("1", "3"), V("3", "2")))
    ans = ss_member(V("17", "19"), S, Bounds(nodes=3))
    assert ans.status in ("unknown", "yes", "no")
    tight = ss_member(V("30", "30"), S, Bounds(nodes=1))
    assert tight.status == "unknown"
