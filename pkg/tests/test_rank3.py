import itertools
import random

import pytest

from chvatal import (Family, GroundSet, InternalInvariantBroken, NotIntersecting,
                     PreconditionViolated, RankTooHigh, closure, dangling,
                     is_intersecting, lemma_all_case1, lemma_all_case2,
                     lemma_all_case3, star, sterboul)
from chvatal.oracle import max_star
from chvatal.rank3 import _endgame, _Tracker

from helpers import as_sets, brute_star_size, fam, words


def face(F, text):
    return F.ground.face(text)


# -- dangling --

def test_dangling_examples():
    F = fam("abc cxy")
    assert words(dangling(F, face(F, "abc"), "c").triangles) == {"cxy"}

    F = fam("abc")
    assert len(dangling(F, face(F, "abc"), "a").triangles) == 0

    F = fam("abc abx cxy cxz")
    assert words(dangling(F, face(F, "abc"), "c").triangles) == {"cxy", "cxz"}


def test_dangling_preconditions():
    F = fam("abc abx")
    with pytest.raises(PreconditionViolated):
        dangling(F, face(F, "bcx"), "b")
    with pytest.raises(PreconditionViolated):
        dangling(F, face(F, "abc"), "x")


# -- case 1 --

def test_case1_single_triangle():
    out = lemma_all_case1(fam("abc"))
    assert words(out) == {"abc", "bc"}
    assert is_intersecting(out)


def test_case1_all_triangles_on_four_vertices():
    F = fam("abc abx acx bcx")
    out = lemma_all_case1(F)
    assert out.size == 5
    assert is_intersecting(out)
    assert any(f.bit_count() == 2 for f in out)


def test_case1_swaps_lone_dangling_triangle():
    # at a, only axy dangles from abc; it is traded for bc.
    F = fam("abc axy bxz cyz")
    out = lemma_all_case1(F)
    assert words(out) == {"bc", "bxz", "cyz", "abc"}
    assert is_intersecting(out) and out.size == F.size


ENDGAME = "abc abx acy bxy cxy bcz axz cxz ayz byz"


def test_case1_not_applicable_on_endgame_family():
    F = fam(ENDGAME)
    for t in F:
        for v in F.ground.face_labels(t):
            assert len(dangling(F, t, v).triangles) >= 2
    assert lemma_all_case1(F) is None
    assert lemma_all_case2(F) is None
    assert lemma_all_case3(F) is None


def test_case_moves_require_triangles():
    for move in (lemma_all_case1, lemma_all_case2, lemma_all_case3):
        with pytest.raises(PreconditionViolated):
            move(fam("ab abc"))


# -- case 2 --

def test_case2_edge_disjoint_pair():
    out = lemma_all_case2(fam("abc axy"))
    assert words(out) == {"abc", "axy", "ax", "ay"}
    assert all(f & out.ground.face("a") for f in out)


def test_case2_shared_edge_does_not_apply():
    assert lemma_all_case2(fam("abc abx")) is None


def test_case2_single_triangle():
    out = lemma_all_case2(fam("abc"))
    assert words(out) == {"abc"}


def test_case2_fano_plane():
    fano = fam("abd bce cdf deg efa fgb gac")
    assert is_intersecting(fano)
    out = lemma_all_case2(fano)
    assert out.size >= fano.size
    assert is_intersecting(out)
    centre = [v for v in range(7) if all(f >> v & 1 for f in out)]
    assert centre


# -- case 3 --

def test_case3_add_edge_when_residuals_empty():
    out = lemma_all_case3(fam("abc abv"))
    assert words(out) == {"abc", "abv", "ab"}


def test_case3_single_anchor():
    out = lemma_all_case3(fam("abc avy"))
    assert words(out) == {"abc", "avy", "ay"}
    assert is_intersecting(out)


def test_case3_complete_graph():
    assert lemma_all_case3(fam("abc")) is None


def test_case3_flip_branch():
    # c and v span no edge; v-triangles meet abc in a and in b.
    F = fam("abc avx bvx abx")
    out = lemma_all_case3(F)
    assert words(out) == {"abc", "avx", "abx", "ax"}
    assert is_intersecting(out)
    assert out.size >= F.size
    assert any(f.bit_count() == 2 for f in out)
    assert out.issubset(closure(F))


# -- sterboul --

def check_certificate(F, cert):
    cx = closure(F)
    assert cert.family_size == F.size
    assert cert.star_size == len(star(cx, cert.witness))
    assert cert.star_size == brute_star_size(as_sets(F), F.ground.label(cert.witness))
    assert cert.family_size <= cert.star_size
    assert is_intersecting(cert.final_family)
    assert cert.final_family.issubset(star(cx, cert.witness))


def test_sterboul_single_triangle():
    F = fam("abc")
    cert = sterboul(F)
    check_certificate(F, cert)
    assert cert.star_size == 4
    assert cert.rules[0] == "case1"


def test_sterboul_edge_route():
    F = fam("ab abc")
    cert = sterboul(F)
    check_certificate(F, cert)
    assert F.ground.label(cert.witness) in "ab"
    assert cert.star_size == 4
    assert "case1" not in cert.rules


def test_sterboul_three_triangles():
    F = fam("abc abx acx")
    cert = sterboul(F)
    check_certificate(F, cert)
    assert cert.rules[0] == "case1"
    assert cert.star_size >= 3
    assert max_star(closure(F)) == (F.ground.vid("a"), 7)


def test_sterboul_singleton():
    F = fam("a ab ac")
    cert = sterboul(F)
    assert cert.witness == 0 and cert.steps == []


def test_sterboul_errors():
    with pytest.raises(NotIntersecting):
        sterboul(fam("ab cd"))
    with pytest.raises(RankTooHigh):
        sterboul(fam("abcd"))
    with pytest.raises(PreconditionViolated):
        sterboul(fam("", ground="a"))


def test_certificate_json():
    doc = sterboul(fam("abc")).to_json()
    assert set(doc) == {"witness", "star_size", "family_size", "steps"}
    assert doc["steps"][0]["rule"] == "case1"
    assert doc["steps"][0]["faces_out"] == [["b", "c"]]


# -- endgame --

def six_vertex_families():
    g = GroundSet.of_size(6)
    tri = [g.face(c) for c in itertools.combinations("abcdef", 3)]
    pairs = []
    for t in tri:
        if g.full ^ t > t:
            pairs.append((t, g.full ^ t))
    for choice in itertools.product(range(3), repeat=len(pairs)):
        faces = [pairs[i][c - 1] for i, c in enumerate(choice) if c]
        if faces:
            yield Family(g, faces)


def test_six_vertex_endgame_fires_and_checks_bounds():
    fired = 0
    for F in itertools.islice(six_vertex_families(), 0, None, 7):
        cert = sterboul(F)
        check_certificate(F, cert)
        if "endgame-six-vertices" in cert.rules:
            fired += 1
            assert F.size <= 10 and cert.star_size >= 10
    assert fired > 0


def test_sterboul_endgame_family():
    F = fam(ENDGAME)
    cert = sterboul(F)
    check_certificate(F, cert)
    assert cert.rules == ["endgame-six-vertices"]
    assert F.ground.label(cert.witness) == "c"
    assert cert.family_size == 10 and cert.star_size == 11


def test_endgame_three_dangling_adds_cx():
    F = fam("abc abx cxy cxz cxv")
    assert is_intersecting(F)
    cert = _endgame(_Tracker(F), F)
    assert "endgame-add-cx" in cert.rules
    check_certificate(F, cert)


def test_endgame_rejects_seventh_vertex():
    # Cases 1-3 are bypassed here, so the proof's contradiction surfaces.
    F = fam("abc abx cxy cxz acv")
    assert is_intersecting(F)
    with pytest.raises(InternalInvariantBroken):
        _endgame(_Tracker(F), F)


def test_sterboul_random_triangle_families_on_seven_vertices():
    rng = random.Random(7)
    g = GroundSet.of_size(7)
    tri = [g.face(c) for c in itertools.combinations("abcdefg", 3)]
    for _ in range(300):
        rng.shuffle(tri)
        faces = []
        for t in tri:
            if all(t & f for f in faces) and rng.random() < 0.9:
                faces.append(t)
        F = Family(g, faces)
        check_certificate(F, sterboul(F))
