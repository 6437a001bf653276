"""Certified star bound for intersecting families of rank at most three.

:func:`sterboul` walks the case analysis for families of faces of size <= 3:

* a singleton ``{a}`` in the family puts it inside ``st(a)``;
* an edge ``ab`` puts it inside ``st(a) | st(b)``, handled by two-star
  compression;
* a triangle-only family is first reshaped by one of three local moves
  (:func:`lemma_all_case1`, :func:`lemma_all_case2`, :func:`lemma_all_case3`);
* if none applies, the family is forced onto six vertices and the vertex
  ``c`` of the endgame configuration has a star of at least ten faces while
  the family has at most ten.

Every move is checked as it runs (intersecting, inside the generated
complex, no shrinkage) and any failed check raises
:class:`InternalInvariantBroken`.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations

from .core import (Complex, Family, bits, closure, is_intersecting, non_edges,
                   star_size)
from .errors import (InternalInvariantBroken, NotIntersecting,
                     PreconditionViolated, RankTooHigh)
from .transform import FlipContext, _residual_faces, two_star_compress


@dataclass(frozen=True)
class DanglingSet:
    base: int
    at: int
    triangles: Family


@dataclass(frozen=True)
class Step:
    rule: str
    faces_in: Family
    faces_out: Family
    note: str = ""

    def to_json(self) -> dict:
        out = {"rule": self.rule,
               "faces_in": self.faces_in.label_faces(),
               "faces_out": self.faces_out.label_faces()}
        if self.note:
            out["note"] = self.note
        return out


@dataclass(frozen=True)
class Certificate:
    witness: int
    star_size: int
    family_size: int
    final_family: Family
    steps: list[Step] = field(default_factory=list)

    @property
    def rules(self) -> list[str]:
        return [s.rule for s in self.steps]

    def to_json(self) -> dict:
        g = self.final_family.ground
        return {
            "witness": g.label(self.witness),
            "star_size": self.star_size,
            "family_size": self.family_size,
            "steps": [s.to_json() for s in self.steps],
        }


def _require_triangles(family: Family) -> None:
    for f in family.faces:
        if f.bit_count() != 3:
            raise PreconditionViolated(
                f"face {family.ground.face_str(f)} is not a triangle")


def _dangling(faces, base: int, at: int) -> list[int]:
    am = 1 << at
    return [t for t in faces if t & base == am]


def dangling(family: Family, base: int, at: int | str) -> DanglingSet:
    """Triangles of ``family`` meeting ``base`` exactly in ``{at}``."""
    at = family.ground.vid(at)
    if base not in family:
        raise PreconditionViolated("base face is not in the family")
    if not base >> at & 1:
        raise PreconditionViolated("vertex is not in the base face")
    return DanglingSet(base, at, family.with_faces(_dangling(family.faces, base, at)))


def _case1(family: Family):
    for base in family.faces:
        for a in bits(base):
            hanging = _dangling(family.faces, base, a)
            if len(hanging) <= 1:
                edge = base ^ (1 << a)
                return family.replace(remove=hanging, add=[edge]), base, a, hanging
    return None


def lemma_all_case1(family: Family) -> Family | None:
    """Trade the lone triangle dangling at some vertex for the opposite edge.

    If triangle ``abc`` has at most one triangle dangling at ``a``, replace
    that triangle (if any) by the edge ``bc``. Returns ``None`` when every
    vertex of every triangle has at least two dangling triangles.
    """
    _require_triangles(family)
    out = _case1(family)
    return None if out is None else out[0]


def _shares_edge(faces) -> bool:
    return any((s & t).bit_count() >= 2 for s, t in combinations(faces, 2))


def _case2(family: Family):
    if not family.faces or _shares_edge(family.faces):
        return None
    base = family.faces[0]
    count = {x: sum(1 for t in family.faces if t >> x & 1) for x in bits(base)}
    a = max(count, key=lambda x: (count[x], -x))
    am = 1 << a
    faces = {base}
    for t in family.faces:
        if t & am and t != base:
            faces.add(t)
            for x in bits(t ^ am):
                faces.add(am | 1 << x)
    return family.with_faces(faces), a


def lemma_all_case2(family: Family) -> Family | None:
    """Push an edge-disjoint triangle family into the star of a busiest vertex.

    Keeps the first triangle ``abc`` and every triangle through its vertex
    ``a`` of largest degree, then adds the two edges through ``a`` of each
    triangle other than ``abc``. ``None`` if two triangles share an edge.
    """
    _require_triangles(family)
    out = _case2(family)
    return None if out is None else out[0]


def _case3(family: Family):
    cx = closure(family)
    gaps = non_edges(cx)
    if not gaps:
        return None
    c, v = gaps[0]
    cm, vm = 1 << c, 1 << v
    base = next(t for t in family.faces if t & cm)
    s_v = 0
    for t in family.faces:
        if t & vm:
            s_v |= t & base
    if s_v & cm:
        raise InternalInvariantBroken("non-edge endpoints lie in a common triangle")
    if not s_v:
        raise InternalInvariantBroken("vertex of the generated complex misses every triangle")
    anchors = list(bits(s_v))
    if len(anchors) == 1:
        a = anchors[0]
        am = 1 << a
        edges = [t ^ vm for t in family.faces if t & vm]
        if any(not e & am for e in edges):
            raise InternalInvariantBroken("a triangle through v avoids the single anchor")
        return family.replace(add=edges), "case3-single", (c, v, a, None)
    a, b = anchors
    r_a, r_b = _residual_faces(family.members, a, b, v)
    if r_a or r_b:
        if len(r_a) < len(r_b):
            a, b, r_a, r_b = b, a, r_b, r_a
        FlipContext(a, b, v).check(family)
        out = family.replace(remove=r_b, add=[t ^ vm for t in r_a])
        return out, "case3-flip", (c, v, a, b)
    through_v = [t for t in family.faces if t & vm]
    ab = 1 << a | 1 << b
    if through_v != [ab | vm]:
        raise InternalInvariantBroken("empty residuals but v lies outside the triangle abv")
    return family.replace(add=[ab]), "case3-add-edge", (c, v, a, b)


def lemma_all_case3(family: Family) -> Family | None:
    """Repair a missing edge ``cv`` of the generated complex.

    With ``abc`` a triangle through ``c``, the triangles through ``v`` meet
    ``abc`` only inside ``{a, b}``. Depending on which of ``a``, ``b`` they
    touch, add the edges ``ay``, flip at ``(a, b, v)``, or add ``ab``.
    ``None`` when the graph of the generated complex is complete.
    """
    _require_triangles(family)
    out = _case3(family)
    return None if out is None else out[0]


# -- certified procedure ------------------------------------------------------

class _Tracker:
    """Records steps and checks every intermediate family."""

    def __init__(self, original: Family):
        self.original = original
        self.complex = closure(original)
        self.steps: list[Step] = []

    def record(self, rule: str, before: Family, after: Family, note: str = "") -> Family:
        if not is_intersecting(after):
            raise InternalInvariantBroken(f"{rule}: result is not intersecting")
        if not after.issubset(self.complex):
            raise InternalInvariantBroken(f"{rule}: result leaves the generated complex")
        if after.size < before.size:
            raise InternalInvariantBroken(f"{rule}: result lost faces")
        self.steps.append(Step(rule,
                               before.with_faces(before.members - after.members),
                               before.with_faces(after.members - before.members),
                               note))
        return after

    def certify(self, witness: int, final: Family) -> Certificate:
        if not all(f >> witness & 1 for f in final.faces):
            raise InternalInvariantBroken("final family is not inside the witness star")
        size = star_size(self.complex, witness)
        cert = Certificate(witness, size, self.original.size, final, self.steps)
        if cert.family_size > cert.star_size:
            raise InternalInvariantBroken("certificate bound fails")
        return cert


def _via_edge(tr: _Tracker, family: Family) -> Certificate:
    edge = next(f for f in family.faces if f.bit_count() == 2)
    a, b = bits(edge)
    g = family.ground
    res = two_star_compress(family, a, b)
    current = family
    for st in res.trace:
        current = tr.record("flip", current, current.replace(st.removed, st.added),
                            f"a={g.label(st.context.a)} b={g.label(st.context.b)} "
                            f"v={g.label(st.context.v)}")
    return tr.certify(res.witness, res.final)


def sterboul(family: Family) -> Certificate:
    """Certificate that ``|F| <= |st_C(w)|`` for an intersecting family of rank <= 3.

    ``C`` is the complex generated by ``family``. The returned certificate's
    ``star_size`` is the size of ``st_C(witness)`` computed from ``C``.
    """
    if not family.faces:
        raise PreconditionViolated("family is empty")
    if family.rank > 3:
        raise RankTooHigh(f"rank {family.rank} exceeds 3")
    if not is_intersecting(family):
        raise NotIntersecting("family is not intersecting")

    tr = _Tracker(family)
    g = family.ground
    for f in family.faces:
        if f.bit_count() == 1:
            return tr.certify(f.bit_length() - 1, family)
    if family.faces[0].bit_count() == 2:
        return _via_edge(tr, family)

    out = _case1(family)
    if out is not None:
        new, base, a, _ = out
        cur = tr.record("case1", family, new,
                        f"base={g.face_str(base)} at={g.label(a)}")
        return _via_edge(tr, cur)

    out = _case2(family)
    if out is not None:
        new, a = out
        cur = tr.record("case2", family, new, f"centre={g.label(a)}")
        return tr.certify(a, cur)

    out = _case3(family)
    if out is not None:
        new, rule, (c, v, a, b) = out
        note = f"non-edge={g.label(c)}{g.label(v)} a={g.label(a)}"
        if b is not None:
            note += f" b={g.label(b)}"
        cur = tr.record(rule, family, new, note)
        return _via_edge(tr, cur)

    return _endgame(tr, family)


def _endgame(tr: _Tracker, family: Family) -> Certificate:
    g = family.ground
    faces = family.faces
    pair = next(((s, t) for s, t in combinations(faces, 2) if (s & t).bit_count() == 2), None)
    if pair is None:
        raise InternalInvariantBroken("no shared edge although case 2 failed")
    abc, abx = pair
    ab = abc & abx
    c = (abc ^ ab).bit_length() - 1
    x = (abx ^ ab).bit_length() - 1
    cm, xm = 1 << c, 1 << x

    at_c = _dangling(faces, abc, c)
    if any(not t & xm for t in at_c):
        raise InternalInvariantBroken("triangle dangling at c misses abx")
    if len(at_c) < 2:
        raise InternalInvariantBroken("fewer than two dangling triangles although case 1 failed")
    if len(at_c) >= 3:
        # Three triangles cx* dangling at c force every face to meet cx.
        cur = tr.record("endgame-add-cx", family, family.replace(add=[cm | xm]),
                        f"c={g.label(c)} x={g.label(x)} dangling={len(at_c)}")
        return _via_edge(tr, cur)

    cxy, cxz = at_c
    y = (cxy ^ cm ^ xm).bit_length() - 1
    z = (cxz ^ cm ^ xm).bit_length() - 1
    six = abc | abx | cxy | cxz
    extra = family.support & ~six
    if extra:
        _seventh_vertex(family, abc, c, (extra & -extra).bit_length() - 1)
    if six.bit_count() != 6:
        raise InternalInvariantBroken("endgame configuration does not span six vertices")

    # At most one triangle from each complementary pair on six vertices.
    for t in faces:
        if six ^ t in family.members:
            raise InternalInvariantBroken("family holds a triangle and its complement")
    if family.size > 10:
        raise InternalInvariantBroken("more than ten triangles on six vertices")

    a, b = bits(ab)
    listed = [abc, cxy, cxz, cm]
    listed += [cm | 1 << u for u in (a, b, x, y, z)]
    other = [t for t in _dangling(faces, cxy, c) if t != abc]
    if not other:
        raise InternalInvariantBroken("cxy has a single triangle dangling at c")
    listed.append(other[0])
    missing = [f for f in listed if f not in tr.complex]
    if missing or len(set(listed)) != 10:
        raise InternalInvariantBroken("star of c lacks the ten faces of the endgame")
    if star_size(tr.complex, c) < 10:
        raise InternalInvariantBroken("star of c has fewer than ten faces")
    tr.steps.append(Step("endgame-six-vertices", family.with_faces(()),
                         family.with_faces(()),
                         f"c={g.label(c)} x={g.label(x)} y={g.label(y)} z={g.label(z)}"))
    # The star itself is the witness family: intersecting and at least |F|.
    return tr.certify(c, family.with_faces(f for f in tr.complex.faces if f & cm))


def _seventh_vertex(family: Family, abc: int, c: int, v: int) -> None:
    """Derive the contradiction for a vertex outside the endgame six.

    Only reachable if the earlier case checks were wrong; always raises.
    """
    cm, vm = 1 << c, 1 << v
    taus = [t for t in family.faces if t & cm and t & vm]
    if not taus:
        raise InternalInvariantBroken("edge cv missing although case 3 failed")
    for tau in taus:
        if tau & abc == cm:
            raise InternalInvariantBroken("third triangle dangling at c although exactly two found")
        # tau is acv or bcv; the opposite vertex of abc then has too few dangling triangles.
        shared = tau & abc & ~cm
        opposite = abc & ~cm & ~shared
        o = opposite.bit_length() - 1
        if len(_dangling(family.faces, abc, o)) <= 1:
            raise InternalInvariantBroken(
                "seventh vertex leaves one dangling triangle, contradicting case 1")
    raise InternalInvariantBroken("vertex outside the six endgame vertices")
