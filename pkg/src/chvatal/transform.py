"""Flip transformation and two-star compression.

Given an intersecting family whose faces through ``v`` all meet ``{a, b}``,
the flip drops the faces of ``R_b(v)`` and inserts ``B - v`` for every
``B`` in ``R_a(v)``, where ``R_x(v)`` holds the faces containing ``x`` and
``v``, avoiding the other anchor, whose shadow ``B - v`` is not already in
the family. The result is again intersecting.

Repeating well-oriented flips on a family inside ``st(a) | st(b)`` pushes it
into a single star while never losing faces, which is the constructive content
of the two-star bound ``|F| <= max(|st(a)|, |st(b)|)``.
"""
from __future__ import annotations

from dataclasses import dataclass, field

from .core import Family, face_key, is_intersecting
from .errors import (HypothesisViolated, InternalInvariantBroken,
                     PreconditionViolated)


@dataclass(frozen=True)
class FlipContext:
    a: int
    b: int
    v: int

    def __post_init__(self):
        if len({self.a, self.b, self.v}) != 3:
            raise PreconditionViolated(f"flip vertices must be distinct: {self}")

    def check(self, family: Family) -> None:
        """Raise :class:`HypothesisViolated` unless every face through v meets {a, b}."""
        vm, ab = 1 << self.v, 1 << self.a | 1 << self.b
        for f in family.faces:
            if f & vm and not f & ab:
                raise HypothesisViolated(
                    f"face {family.ground.face_str(f)} contains "
                    f"{family.ground.label(self.v)} but misses both anchors")


@dataclass(frozen=True)
class Residuals:
    r_a: Family
    r_b: Family


def _residual_faces(members, a: int, b: int, v: int) -> tuple[list[int], list[int]]:
    am, bm, vm = 1 << a, 1 << b, 1 << v
    r_a, r_b = [], []
    for f in members:
        if not f & vm or f ^ vm in members:
            continue
        if f & am and not f & bm:
            r_a.append(f)
        elif f & bm and not f & am:
            r_b.append(f)
    return r_a, r_b


def residuals(family: Family, ctx: FlipContext) -> Residuals:
    ctx.check(family)
    r_a, r_b = _residual_faces(family.members, ctx.a, ctx.b, ctx.v)
    return Residuals(family.with_faces(r_a), family.with_faces(r_b))


def flip(family: Family, ctx: FlipContext) -> Family:
    """Apply the flip at ``ctx``; the hypothesis is always checked first."""
    ctx.check(family)
    r_a, r_b = _residual_faces(family.members, ctx.a, ctx.b, ctx.v)
    vm = 1 << ctx.v
    return family.replace(remove=r_b, add=[f ^ vm for f in r_a])


# -- compression --------------------------------------------------------------

@dataclass(frozen=True)
class CompressionStep:
    context: FlipContext
    removed: Family
    added: Family
    size: int
    total_size: int

    def to_json(self) -> dict:
        g = self.removed.ground
        return {
            "v": g.label(self.context.v),
            "a": g.label(self.context.a),
            "b": g.label(self.context.b),
            "removed": self.removed.label_faces(),
            "added": self.added.label_faces(),
            "size": self.size,
            "total_size": self.total_size,
        }


@dataclass(frozen=True)
class InStar:
    vertex: int


@dataclass(frozen=True)
class Improved:
    family: Family
    step: CompressionStep


@dataclass(frozen=True)
class CompressionResult:
    witness: int
    final: Family
    trace: list[CompressionStep] = field(default_factory=list)

    def to_json(self) -> dict:
        g = self.final.ground
        return {
            "witness": g.label(self.witness),
            "size": self.final.size,
            "final": {"vertices": list(g.labels), "faces": self.final.label_faces()},
            "steps": len(self.trace),
        }


def _check_two_star(family: Family, a: int, b: int) -> None:
    if a == b:
        raise PreconditionViolated("the two star centres must differ")
    ab = 1 << a | 1 << b
    for f in family.faces:
        if not f & ab:
            raise PreconditionViolated(
                f"face {family.ground.face_str(f)} lies in neither star")


def _step(family: Family, a: int, b: int) -> InStar | Improved:
    am, bm = 1 << a, 1 << b
    only_a = [f for f in family.faces if f & am and not f & bm]
    if not only_a:
        return InStar(b)
    if not any(f & bm and not f & am for f in family.faces):
        return InStar(a)

    # A minimal face through a but not b has every other vertex as a valid v.
    base = min(only_a, key=face_key)
    v = ((base ^ am) & -(base ^ am)).bit_length() - 1
    r_a, r_b = _residual_faces(family.members, a, b, v)
    if not r_a:
        raise InternalInvariantBroken("minimal face did not land in its own residual")
    tot_a = sum(f.bit_count() for f in r_a)
    tot_b = sum(f.bit_count() for f in r_b)
    # Compare averages tot_a/|r_a| <= tot_b/|r_b| without division.
    keep = len(r_a) > len(r_b) or (len(r_a) == len(r_b) and tot_a * len(r_b) <= tot_b * len(r_a))
    if not keep:
        a, b, r_a, r_b = b, a, r_b, r_a
    ctx = FlipContext(a, b, v)
    vm = 1 << v
    added = [f ^ vm for f in r_a]
    new = family.replace(remove=r_b, add=added)
    step = CompressionStep(ctx, family.with_faces(r_b), family.with_faces(added),
                           new.size, new.total_size)
    return Improved(new, step)


def compress_step(family: Family, a: int | str, b: int | str) -> InStar | Improved:
    """One compression move on an intersecting family inside ``st(a) | st(b)``.

    Returns ``InStar(w)`` if the family already lies in one of the two stars,
    otherwise ``Improved(F')`` where ``(-|F'|, total size of F')`` is
    lexicographically smaller than for the input.
    """
    g = family.ground
    a, b = g.vid(a), g.vid(b)
    _check_two_star(family, a, b)
    if not is_intersecting(family):
        raise PreconditionViolated("family is not intersecting")
    return _step(family, a, b)


def potential(family: Family) -> tuple[int, int]:
    return -family.size, family.total_size


def two_star_compress(family: Family, a: int | str, b: int | str) -> CompressionResult:
    """Iterate :func:`compress_step` until the family sits inside one star."""
    g = family.ground
    a, b = g.vid(a), g.vid(b)
    _check_two_star(family, a, b)
    if not is_intersecting(family):
        raise PreconditionViolated("family is not intersecting")

    # Potential is bounded: size by 2^n, total size by n * 2^(n-1).
    budget = (1 << g.n) * (1 + g.n * (1 << g.n))
    trace: list[CompressionStep] = []
    current = family
    while True:
        out = _step(current, a, b)
        if isinstance(out, InStar):
            return CompressionResult(out.vertex, current, trace)
        if potential(out.family) >= potential(current):
            raise InternalInvariantBroken("compression step failed to decrease the potential")
        trace.append(out.step)
        current = out.family
        if len(trace) > budget:
            raise InternalInvariantBroken("compression exceeded its step bound")
