"""Ground sets, faces, families and complexes.

A face is a plain ``int`` bitmask over vertex ids: bit ``i`` set means vertex
``i`` belongs to the face. Intersection is ``f & g``, subset is
``f & ~g == 0`` and size is ``f.bit_count()``. The empty face (``0``) is never
stored in a family or complex.

Families keep their faces sorted by ``(size, value)`` so iteration order, and
everything derived from it, is deterministic.
"""
from __future__ import annotations

from collections.abc import Iterable, Iterator
from itertools import combinations
from string import ascii_lowercase

from .errors import CapacityError, MalformedInput, UnknownVertex

CAPACITY = 64


# -- face helpers -------------------------------------------------------------

def face_key(face: int) -> tuple[int, int]:
    return face.bit_count(), face


def bits(face: int) -> Iterator[int]:
    """Yield vertex ids of ``face`` in increasing order."""
    while face:
        low = face & -face
        yield low.bit_length() - 1
        face ^= low


def bit(v: int) -> int:
    return 1 << v


def nonempty_subsets(face: int) -> Iterator[int]:
    sub = face
    while sub:
        yield sub
        sub = (sub - 1) & face


def maximal_faces(faces: Iterable[int]) -> list[int]:
    """Inclusion-maximal members of ``faces``, sorted by ``face_key``."""
    ordered = sorted(set(faces), key=face_key, reverse=True)
    kept: list[int] = []
    for f in ordered:
        if not any(f & ~g == 0 for g in kept):
            kept.append(f)
    return sorted(kept, key=face_key)


def default_labels(n: int) -> tuple[str, ...]:
    if n <= len(ascii_lowercase):
        return tuple(ascii_lowercase[:n])
    width = len(str(n - 1))
    return tuple(f"v{i:0{width}d}" for i in range(n))


# -- ground set ---------------------------------------------------------------

class GroundSet:
    """Ordered vertex labels; vertex ids are positions in label-sorted order."""

    __slots__ = ("labels", "_index")

    def __init__(self, labels: Iterable[str]):
        labels = tuple(labels)
        if any(not isinstance(x, str) or not x for x in labels):
            raise MalformedInput("vertex labels must be nonempty strings")
        if len(set(labels)) != len(labels):
            raise MalformedInput("vertex labels must be unique")
        if len(labels) > CAPACITY:
            raise CapacityError(f"{len(labels)} vertices exceed face capacity {CAPACITY}")
        self.labels = tuple(sorted(labels))
        self._index = {x: i for i, x in enumerate(self.labels)}

    @classmethod
    def of_size(cls, n: int) -> GroundSet:
        return cls(default_labels(n))

    @property
    def n(self) -> int:
        return len(self.labels)

    @property
    def full(self) -> int:
        return (1 << self.n) - 1

    def vid(self, vertex: int | str) -> int:
        """Vertex id for a label or an id; raises :class:`UnknownVertex`."""
        if isinstance(vertex, str):
            try:
                return self._index[vertex]
            except KeyError:
                raise UnknownVertex(f"unknown vertex {vertex!r}") from None
        if isinstance(vertex, int) and 0 <= vertex < self.n:
            return vertex
        raise UnknownVertex(f"unknown vertex {vertex!r}")

    def label(self, v: int) -> str:
        return self.labels[v]

    def face(self, vertices: Iterable[int | str]) -> int:
        mask = 0
        for x in vertices:
            mask |= 1 << self.vid(x)
        return mask

    def face_labels(self, face: int) -> list[str]:
        return [self.labels[i] for i in bits(face)]

    def face_str(self, face: int) -> str:
        sep = "" if all(len(x) == 1 for x in self.labels) else ","
        return sep.join(self.face_labels(face))

    def __eq__(self, other):
        return isinstance(other, GroundSet) and self.labels == other.labels

    def __hash__(self):
        return hash(self.labels)

    def __repr__(self):
        return f"GroundSet({list(self.labels)!r})"

    def __reduce__(self):
        return GroundSet, (self.labels,)


# -- families -----------------------------------------------------------------

class Family:
    """An immutable finite set of distinct nonempty faces over a ground set."""

    __slots__ = ("ground", "faces", "members")

    def __init__(self, ground: GroundSet, faces: Iterable[int] = ()):
        members = frozenset(faces)
        outside = ~ground.full
        for f in members:
            if f <= 0:
                raise MalformedInput("empty face in family")
            if f & outside:
                raise MalformedInput(f"face {f:#x} not inside the ground set")
        self.ground = ground
        self.members = members
        self.faces = tuple(sorted(members, key=face_key))

    @classmethod
    def from_labels(cls, ground: GroundSet, faces: Iterable[Iterable[str]]) -> Family:
        masks = []
        for f in faces:
            f = list(f)
            if not f:
                raise MalformedInput("empty face in family")
            if len(set(f)) != len(f):
                raise MalformedInput(f"repeated vertex in face {f!r}")
            masks.append(ground.face(f))
        if len(set(masks)) != len(masks):
            raise MalformedInput("duplicate face in family")
        return cls(ground, masks)

    @classmethod
    def parse(cls, text: str, ground: GroundSet | None = None) -> Family:
        """Build from single-letter shorthand, e.g. ``Family.parse("abc abx")``.

        Without ``ground`` the ground set is the letters that occur.
        """
        words = text.split()
        if ground is None:
            ground = GroundSet(sorted({c for w in words for c in w}))
        return cls.from_labels(ground, [list(w) for w in words])

    def __len__(self):
        return len(self.faces)

    def __iter__(self):
        return iter(self.faces)

    def __contains__(self, face):
        return face in self.members

    def __eq__(self, other):
        return (isinstance(other, Family) and self.members == other.members
                and self.ground == other.ground)

    def __hash__(self):
        return hash((self.ground, self.members))

    def __repr__(self):
        return "Family{" + ", ".join(self.ground.face_str(f) for f in self.faces) + "}"

    @property
    def size(self) -> int:
        return len(self.faces)

    @property
    def total_size(self) -> int:
        return sum(f.bit_count() for f in self.faces)

    @property
    def rank(self) -> int:
        return self.faces[-1].bit_count() if self.faces else 0

    @property
    def support(self) -> int:
        """Union of all faces, as a mask."""
        out = 0
        for f in self.faces:
            out |= f
        return out

    def with_faces(self, faces: Iterable[int]) -> Family:
        return Family(self.ground, faces)

    def replace(self, remove: Iterable[int] = (), add: Iterable[int] = ()) -> Family:
        return Family(self.ground, (self.members - frozenset(remove)) | frozenset(add))

    def issubset(self, other: Family | Complex) -> bool:
        return all(f in other for f in self.faces)

    def label_faces(self) -> list[list[str]]:
        return [self.ground.face_labels(f) for f in self.faces]


class Complex:
    """A family closed under taking nonempty subsets, with its generators."""

    __slots__ = ("family", "generators")

    def __init__(self, family: Family, generators: Family | None = None, check: bool = True):
        if check:
            for f in family.faces:
                for v in bits(f):
                    sub = f & ~(1 << v)
                    if sub and sub not in family.members:
                        raise MalformedInput("family is not closed under subsets")
        self.family = family
        if generators is None:
            generators = Family(family.ground, maximal_faces(family.faces))
        self.generators = generators

    @property
    def ground(self) -> GroundSet:
        return self.family.ground

    @property
    def faces(self) -> tuple[int, ...]:
        return self.family.faces

    @property
    def vertices(self) -> int:
        return self.family.support

    def __len__(self):
        return len(self.family)

    def __iter__(self):
        return iter(self.family.faces)

    def __contains__(self, face):
        return face in self.family.members

    def __eq__(self, other):
        return isinstance(other, Complex) and self.family == other.family

    def __hash__(self):
        return hash(self.family)

    def __repr__(self):
        return "Complex<" + ", ".join(self.ground.face_str(f) for f in self.generators) + ">"


# -- operations ---------------------------------------------------------------

def closure(family: Family) -> Complex:
    """Smallest complex containing every face of ``family``."""
    ground = family.ground
    if ground.n > CAPACITY:
        raise CapacityError(f"{ground.n} vertices exceed face capacity {CAPACITY}")
    gens = maximal_faces(family.faces)
    faces: set[int] = set()
    for g in gens:
        if g not in faces:
            faces.update(nonempty_subsets(g))
    return Complex(Family(ground, faces), Family(ground, gens), check=False)


def is_intersecting(family: Family | Iterable[int]) -> bool:
    """True iff every pair of faces (a face with itself included) meets."""
    faces = list(family)
    for i, f in enumerate(faces):
        if not f:
            return False
        for g in faces[i + 1:]:
            if not f & g:
                return False
    return True


def star(complex: Complex, a: int | str) -> Family:
    v = complex.ground.vid(a)
    m = 1 << v
    return Family(complex.ground, (f for f in complex.faces if f & m))


def star_size(complex: Complex, a: int | str) -> int:
    m = 1 << complex.ground.vid(a)
    return sum(1 for f in complex.faces if f & m)


def rank(family: Family) -> int:
    return family.rank


def graph_is_complete(complex: Complex) -> bool:
    """True iff every two vertices used by the complex span an edge of it."""
    verts = list(bits(complex.vertices))
    return all((1 << u | 1 << w) in complex for u, w in combinations(verts, 2))


def non_edges(complex: Complex) -> list[tuple[int, int]]:
    """Vertex pairs of the complex that do not span an edge, in lex order."""
    verts = list(bits(complex.vertices))
    return [(u, w) for u, w in combinations(verts, 2) if (1 << u | 1 << w) not in complex]
