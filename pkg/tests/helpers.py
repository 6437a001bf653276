"""Independent oracles and samplers for the test-suite.

Nothing here calls into the package's algorithms: sets are plain
``frozenset`` objects of labels or ids, and every check is brute force.
"""
from __future__ import annotations

import random
from itertools import chain, combinations, product

from chvatal import Family, GroundSet


def fam(text: str, ground: str | None = None) -> Family:
    """``fam("abc abx")``; ``ground`` gives extra letters for the ground set."""
    letters = sorted(set(text.replace(" ", "")) | set(ground or ""))
    return Family.parse(text, GroundSet(letters))


def as_sets(family: Family) -> set[frozenset]:
    return {frozenset(family.ground.face_labels(f)) for f in family}


def words(family) -> set[str]:
    """Faces as sorted strings, e.g. ``{"a", "ab", "av"}``."""
    if isinstance(family, Family):
        family = as_sets(family)
    return {"".join(sorted(f)) for f in family}


# -- brute-force set theory ---------------------------------------------------

def brute_closure(faces) -> set[frozenset]:
    out = set()
    for f in faces:
        f = list(f)
        for k in range(1, len(f) + 1):
            out.update(frozenset(c) for c in combinations(f, k))
    return out


def brute_intersecting(faces) -> bool:
    faces = list(faces)
    return all(x & y for x in faces for y in faces)


def brute_star_size(faces, a) -> int:
    return sum(1 for f in brute_closure(faces) if a in f)


def brute_max_star(faces) -> int:
    cl = brute_closure(faces)
    verts = set().union(*cl) if cl else set()
    return max((sum(1 for f in cl if v in f) for v in verts), default=0)


def naive_max_intersecting(faces) -> int:
    """Largest intersecting subfamily by scanning subsets from the largest size down."""
    faces = list(faces)
    for k in range(len(faces), 0, -1):
        for combo in combinations(faces, k):
            if all(x & y for x, y in combinations(combo, 2)):
                return k
    return 0


# -- Dedekind numbers ---------------------------------------------------------

def monotone_functions(n: int) -> list[int]:
    """All monotone Boolean functions on n variables as truth-table bitmasks."""
    points = range(1 << n)
    covers = [(x, x | 1 << i) for x in points for i in range(n) if not x >> i & 1]
    out = []
    for table in range(1 << (1 << n)):
        if all(not (table >> x & 1) or table >> y & 1 for x, y in covers):
            out.append(table)
    return out


def dedekind(n: int) -> int:
    """M(n) by pairing monotone functions on n-1 variables, f0 <= f1 pointwise."""
    if n == 0:
        return 2
    fs = monotone_functions(n - 1)
    return sum(1 for f0, f1 in product(fs, fs) if f0 & ~f1 == 0)


def antichain_count(n: int) -> int:
    """Antichains of nonempty subsets of [n] by scanning all subfamilies (n <= 4)."""
    subsets = [frozenset(c) for k in range(1, n + 1) for c in combinations(range(n), k)]
    count = 0
    for mask in range(1 << len(subsets)):
        chosen = [s for i, s in enumerate(subsets) if mask >> i & 1]
        if all(not (x < y or y < x) for x, y in combinations(chosen, 2)):
            count += 1
    return count


# -- samplers -----------------------------------------------------------------

def random_face(rng: random.Random, n: int, must: int = 0, size_hi: int = 5) -> int:
    size = rng.randint(1, min(n, size_hi))
    face = must
    while face.bit_count() < size:
        face |= 1 << rng.randrange(n)
    return face


def two_star_family(rng: random.Random, n: int) -> tuple[Family, int, int]:
    """Rejection-sample an intersecting family inside st(a) | st(b)."""
    a, b = rng.sample(range(n), 2)
    ground = GroundSet.of_size(n)
    target = rng.randint(1, 18)
    faces: set[int] = set()
    for _ in range(8 * target):
        anchor = rng.choice((1 << a, 1 << b, 1 << a | 1 << b))
        f = random_face(rng, n, anchor, size_hi=6)
        if f & (1 << a | 1 << b) and all(f & g for g in faces):
            faces.add(f)
        if len(faces) >= target:
            break
    return Family(ground, faces), a, b


def flip_instance(rng: random.Random, n: int) -> tuple[Family, int, int, int]:
    """Intersecting family where every face through v meets {a, b}."""
    a, b, v = rng.sample(range(n), 3)
    ab, vm = 1 << a | 1 << b, 1 << v
    ground = GroundSet.of_size(n)
    faces: set[int] = set()
    for _ in range(rng.randint(1, 14)):
        roll = rng.random()
        if roll < 0.6:
            must = vm | rng.choice((1 << a, 1 << b))
        elif roll < 0.8:
            must = rng.choice((1 << a, 1 << b))
        else:
            must = 0
        f = random_face(rng, n, must)
        if f & vm and not f & ab:
            continue
        if all(f & g for g in faces):
            faces.add(f)
    return Family(ground, faces), a, b, v


def random_complex_faces(rng: random.Random, n: int, max_rank: int, gens: int) -> list[int]:
    out = []
    for _ in range(gens):
        out.append(random_face(rng, n, size_hi=max_rank))
    return out


def greedy_intersecting(rng: random.Random, faces, keep: float = 0.8) -> list[int]:
    faces = list(faces)
    rng.shuffle(faces)
    chosen: list[int] = []
    for f in faces:
        if rng.random() < keep and all(f & g for g in chosen):
            chosen.append(f)
    return chosen


def masks_to_sets(faces) -> list[frozenset]:
    return [frozenset(i for i in range(f.bit_length()) if f >> i & 1) for f in faces]


def flatten(xs):
    return list(chain.from_iterable(xs))
