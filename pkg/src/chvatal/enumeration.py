"""Exhaustive generation of complexes on small ground sets.

Complexes on ``[n]`` are generated depth-first over the nonempty subsets in
``(size, value)`` order; a subset may be switched on only if all of its
facets are already on, so every branch is a downset and each one is
produced exactly once. Their number is the Dedekind number ``M(n)`` minus one
(the antichain ``{{}}`` has no counterpart without the empty face).
"""
from __future__ import annotations

import logging
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from collections.abc import Iterator
from functools import lru_cache
from itertools import islice, permutations, repeat

from .core import (Complex, Family, GroundSet, bits, closure, face_key,
                   maximal_faces)
from .errors import BudgetExceeded, PreconditionViolated
from .oracle import verify_chvatal
from .rank3 import sterboul

log = logging.getLogger(__name__)

MAX_N = 6
DEFAULT_MAX_N = 5


@lru_cache(maxsize=None)
def _layout(n: int):
    order = sorted(range(1, 1 << n), key=face_key)
    need = {}
    for f in order:
        req = 0
        for v in bits(f):
            sub = f & ~(1 << v)
            if sub:
                req |= 1 << sub
        need[f] = req
    return order, need


def all_complexes(n: int, ground: GroundSet | None = None) -> Iterator[Complex]:
    """Yield every complex on ``n`` vertices once, the empty one first."""
    if not 0 <= n <= MAX_N:
        raise PreconditionViolated(f"n must be in 0..{MAX_N}, got {n}")
    ground = ground or GroundSet.of_size(n)
    order, need = _layout(n)
    total = len(order)
    chosen: list[int] = []

    def walk(i: int, on: int):
        if i == total:
            fam = Family(ground, chosen)
            yield Complex(fam, Family(ground, maximal_faces(chosen)), check=False)
            return
        f = order[i]
        yield from walk(i + 1, on)
        if on & need[f] == need[f]:
            chosen.append(f)
            yield from walk(i + 1, on | 1 << f)
            chosen.pop()

    yield from walk(0, 0)


@lru_cache(maxsize=None)
def _relabel_tables(k: int) -> list[list[int]]:
    tables = []
    for perm in permutations(range(k)):
        table = [0] * (1 << k)
        for mask in range(1, 1 << k):
            out = 0
            for v in bits(mask):
                out |= 1 << perm[v]
            table[mask] = out
        tables.append(table)
    return tables


def canonical_form(complex: Complex) -> tuple[int, tuple[int, ...]]:
    """Key equal for two complexes iff a vertex relabelling maps one to the other.

    Used vertices are packed onto ``0..k-1``; the key is ``k`` together with
    the least sorted generator list over all ``k!`` relabellings. Generators
    determine the complex, so this is equivalent to minimising over the whole
    face list.
    """
    used = list(bits(complex.vertices))
    pos = {v: i for i, v in enumerate(used)}
    packed = []
    for g in complex.generators:
        out = 0
        for v in bits(g):
            out |= 1 << pos[v]
        packed.append(out)
    best = None
    for table in _relabel_tables(len(used)):
        key = tuple(sorted((table[g] for g in packed), key=face_key))
        if best is None or key < best:
            best = key
    return len(used), best or ()


@dataclass
class EnumerationReport:
    n: int
    total: int = 0
    canonical: int | None = None
    verified: int = 0
    sterboul_checked: int = 0
    violations: list[dict] = field(default_factory=list)
    wall_time: float = 0.0

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "total": self.total,
            "canonical": self.canonical,
            "verified": self.verified,
            "sterboul_checked": self.sterboul_checked,
            "violations": self.violations,
            "wall_time": round(self.wall_time, 3),
        }


def _complex_json(cx: Complex) -> dict:
    return {"vertices": list(cx.ground.labels), "faces": cx.generators.label_faces()}


def check_complex(cx: Complex) -> tuple[bool, list[dict]]:
    """Run the oracle on one complex and, at rank <= 3, the certificate cross-check.

    Returns ``(sterboul_ran, problems)``; each problem is a JSON record.
    """
    verdict = verify_chvatal(cx)
    problems = []
    if not verdict.holds:
        problems.append({"kind": "conjecture", "complex": _complex_json(cx),
                         "max_intersecting": verdict.max_intersecting_size,
                         "max_star": verdict.max_star_size})
    ran = False
    if verdict.max_intersecting_size and cx.family.rank <= 3:
        ran = True
        cert = sterboul(verdict.max_intersecting_witness)
        # The certificate's star lives in a subcomplex, so it is squeezed between both sides.
        if not verdict.max_intersecting_size <= cert.star_size <= verdict.max_star_size:
            problems.append({"kind": "certificate", "complex": _complex_json(cx),
                             "max_intersecting": verdict.max_intersecting_size,
                             "max_star": verdict.max_star_size,
                             "certificate_star": cert.star_size})
    return ran, problems


def _check_chunk(n: int, chunk: list[tuple[int, ...]]):
    ground = GroundSet.of_size(n)
    return [check_complex(closure(Family(ground, gens))) for gens in chunk]


def _chunks(it, size):
    it = iter(it)
    while batch := list(islice(it, size)):
        yield batch


def exhaustive_verify(n: int, canonical: bool = False, jobs: int = 1,
                      huge: bool = False) -> EnumerationReport:
    """Check the star bound on every complex on ``n`` vertices.

    With ``canonical`` only one complex per isomorphism class is checked.
    ``jobs > 1`` fans the complexes out to worker processes; the report is
    identical to a serial run apart from ``wall_time``.
    """
    if n > DEFAULT_MAX_N and not huge:
        raise BudgetExceeded(f"n={n} is only run with huge=True")
    start = time.perf_counter()
    report = EnumerationReport(n)
    seen = set()

    def stream():
        for cx in all_complexes(n):
            report.total += 1
            if canonical:
                key = canonical_form(cx)
                if key in seen:
                    continue
                seen.add(key)
            yield cx

    if jobs > 1:
        payload = (cx.generators.faces for cx in stream())
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            batches = pool.map(_check_chunk, repeat(n), _chunks(payload, 512))
            results = [r for batch in batches for r in batch]
    else:
        results = [check_complex(cx) for cx in stream()]

    report.verified = len(results)
    for ran, problems in results:
        report.sterboul_checked += ran
        report.violations.extend(problems)
    if canonical:
        report.canonical = len(seen)
    report.violations.sort(key=lambda p: (p["kind"], len(p["complex"]["faces"]),
                                          p["complex"]["faces"]))
    report.wall_time = time.perf_counter() - start
    log.info("n=%d: %d complexes, %d checked in %.2fs", n, report.total,
             report.verified, report.wall_time)
    return report
