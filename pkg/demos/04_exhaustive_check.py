"""
Exhaustive check on small ground sets
=====================================

Every complex on up to five vertices, its largest intersecting family
(by clique search) against its largest star.
"""
from chvatal import all_complexes, closure, exhaustive_verify, Family, verify_chvatal

# %% One complex by hand
v = verify_chvatal(closure(Family.parse("abc abx acx")))
print(v.to_json())

# %% Counts of complexes are Dedekind numbers minus one
for n in range(5):
    print(n, sum(1 for _ in all_complexes(n)))

# %% Full runs, raw and up to relabelling
for n in (3, 4, 5):
    for canonical in (False, True):
        r = exhaustive_verify(n, canonical=canonical)
        print(n, "canonical" if canonical else "raw", r.total, r.canonical,
              "violations:", len(r.violations), f"{r.wall_time:.2f}s")
