"""
Flips and two-star compression
==============================

A family inside st(a) | st(b) is pushed into a single star without
losing faces. Each step either grows the family or keeps its size and
shrinks its total size.
"""
from chvatal import FlipContext, Family, closure, flip, star, two_star_compress

F = Family.parse("av bv ab")
g = F.ground

# %% One flip at (a, b, v): bv goes, a comes in
ctx = FlipContext(g.vid("a"), g.vid("b"), g.vid("v"))
print(F, "->", flip(F, ctx))

# %% Full compression with its trace
F = Family.parse("av bv bvc abc avx bvx")
res = two_star_compress(F, "a", "b")
for step in res.trace:
    print(step.to_json())
w = F.ground.label(res.witness)
print(f"ended inside st({w}) with {res.final.size} faces (started with {F.size})")
print("|st(a)|, |st(b)| =", len(star(closure(F), "a")), len(star(closure(F), "b")))
