"""
Faces, complexes and stars
==========================

Families are built from label strings; faces are stored as bitmasks.
"""
from chvatal import Family, closure, graph_is_complete, is_intersecting, star

# %% A family and the complex it generates
F = Family.parse("abc abx acx")
C = closure(F)
print("family:   ", F)
print("complex:  ", len(C), "faces, generators", C.generators)

# %% Stars are intersecting, and here st(a) is the biggest one
for v in F.ground.labels:
    s = star(C, v)
    print(f"st({v}) has {len(s)} faces; intersecting={is_intersecting(s)}")

# %% The graph of this complex has every edge; adding abv would break that
print("complete graph:", graph_is_complete(C))
print("after adding abv:", graph_is_complete(closure(Family.parse("abc abv"))))
