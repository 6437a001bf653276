"""
Certificates for rank three
===========================

``sterboul`` returns a witness vertex whose star in the generated complex is
at least as large as the family, plus the moves that got there.
"""
import itertools
import json
from collections import Counter

from chvatal import Family, GroundSet, sterboul

# %% A single triangle goes through case 1 and then compression
print(json.dumps(sterboul(Family.parse("abc")).to_json(), indent=1))

# %% Ten triangles on six vertices hit the six-vertex endgame directly
F = Family.parse("abc abx acy bxy cxy bcz axz cxz ayz byz")
cert = sterboul(F)
print(cert.rules, "witness", F.ground.label(cert.witness), cert.family_size, "<=", cert.star_size)

# %% Every intersecting triangle family on six vertices (one per complementary pair)
g = GroundSet.of_size(6)
tri = [g.face(c) for c in itertools.combinations(g.labels, 3)]
pairs = [(t, g.full ^ t) for t in tri if g.full ^ t > t]
routes = Counter()
for choice in itertools.product(range(3), repeat=len(pairs)):
    faces = [pairs[i][c - 1] for i, c in enumerate(choice) if c]
    if faces:
        routes[tuple(dict.fromkeys(sterboul(Family(g, faces)).rules))] += 1
for route, count in routes.most_common():
    print(count, route)
