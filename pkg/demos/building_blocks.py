#!/usr/bin/env python3
"""Tour of the building blocks: base graphs, expansions, and degree classes.

The level-t expansion of a base graph on n vertices lives on all words of
length t over the base alphabet. Each base edge {x, y} reappears once per
prefix and level, joining w x y...y to w y x...x, so the expansion has n**t
vertices and m * (1 + n + ... + n**(t-1)) edges.
"""

import sierpindex as sx

# A base graph can come from a named family or from an edge-list document.
base = sx.generate_family("demo", [])
print("base graph:", base, "degrees:", base.degrees().tolist()[1:])
print("triangles:", sx.triangle_count(base))
print(sx.render_edge_list(base))

# Expanding two levels: 49 vertices, 8 * (1 + 7) = 64 edges.
expanded = sx.sierpinski_graph(base, 2)
print("two-level expansion:", expanded)

# Constant words keep their base degree; the two vertices joining copy x to
# copy y gain exactly one. Everything else follows from those two facts.
for x in (1, 7):
    corner = sx.word_to_id((x, x), base.n)
    print(f"corner word {x}{x} -> id {corner}, degree {expanded.degree(corner)}"
          f" (base degree {base.degree(x)})")

# The degree-class counters say, per base edge, how many copies have each
# endpoint at its base degree or one above. Closed form and explicit census
# agree exactly.
for counts in sx.census_edge_classes(base, 2)[:3]:
    closed = sx.edge_class_counts(base, counts.x, counts.y, 2)
    print(f"edge {{{counts.x},{counts.y}}}: census {counts.as_tuple()}"
          f" closed {closed.as_tuple()}")

# The polymeric variant stacks levels 1..t and wires every base copy to a hub.
poly = sx.polymeric_graph(base, 2)
layout = sx.polymeric_layout(base.n, 2)
print("polymeric expansion:", poly)
print("apex hub degree:", poly.degree(layout.hub_id(1, 1)), "(= n)")
print("level-2 hub degree:", poly.degree(layout.hub_id(2, 1)), "(= n + 1)")
