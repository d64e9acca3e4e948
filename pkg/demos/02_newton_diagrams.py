"""
Newton diagrams and their Minkowski arithmetic
==============================================

Diagrams of concrete polynomials, elementary building blocks, sums and
differences, and the two renderers.
"""

from planebranch import (
    ElementarySegment,
    NewtonDiagram,
    diagram_of,
    parse_poly,
)

# the diagram of a polynomial is the staircase of its support
f = parse_poly("(y^2-x^3)^2-x^5*y")
print("diagram of f:", diagram_of(f))

# elementary pieces {L\M} correspond to x^L + y^M; a diagram is the
# Minkowski sum of its pieces, sorted by inclination L/M
a = NewtonDiagram([ElementarySegment(8, 2)])
b = NewtonDiagram([ElementarySegment(13, 3)])
total = a + b
print("sum:", total)
print("vertices:", " -> ".join(f"({u}, {v})" for u, v in total.vertices()))

# the sum can be undone piece by piece
print("difference:", total - a)

# products of polynomials add their diagrams
g = parse_poly("y^3+x^2*y+x^5")
print("product rule holds:", diagram_of(f * g) == diagram_of(f) + diagram_of(g))

# quick look in the terminal, or SVG for a report
print()
print(total.render_ascii())
svg = total.render_svg()
print("svg:", svg[:60], "...")
