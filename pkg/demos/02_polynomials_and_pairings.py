"""Arrow diagrams, the jump traversal, and the ascending/descending polynomials.

Run: python demos/02_polynomials_and_pairings.py
"""

from vknot import (
    ascending_polynomial,
    basepoint_positions,
    conway_pairing,
    conway_polynomial,
    conway_set,
    descending_polynomial,
    is_ascending,
    is_one_component,
    jump_traversal,
    parse_arrow_code,
    parse_gauss_code,
    v2,
)

print("== jump traversal ==")
pattern = parse_arrow_code("U1O2O1U2")
reached, visited = jump_traversal(pattern)
print("pattern U1O2O1U2 reaches endpoints in order", reached)
print("one component:", is_one_component(pattern), " ascending:", is_ascending(pattern))

print()
print("== Conway combinations ==")
for degree in (0, 1, 2, 3):
    circles = 1 if degree % 2 == 0 else 2
    members = conway_set(degree, circles, "ascending").members
    print("degree %d on %d circle(s): %d ascending member(s): %s"
          % (degree, circles, len(members), ", ".join(str(m) or "(empty)" for m in members)))

print()
print("== polynomials on classical knots ==")
for name, code in (
    ("trefoil", "O1+U2+O3+U1+O2+U3+"),
    ("figure-eight", "O1+U2-O3-U1+O4+U3-O2-U4+"),
    ("cinquefoil", "O1+U2+O3+U4+O5+U1+O2+U3+O4+U5+"),
):
    G = parse_gauss_code(code)
    asc = ascending_polynomial(G)
    print("%-13s ascending %-20s descending %-20s skein oracle %s"
          % (name, asc, descending_polynomial(G), conway_polynomial(G)))

print()
print("== basepoint dependence needs non-numberable diagrams ==")
VT = parse_gauss_code("O1+O2+U1+U2+")
values = [conway_pairing(B, 2, "descending") for B in basepoint_positions(VT)]
print("descending z^2 pairing of the virtual trefoil per basepoint:", values)

trefoil = parse_gauss_code("O1+U2+O3+U1+O2+U3+")
print("certified v2 of the trefoil mod 2:", v2(trefoil, 2, certify=True))
