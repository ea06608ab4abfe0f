"""Tour of the Gauss-diagram data model and the diagram-level invariants.

Run: python demos/01_gauss_diagrams.py
"""

from vknot import (
    alexander_numbering,
    crossing_change,
    index,
    is_mod_p_numberable,
    parse_gauss_code,
    reidemeister_moves,
    smooth,
    warping_degree,
)

print("== parsing signed Gauss codes ==")
trefoil = parse_gauss_code("O1+U2+O3+U1+O2+U3+")
virtual_trefoil = parse_gauss_code("O1+O2+U1+U2+")
print("trefoil:        ", trefoil)
print("virtual trefoil:", virtual_trefoil)
print("a '*' moves the basepoint:", parse_gauss_code("O1+*U1+"))

print()
print("== chord indices ==")
print("every chord of a classical code has index 0:",
      [index(trefoil, c) for c in trefoil.chord_ids()])
print("the virtual trefoil has odd indices:",
      [index(virtual_trefoil, c) for c in virtual_trefoil.chord_ids()])

print()
print("== mod p Alexander numberings ==")
print("trefoil mod 2 numberable:", is_mod_p_numberable(trefoil, 2))
print("virtual trefoil mod 2 numberable:", is_mod_p_numberable(virtual_trefoil, 2))
numbering = alexander_numbering(trefoil, 0)
print("an exact numbering of the trefoil's short arcs:", numbering.labels[0])

print()
print("== warping degree and local moves ==")
print("warping degree of the trefoil:", warping_degree(trefoil))
switched = crossing_change(trefoil, 2)
print("after switching chord 2:", switched, "-> warping degree", warping_degree(switched))
smoothed = smooth(trefoil, 1)
print("smoothing chord 1 gives %d circles: %s" % (smoothed.num_circles, smoothed))

neighbors = reidemeister_moves(virtual_trefoil)
print()
print("the virtual trefoil has %d one-move neighbors, e.g." % len(neighbors))
for moved in neighbors[:4]:
    print("  ", moved)
