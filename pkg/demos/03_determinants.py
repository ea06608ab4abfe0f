"""Coloring matrices, the checkerboard determinant, and mock Seifert matrices.

Run: python demos/03_determinants.py
"""

from vknot import (
    coloring_matrix,
    determinant,
    find_entry,
    int_det,
    minor_independence_check,
    mock_det,
    parse_gauss_code,
    parse_int_matrix,
    skein_block_check,
)

print("== coloring matrix of the table knot 4.90 ==")
G = find_entry("4.90").diagram()
print("code:", G)
print(coloring_matrix(G).to_text())
print("determinant:", determinant(G))
print("all corank-1 minors agree:", minor_independence_check(G))

print()
print("== classical determinants ==")
for name in ("trefoil", "figure-eight", "granny"):
    entry = find_entry(name)
    print("%-13s det = %d" % (name, determinant(entry.diagram())))

print()
print("== mock Seifert matrix of 6.87548 ==")
S = parse_int_matrix("""
-2 -1 0 0
-1 2 1 0
0 -1 0 1
0 0 1 2
""")
print("det S =", int_det(S), " |det S| =", mock_det(S))
print("matches the coloring determinant of the table entry:",
      mock_det(S) == determinant(find_entry("6.87548").diagram()))

print()
print("== the bordered-block determinant identity ==")
print("det S+ - det S- = 2 det S0 on a sample block:",
      skein_block_check([[2, 1], [0, -3]], [1, 4], [-2, 5], 7))

print()
print("== a kink's matrix accumulates to zero ==")
print(coloring_matrix(parse_gauss_code("O1+U1+")).to_text())
