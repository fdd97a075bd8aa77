"""
Progression products and polygonal numbers
===========================================

Ordinary multiplication writes m * n as the sum of n terms of an arithmetic
progression with difference 2 starting at m - n + 1.  Varying the difference
k gives a family of products; squaring under difference k produces the
(k+2)-gonal numbers.

Run with the package installed (pip install -e .) or PYTHONPATH=src.
"""

from karith import k_product, k_product_by_summation, polygonal, t_peano_product

# The same pair multiplied under different differences.
for k in (1, 2, 3, 6):
    print(f"7 (*) 5 with difference {k}: {k_product(7, 5, k)}")

# The closed form agrees with literally adding the progression.
print("\n6 (*) 5 with difference 3 as a sum:",
      k_product_by_summation(6, 5, 3), "= 2 + 5 + 8 + 11 + 14")

# Defining the product through the successor recursion shifts the difference
# by two: the recursion with increment t is the product with difference t+2.
print("recursive product, increment 1:", t_peano_product(7, 5, 1),
      "== product with difference 3:", k_product(7, 5, 3))

# Self-products are figurate numbers: triangles at difference 1, squares at
# 2, pentagons at 3, ...
print("\n n  triangle  square  pentagon  hexagon")
for n in range(1, 9):
    row = [polygonal(n, s) for s in (3, 4, 5, 6)]
    print(f"{n:2}  {row[0]:8}  {row[1]:6}  {row[2]:8}  {row[3]:7}")

# The product is neither commutative nor associative away from k = 2.
print("\n(2 (*) 3) (*) 4 at difference 1:", k_product(k_product(2, 3, 1), 4, 1))
print("2 (*) (3 (*) 4) at difference 1:", k_product(2, k_product(3, 4, 1), 1))
