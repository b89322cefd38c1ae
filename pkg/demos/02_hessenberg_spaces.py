"""Hessenberg spaces as lower-closed root sets, and type A Hessenberg functions."""

from hessberg.hessenberg import enumerate_hessenberg_spaces, from_hessenberg_function
from hessberg.rootsys import build_root_system

rs = build_root_system("A3")
for h in enumerate_hessenberg_spaces(rs):
    print(f"dim {h.dimension}  h = {h.hessenberg_function()}  {h.describe()}")

# a Hessenberg function gives the same object
h = from_hessenberg_function(4, [2, 4, 4])
print("from h = (2,4,4,4):", h.describe())

b3 = build_root_system("B3")
print("B3 has", len(enumerate_hessenberg_spaces(b3)), "Hessenberg spaces")
