"""Betti numbers of regular nilpotent Hessenberg varieties via apolarity."""

from hessberg.apolarity import betti_numbers
from hessberg.hessenberg import enumerate_hessenberg_spaces
from hessberg.rootsys import build_root_system

for label in ["A2", "A3", "C3"]:
    rs = build_root_system(label)
    print(label, "|W| length series:", rs.weyl_group().length_histogram())
    for h in enumerate_hessenberg_spaces(rs):
        print(f"   {h.describe():<60} {betti_numbers(rs, h).betti}")
