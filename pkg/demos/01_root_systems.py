"""Root systems, Weyl groups and the height-lowering injection.

Run: python3 demos/01_root_systems.py
"""

from hessberg.rootsys import build_root_system

for label in ["A2", "B2", "G2", "A3", "F4"]:
    rs = build_root_system(label)
    W = rs.weyl_group()
    print(f"{label}: {rs.num_positive_roots} positive roots, |W| = {len(W)}, "
          f"lengths {W.length_histogram()}")

# the positive roots of G2 in the fixed enumeration (height, then reverse-lex)
g2 = build_root_system("G2")
print("G2 roots:", ", ".join(r.name() for r in g2.positive_roots))

# each root of height >= 2 maps injectively to a root one step lower
for a, b in sorted(g2.height_injection.mapping.items(), key=lambda t: g2.index[t[0]]):
    print(f"  {a.name():>8} -> {b.name()}")
