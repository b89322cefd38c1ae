"""Conjugating x(t) = t x_J + (1 - t) N_0 back to t x_J in sl_4."""

from fractions import Fraction

from hessberg.charts import conjugate_line, make_regular_element
from hessberg.rootsys import build_root_system

rs = build_root_system("A3")
x = make_regular_element(rs, {1})
for t in [Fraction(2), Fraction(-3, 5)]:
    g, ok = conjugate_line(x, t)
    print(f"t = {t}: verified {ok}")
    for row in g:
        print("   ", " ".join(f"{str(v):>8}" for v in row))
