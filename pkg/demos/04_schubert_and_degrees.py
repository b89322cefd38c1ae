"""Schubert expansion of [Hess] and projective degrees by divided differences."""

import math

from hessberg.cohomology import euler_class_expansion, integrate_degree
from hessberg.hessenberg import enumerate_hessenberg_spaces
from hessberg.rootsys import build_root_system
from hessberg.volume import volume, volume_polynomial

rs = build_root_system("A3")
for h in enumerate_hessenberg_spaces(rs):
    exp = euler_class_expansion(rs, h)
    terms = " + ".join(f"{c}*[{w.word_string()}]" for w, c in exp.support())
    deg = integrate_degree(rs, h, rs.rho_weight)
    vol = volume(volume_polynomial(rs, h), rs.rho_weight)
    print(f"{h.describe()}\n   class = {terms}\n   degree {deg} = {h.dimension}! * {vol}")
    assert deg == math.factorial(h.dimension) * vol
