"""Volume polynomials, checked against fixed-point localization.

P_H is obtained by differentiating the product of positive roots along the
roots outside H. Its value at lambda is the normalized degree of Hess(x, H)
in P(V_lambda).
"""

from hessberg.hessenberg import enumerate_hessenberg_spaces, minimal_space
from hessberg.rootsys import Weight, build_root_system
from hessberg.volume import volume, volume_localization, volume_polynomial

rs = build_root_system("A2")
vp = volume_polynomial(rs, minimal_space(rs))
print("Peterson surface in SL3/B:  P =", vp.p_h.to_string(["a1", "a2"]))
print("  Vol at rho:", volume(vp, rs.rho_weight), "| localization:",
      volume_localization(rs, minimal_space(rs), rs.rho_weight))

g2 = build_root_system("G2")
lam = Weight((2, 1))
for h in enumerate_hessenberg_spaces(g2):
    a = volume(volume_polynomial(g2, h), lam)
    b = volume_localization(g2, h, lam)
    print(f"G2 dim {h.dimension}: {a} {'==' if a == b else '!='} {b}")
