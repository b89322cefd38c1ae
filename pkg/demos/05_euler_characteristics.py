"""Euler characteristics of line bundles and Hilbert polynomials.

chi is a fixed-point sum of exponential series along a generic line; the
poles cancel and the constant term is an integer.
"""

from hessberg.cohomology import bwb_classify, chi_line_bundle, hilbert_polynomial
from hessberg.hessenberg import enumerate_hessenberg_spaces, full_space, minimal_space
from hessberg.rootsys import Weight, build_root_system

rs = build_root_system("B2")
full = full_space(rs)
print("chi(G/B, L_lambda) vs Borel-Weil-Bott on B2:")
for lam in [(0, 0), (1, 0), (-2, 1), (-1, -1), (-3, 1)]:
    res = bwb_classify(rs, Weight(lam))
    print(f"  {lam}: chi = {chi_line_bundle(rs, full, Weight(lam))}, bwb: {res.case}"
          + (f" degree {res.cohomological_degree} dim {res.dimension}" if res.case == "regular" else ""))

print("chi(O) on every B2 Hessenberg variety:",
      [chi_line_bundle(rs, h, (0, 0)) for h in enumerate_hessenberg_spaces(rs)])

a2 = build_root_system("A2")
print("Hilbert polynomial of the Peterson surface at rho:",
      hilbert_polynomial(a2, minimal_space(a2), a2.rho_weight).to_string())
