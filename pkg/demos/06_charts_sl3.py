"""Chart equations at the longest element in SL3, and their elimination."""

from hessberg.charts import chart_polynomials, eliminate_w0, make_regular_element
from hessberg.hessenberg import minimal_space
from hessberg.rootsys import build_root_system

rs = build_root_system("A2")
w0 = rs.weyl_group().longest
for j_set in [set(), {0}, {0, 1}]:
    x = make_regular_element(rs, j_set)
    gens = chart_polynomials(x, minimal_space(rs), w0)
    print(f"J = {sorted(j + 1 for j in j_set)}, alpha(s) = {[str(v) for v in x.semisimple_values]}")
    for alpha, f in gens.generators.items():
        print(f"  f_{alpha.name()} = {f.to_string(gens.variable_names())}")
    rep = eliminate_w0(gens, x)
    pivots = ", ".join(f"t{v + 1} (case {c})" for _, v, c in rep.pivots)
    print(f"  eliminated {pivots}; free: {['t%d' % (v + 1) for v in rep.free_variables]}")
