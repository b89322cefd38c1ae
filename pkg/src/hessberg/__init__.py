"""Computations on regular Hessenberg varieties in flag varieties G/B.

Exact rational arithmetic throughout. The main entry points:

* :mod:`hessberg.rootsys` root systems, Weyl groups, weights
* :mod:`hessberg.hessenberg` Hessenberg spaces as root subsets
* :mod:`hessberg.volume` volume polynomials and fixed-point volumes
* :mod:`hessberg.cohomology` Schubert classes, degrees, Euler characteristics
* :mod:`hessberg.charts` regular elements and type A chart equations
* :mod:`hessberg.apolarity` Betti numbers of the regular nilpotent variety
"""

from .apolarity import GradedBetti, betti_numbers, check_weyl_series
from .charts import (ChartIdealGenerators, EliminationReport, RegularElement, chart_polynomials,
                     conjugate_line, conjugate_to_normal_form, eliminate_w0, make_regular_element)
from .cohomology import (BWBResult, FixedPointCharacter, HilbertPolynomial, SchubertExpansion,
                         bwb_classify, check_rho_wall, chi_line_bundle, euler_class_expansion,
                         hilbert_polynomial, integrate_degree)
from .errors import HessbergError, InputError, InternalError, ResourceError, UnsupportedError
from .hessenberg import (HessenbergSpace, HessenbergValidationError, enumerate_hessenberg_spaces,
                         from_hessenberg_function, full_space, minimal_space, validate_hessenberg)
from .polyring import Polynomial
from .rootsys import (Root, RootSystem, Weight, WeylElement, WeylGroup, build_root_system,
                      enumerate_weyl, find_height_injection)
from .volume import VolumePolynomial, volume_both, volume_localization, volume_polynomial

__version__ = "0.1.0"
