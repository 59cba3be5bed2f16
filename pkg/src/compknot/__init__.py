"""Composite knot tabulation from prime factors via wreath-product orbits."""
from .gamma import (FULL, GAMMA, IDENTITY, INVERTIBLE, MIRROR, MIRROR_REVERSE, NEG_AMPHICHIRAL, NONE,
                    POS_AMPHICHIRAL, REVERSE, GammaElement, SymmetrySubgroup, compose, cosets,
                    intersect, name_of, subgroup_from_name)
from .pdcode import (PDCode, apply_gamma, canonical_form, connected_sum, connected_sum_list,
                     diagram_equal, parse, serialize, validate)
from .primes import FactorList, PrimeKnotRecord, PrimeTable, enumerate_factor_lists, load, total_crossings
from .orbits import (CompositeClass, WreathElement, act, normal_form, orbit_bruteforce, orbits_all,
                     symmetry_group)
from .tabulate import Census, TableRow, census, composite_name, composite_pdcode, tabulate

__version__ = '0.1.0'
