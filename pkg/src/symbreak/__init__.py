"""Exact symmetry-breaking indices of finite graphs and their Cartesian products."""

from .automorphism import (AutGroup, Permutation, SubgroupLattice, automorphisms, cycle_count, motion,
                           motion_of, orbit_count, subgroup_lattice)
from .errors import CapacityError, DomainError, InputError, InvariantViolation, SymbreakError
from .graph import (FamilySpec, Graph, ProductGraph, build_graph, cartesian_product, complete,
                    complete_bipartite, cycle, family, find_isomorphism, grid, hypercube, is_isomorphic,
                    layer, path, quotient)
from .indices import (Coloring, IndexReport, count_distinguishing_brute, count_distinguishing_moebius,
                      distinguishing_number, index_report, is_distinguishing, motion_lower_bound, phi,
                      phi_grid, phi_square_grid, stirling2, threshold, varphi, varphi_closed)
from .product import (Factorization, HolographicColor, alpha_equivalent, holographic_color,
                      is_distinguishing_product, theta_general, theta_power, theta_product_distinct)

__version__ = "0.1.0"
