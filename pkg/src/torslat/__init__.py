"""Torsion classes of the preprojective algebra of type A_n, computed exactly."""

from .arcs import Arc, ArcDiagram, arc_complex, sigma
from .errors import BudgetExceeded, TorslatError
from .iso import IsoReport, phi, phi_via_cjr, verify_isomorphism
from .lattice import FiniteLattice, find_isomorphism
from .strings import StringModule, enumerate_indecomposables, hom_dim
from .torsion import TorsionClass, build_tors_lattice, filt_gen, torsion_closure
from .weak import build_weak_order, delta, delta_inv

__all__ = [
    "Arc", "ArcDiagram", "arc_complex", "sigma",
    "BudgetExceeded", "TorslatError",
    "IsoReport", "phi", "phi_via_cjr", "verify_isomorphism",
    "FiniteLattice", "find_isomorphism",
    "StringModule", "enumerate_indecomposables", "hom_dim",
    "TorsionClass", "build_tors_lattice", "filt_gen", "torsion_closure",
    "build_weak_order", "delta", "delta_inv",
]
