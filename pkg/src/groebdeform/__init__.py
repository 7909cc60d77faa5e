"""Exact commutative algebra for Borel ideals, binomial ideals and their
Groebner deformations."""
from .binsys import BinomialSystem, SystemClass, classify, gb_rlex, sat_gb
from .borel import BorelSet, borel_closure, ghl_normal_form, growth_vector, height_vector
from .cohomology import CohomProfile, cohom_profile
from .gin import gin_compute, gin_with_witness
from .hilbert import NumFn, QPolynomial, hf_monomial_quotient
from .orders import HLEX, RLEX, TermOrder
from .polyalg import IdealGB, MonomialIdeal, Poly, buchberger, initial_ideal
from .sequences import (BoundSpec, ConnectingSequence, Node, connect_equal_hf, connect_leq_hf,
                        verify_edge, verify_sequence)

__version__ = "0.1.0"

__all__ = [
    "BinomialSystem", "SystemClass", "classify", "gb_rlex", "sat_gb",
    "BorelSet", "borel_closure", "ghl_normal_form", "growth_vector", "height_vector",
    "CohomProfile", "cohom_profile", "gin_compute", "gin_with_witness",
    "NumFn", "QPolynomial", "hf_monomial_quotient", "HLEX", "RLEX", "TermOrder",
    "IdealGB", "MonomialIdeal", "Poly", "buchberger", "initial_ideal",
    "BoundSpec", "ConnectingSequence", "Node", "connect_equal_hf", "connect_leq_hf",
    "verify_edge", "verify_sequence",
]
