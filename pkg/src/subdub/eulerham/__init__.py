"""Euler tours, their lifts to Hamiltonian cycles, and the exhaustive checks around them."""

from .arboricity import linear_arboricity_two
from .cycles import (
    HamCycle,
    PairingReport,
    complement_components,
    complement_cycle,
    count_ham_decompositions,
    cycle_from_edges,
    enumerate_ham_cycles,
    ham_decompositions,
    is_hamiltonian_paired,
    pairing_report,
    validate_ham_cycle,
)
from .tours import (
    EulerTour,
    Hairpin,
    all_bit_vectors,
    all_euler_tours,
    euler_tour,
    hairpins_of,
    lift_tour,
    project_to_tour,
    unlift,
    validate_tour,
)
from ..multigraph import delete_vertex

__all__ = [
    "EulerTour",
    "Hairpin",
    "HamCycle",
    "PairingReport",
    "all_bit_vectors",
    "all_euler_tours",
    "complement_components",
    "complement_cycle",
    "count_ham_decompositions",
    "cycle_from_edges",
    "delete_vertex",
    "enumerate_ham_cycles",
    "euler_tour",
    "hairpins_of",
    "ham_decompositions",
    "is_hamiltonian_paired",
    "lift_tour",
    "linear_arboricity_two",
    "pairing_report",
    "project_to_tour",
    "unlift",
    "validate_ham_cycle",
    "validate_tour",
]
