"""Subdivided doubles of 4-regular multigraphs and the Hamiltonian structure they carry."""

from .errors import (
    NoTourError,
    PreconditionError,
    ReconstructionError,
    SubdubError,
    UnsupportedInputError,
    UsageError,
)
from .multigraph import (
    MultiGraph,
    are_isomorphic,
    bipartition,
    degree,
    delete_vertex,
    is_connected,
    is_k_regular,
    line_graph,
)
from .subdouble import SdCertificate, SdGraph, Subdivision, Twin, condense, recognize, subdivided_double
from .eulerham import *  # noqa: F401,F403
from . import generators

__version__ = "0.1.0"
