"""Exact coincidence site lattices, shifted lattices and multilattices."""

from .errors import DomainError
from .gaussian import GaussianInt, GaussianRational
from .lattice import RationalLattice
from .quat import Quaternion
from .square import PlanarCoincidence

__all__ = ["DomainError", "GaussianInt", "GaussianRational", "PlanarCoincidence", "Quaternion", "RationalLattice"]
