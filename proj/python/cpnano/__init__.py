"""Casimir-Polder free energies and entropies of anisotropic nanoparticles.

Thin wrapper around the compiled ``_core`` module: particle-plate and
particle-particle free energies and entropies, negative-entropy
classification, figure-curve data, and Matsubara-sum verification.
"""

from ._core import *  # noqa: F401,F403

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
