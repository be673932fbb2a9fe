"""grassmann - exact calculus of geometric forms over an affine frame.

This is a 7-layer architecture:
- Layer 1 (Settings): Configuration, logging, error definitions
- Layer 2 (Core): Frames, blades, geometric forms, wedge product, form JSON
- Layer 3 (Boundary): The operator omega, reduction formula, classification
- Layer 4 (Affine): Volume, barycenters, incidence, coordinates, factorization, cycles
- Layer 5 (Mechanics): Systems of applied forces as degree-2 forms
- Layer 6 (CLI): Expression language and subcommands with canonical JSON output
- Layer 7 (Oracle): Free forms over point tuples, equality by volume evaluation
"""

from src.layer1_settings import settings, logger

__version__ = "0.1.0"

__all__ = [
    "settings",
    "logger",
]
