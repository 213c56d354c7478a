"""Exact simulation of anyonic Mach-Zehnder interferometry.

Subpackages cover: anyon-model data and derived modular quantities
(:mod:`anyonmz.model`), a brute-force fusion-tree diagram evaluator
(:mod:`anyonmz.oracle`), closed-form untwisted and twisted interferometer
engines (:mod:`anyonmz.interferometry`, :mod:`anyonmz.twisted`), Ising
magic-state protocols (:mod:`anyonmz.ising`), and a batch CLI
(:mod:`anyonmz.cli`).
"""

from .model import AnyonModel, Z2GradedModel, bundled_models, load_model, mr_half_graded

__all__ = [
    "AnyonModel",
    "Z2GradedModel",
    "bundled_models",
    "load_model",
    "mr_half_graded",
]

__version__ = "0.1.0"
