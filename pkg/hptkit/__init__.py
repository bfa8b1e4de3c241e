"""Exact homological perturbation theory on finite complexes and on the perturbation algebras."""

__version__ = "0.1.0"
