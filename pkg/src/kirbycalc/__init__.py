"""Exact homological checks for Kirby calculus.

Submodules are imported explicitly, e.g. ``from kirbycalc.homlink import h1_of_surgery``.
"""
__version__ = "0.1.0"
