"""Discrete Frechet distance under translation."""
