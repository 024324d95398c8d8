"""Computation engine: exact linear algebra up to deformation certificates."""
