"""Exact verification toolkit for cohomology, lattice and monodromy computations
around cubic fourfolds and their Fano varieties of lines."""

__version__ = "1.0.0"
