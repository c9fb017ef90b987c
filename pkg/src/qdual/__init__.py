"""qdual: exact verification engine for quantum-torus toroidal Lie algebras,
oscillator Fock modules, and their Howe dual pairs."""

__version__ = "0.1.0"
