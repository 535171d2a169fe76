"""artinian-hvec: exact h-vector and socle-vector calculus for artinian algebras."""

__version__ = "0.1.0"
