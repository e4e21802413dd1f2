# Caterpillar toric degenerations of conformal block algebras

__all__ = []
