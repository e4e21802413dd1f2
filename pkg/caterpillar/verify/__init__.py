# Independent checks of the structural claims at desk scale

__all__ = []
