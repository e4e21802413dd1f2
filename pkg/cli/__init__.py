# Command-line front end for the caterpillar library

__all__ = []
