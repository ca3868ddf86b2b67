"""Catalan words avoiding an ordered pair of relations: enumeration, descent
generating functions, bijections and cross-verification."""

__version__ = "0.1.0"
