"""gcenter: exact computation of graded centers of spherical G-fusion
categories, their crossings, G-braidings, twists and modular data."""

__version__ = "0.1.0"
