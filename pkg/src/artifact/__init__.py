"""Magical nilpotent orbits of semisimple Lie algebras: root data, real-form
classification, explicit Lie models and the structural tables of each case."""

__version__ = "0.1.0"
