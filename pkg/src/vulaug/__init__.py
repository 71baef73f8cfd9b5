"""Semantic-preserving augmentation for C vulnerability datasets."""

__version__ = "0.1.0"
