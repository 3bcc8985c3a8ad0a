"""Invariants and classification of finite algebras and zero-dimensional schemes."""
