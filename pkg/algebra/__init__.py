"""Exact polynomial algebra over QQ and prime fields."""
