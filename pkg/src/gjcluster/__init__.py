"""Goulden-Jackson cluster method engine."""
