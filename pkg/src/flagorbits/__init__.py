"""Borel orbits on products of cominuscule flag varieties: root combinatorics and exact enumeration."""

__version__ = "0.1.0"
