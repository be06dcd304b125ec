"""Exact certification toolkit for a family of Godeaux surfaces.

Everything here is finite and exact: prime-field brute force, integer
lattice arithmetic, Euler-characteristic bookkeeping, bounded Diophantine
enumeration, and a truncated model of a filtered ring of partial
differential operators in two variables.
"""

__version__ = "0.1.0"
