"""Asymptotic dimension toolkit for one-relator groups, RAAGs, graphs of groups and HNN extensions."""

__version__ = "0.1.0"
