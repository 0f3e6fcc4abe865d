"""Spin-chain concurrence and geometric-phase toolkit."""

__version__ = "0.1.0"
