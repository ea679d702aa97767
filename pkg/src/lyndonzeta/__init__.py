"""Exact computations around k-ary Lyndon words, Apostol-Bernoulli numbers
and Lerch-type zeta functions."""

__version__ = "0.1.0"
