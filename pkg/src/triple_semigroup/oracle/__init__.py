"""Brute-force ground truth"""

from .bruteforce import build_table, frobenius_bruteforce, genus_bruteforce, johnson_direct

__all__ = ["build_table", "frobenius_bruteforce", "genus_bruteforce", "johnson_direct"]
