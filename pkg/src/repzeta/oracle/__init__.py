"""Brute-force ground truth over small finite rings."""
