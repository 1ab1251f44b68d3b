"""Frequency-hopping sequence sets via greedy Gilbert-Varshamov hopping cyclic codes."""
