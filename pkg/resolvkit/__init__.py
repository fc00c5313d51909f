"""Exact resolvability parameters of graphs and their certificates."""
