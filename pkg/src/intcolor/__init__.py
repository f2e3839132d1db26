"""Exact interval and cyclic interval edge colorings of multigraphs."""
