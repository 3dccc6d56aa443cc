"""Coherence for star-autonomous categories: arrow terms, Brauer graphs, Gentzen nets."""

import sys

# Gentzen nets and their denotations nest deeply; the default limit is too tight.
if sys.getrecursionlimit() < 20000:
    sys.setrecursionlimit(20000)

__version__ = "0.1.0"
