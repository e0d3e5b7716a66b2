"""
gridbond - Exact total domination and total bondage numbers of grid graphs.
"""

__version__ = "0.1.0"
