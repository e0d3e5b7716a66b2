"""
gridbond test suite.
"""
