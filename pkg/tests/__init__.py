"""
banditsat test suite.
"""
