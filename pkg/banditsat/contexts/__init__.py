"""
Bounded contexts for banditsat.

Each context has a single responsibility and communicates with other contexts
through the names exported from its package.
"""
