"""
Unit tests for the asymgauge package.

Exact results are checked against hand-derived values on the named spaces and
against float oracles (scipy's linprog, direction sampling) on random gauges.
Large seeded campaigns are marked slow.
"""
