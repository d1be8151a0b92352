"""Package for hkltower dictionary structures.

These TypedDicts describe the JSON payloads written by the command line.
"""
