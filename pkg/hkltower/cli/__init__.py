"""Package for the hkltower command line."""
