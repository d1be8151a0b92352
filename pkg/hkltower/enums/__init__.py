"""Package for hkltower enums."""
