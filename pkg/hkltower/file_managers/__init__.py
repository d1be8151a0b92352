"""Package for hkltower report rendering support."""
