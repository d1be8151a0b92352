"""Package for the Picard rank of the D-tower quotients."""
