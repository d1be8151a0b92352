"""Package for the wall and flip center predictions of the D-tower."""
