"""Package for the Borcherds and Gritsenko relations.

The relations are assembled from root counts in saturations inside two
embeddings of the D-lattice into II_{2,26}.
"""
