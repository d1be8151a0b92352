"""Package for decorated D-lattices and their special vectors."""
