"""This module contains the EmbeddingVariant class."""
from enum import Enum


class EmbeddingVariant(Enum):
    """EmbeddingVariant class which contains the two embeddings into II_{2,26}.

    Attributes
    ----------
    D: EmbeddingVariant
        Orthogonal complement D_{26-N}
    E8D: EmbeddingVariant
        Orthogonal complement E_8 + D_{18-N}
    """

    D = "D"
    E8D = "E8D"
