"""This module contains the EmbeddingManager class."""
import logging

from hkltower.borcherds.embedding import Embedding, embed_complement
from hkltower.borcherds.heegner import heegner_coefficients
from hkltower.enums.disc_label import DiscLabel
from hkltower.enums.embedding_variant import EmbeddingVariant

logger = logging.getLogger(__name__)


class EmbeddingManager:
    """EmbeddingManager class.

    Holds every validated embedding and its Heegner coefficients, so each
    (N, variant) is glued and root counted once per process.

    Attributes
    ----------
    _embeddings: dict[tuple[int, EmbeddingVariant], Embedding]
        Validated embeddings
    _coefficients: dict[tuple[int, EmbeddingVariant], dict[DiscLabel, int]]
        Computed Heegner coefficients

    Methods
    -------
    __new__(cls) -> EmbeddingManager
        Check if the singleton already exists, return the instance
    embedding(self, n, variant) -> Embedding
        The validated embedding
    coefficients(self, n, variant) -> dict[DiscLabel, int]
        The computed Heegner coefficients
    clear(self)
        Forget every cached result
    """

    def __new__(cls) -> "EmbeddingManager":
        """Create a singleton object.

        If the singleton already exists returns the previous object
        """
        if not hasattr(cls, "instance"):
            cls.instance = super(EmbeddingManager, cls).__new__(cls)
            cls.instance._ready = False
        return cls.instance

    def __init__(self) -> None:
        """Set up the caches the first time only."""
        if self._ready:
            return
        self._embeddings: dict[tuple[int, EmbeddingVariant], Embedding] = {}
        self._coefficients: dict[
            tuple[int, EmbeddingVariant], dict[DiscLabel, int]
        ] = {}
        self._ready = True

    def embedding(self, n: int, variant: EmbeddingVariant) -> Embedding:
        """Get the validated embedding of Λ_N for a variant."""
        key = (n, EmbeddingVariant(variant))
        if key not in self._embeddings:
            logger.debug("gluing the %s embedding at N=%d", key[1].value, n)
            self._embeddings[key] = embed_complement(*key)
        return self._embeddings[key]

    def coefficients(self, n: int, variant: EmbeddingVariant) -> dict[DiscLabel, int]:
        """Get the computed Heegner coefficients for a variant."""
        key = (n, EmbeddingVariant(variant))
        if key not in self._coefficients:
            self._coefficients[key] = heegner_coefficients(self.embedding(*key))
        return dict(self._coefficients[key])

    def clear(self) -> None:
        """Forget every cached embedding and coefficient."""
        self._embeddings.clear()
        self._coefficients.clear()
