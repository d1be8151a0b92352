import pytest

from hkltower.enums.disc_label import DiscLabel
from hkltower.enums.embedding_variant import EmbeddingVariant
from hkltower.managers.check_manager import CheckManager
from hkltower.managers.embedding_manager import EmbeddingManager


def test_embedding_manager_is_a_singleton():
    assert EmbeddingManager() is EmbeddingManager()


def test_embedding_manager_caches():
    manager = EmbeddingManager()
    first = manager.embedding(19, EmbeddingVariant.D)
    assert manager.embedding(19, EmbeddingVariant.D) is first
    assert manager.coefficients(19, EmbeddingVariant.D)[DiscLabel.xi] == 14


def test_check_manager_lists_every_suite():
    assert CheckManager().suite_names == [
        "lattice",
        "dtower",
        "rank",
        "mu",
        "relations",
        "curves",
        "compatibility",
        "restriction",
        "walls",
        "audit",
        "shift",
    ]


def test_check_manager_runs_named_suites():
    manager = CheckManager()
    manager.clear()
    assert manager.run(["relations", "curves", "shift"])
    assert set(manager.results) == {"relations", "curves", "shift"}
    assert manager.summary_lines()[-1] == "3/3 suites passed"


def test_check_manager_rejects_unknown_suite():
    with pytest.raises(KeyError):
        CheckManager().run(["nonsense"])


@pytest.mark.slow
def test_every_suite_passes():
    manager = CheckManager()
    manager.clear()
    assert manager.run()
