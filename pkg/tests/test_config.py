import pytest

from limitgen.config import HarnessConfig
from limitgen.pkg.config import load_chain, load_config, validate_config


def test_defaults_are_valid():
    config = load_config()
    assert config == HarnessConfig()
    assert validate_config(config) == []
    assert config.pool_depth_for(1) == 3


def test_overrides_skip_none():
    config = load_config({"max_size": 20, "pool_depth": None, "horizon": 12})
    assert config.max_size == 20
    assert config.pool_depth is None
    assert config.horizon == 12
    assert config.to_dict()["horizon"] == 12
    assert config.updated(pool_depth=5).pool_depth_for(1) == 5


def test_unknown_keys_rejected():
    with pytest.raises(ValueError):
        load_config({"bogus": 1})


def test_validation_errors():
    config = HarnessConfig(horizon=0, pool_depth=0, external_timeout=0, max_column=1)
    errors = validate_config(config)
    assert "horizon must be >= 1" in errors
    assert "pool_depth must be >= 1" in errors
    assert "external_timeout must be > 0 seconds" in errors
    assert "max_column cannot be smaller than max_blocks" in errors


@pytest.mark.parametrize(
    "content",
    [
        "- just a list\n",
        "chain: d\nnoise: -1\nlevels: [d0.col]\n",
        "chain: d\nnoise: 1\nlevels: []\n",
        "noise: 1\nlevels: [d0.col]\n",
        "chain: d\nnoise: 1\nlevels: [columns.col]\n",
    ],
)
def test_bad_chain_files(tmp_path, collections_dir, content):
    for name in ("d0.col", "columns.col"):
        (tmp_path / name).write_text((collections_dir / name).read_text(encoding="utf-8"), encoding="utf-8")
    path = tmp_path / "chain.yaml"
    path.write_text(content, encoding="utf-8")
    with pytest.raises(ValueError):
        load_chain(path)


def test_chain_paths_are_relative_to_the_file(collections_dir):
    chain_file = load_chain(collections_dir / "chain_d.yaml")
    assert [level.name for level in chain_file.levels] == ["d0", "d1", "d2"]
    assert chain_file.path == collections_dir / "chain_d.yaml"
