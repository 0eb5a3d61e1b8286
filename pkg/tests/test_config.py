import json

from src.config import settings
from src.config.settings import ConfigManager, get_config, load_config, validate_config


def test_defaults():
    config = get_config()
    assert config.compute.dimension_cap == 24
    assert config.compute.allow_long is False
    assert config.output.format == "json"
    assert config.sampling.rng_seed == 20210101
    assert validate_config()


def test_file_override(tmp_path):
    path = tmp_path / "config.json"
    path.write_text(json.dumps({"compute": {"max_workers": 2, "block_bits": 4}, "output": {"format": "csv"}}))
    config = load_config(str(path), env_file="")
    assert config.compute.max_workers == 2
    assert config.compute.block_bits == 4
    assert config.compute.dimension_cap == 24
    assert config.output.format == "csv"


def test_environment_override(monkeypatch, tmp_path):
    path = tmp_path / "config.json"
    path.write_text(json.dumps({"compute": {"max_workers": 2}}))
    monkeypatch.setenv("SIMPLEX_WORKERS", "6")
    monkeypatch.setenv("SIMPLEX_ALLOW_LONG", "yes")
    monkeypatch.setenv("SIMPLEX_OUTPUT_FORMAT", "CSV")
    config = load_config(str(path), env_file="")
    assert config.compute.max_workers == 6
    assert config.compute.allow_long is True
    assert config.output.format == "csv"


def test_dotenv_file(monkeypatch, tmp_path):
    env_file = tmp_path / ".env"
    env_file.write_text("SIMPLEX_FLOAT_DIGITS=9\n")
    monkeypatch.setenv("SIMPLEX_FLOAT_DIGITS", "0")
    monkeypatch.delenv("SIMPLEX_FLOAT_DIGITS")
    config = load_config(env_file=str(env_file))
    assert config.output.float_digits == 9
    monkeypatch.delenv("SIMPLEX_FLOAT_DIGITS")


def test_malformed_environment_is_ignored(monkeypatch):
    monkeypatch.setenv("SIMPLEX_WORKERS", "many")
    config = load_config(env_file="")
    assert config.compute.max_workers == 4


def test_missing_file_keeps_defaults(tmp_path):
    config = load_config(str(tmp_path / "absent.json"), env_file="")
    assert config.compute.max_workers == 4


def test_validation_failures():
    config = get_config()
    config.output.format = "yaml"
    assert not validate_config()
    config.output.format = "json"
    config.compute.block_bits = 30
    assert not validate_config()


def test_save_round_trip(tmp_path):
    path = tmp_path / "saved.json"
    manager = ConfigManager(env_file="")
    manager.config.compute.max_workers = 3
    manager.save_config(str(path))
    reloaded = ConfigManager(str(path), env_file="")
    assert reloaded.config.compute.max_workers == 3
    assert reloaded.config == manager.config


def test_load_config_replaces_global(tmp_path):
    before = settings.config_manager
    load_config(env_file="")
    assert settings.config_manager is not before
