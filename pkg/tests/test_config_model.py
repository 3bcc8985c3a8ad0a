"""Tests for config/config_model.py and the config loader in main.py."""
import json

import pytest
from pydantic import ValidationError

from algebra.fields import FieldSpec
from cli.commands import EXIT_COMPUTATION
from config.config_model import ConfigModel, FieldConfig, FieldKind, LoggingConfig, VerifyConfig
import main as main_module
from main import load_config, setup_logging


def test_default_config_model():
    cfg = ConfigModel()
    assert cfg.version == "1.0.0"
    assert cfg.field.kind is FieldKind.prime
    assert cfg.field_spec == FieldSpec.prime(65537)
    assert cfg.seed == 0
    assert cfg.saturation_cap == 50
    assert cfg.verify.seeds == [0]


@pytest.mark.parametrize("p", [2, 3, 15])
def test_inadmissible_primes(p):
    with pytest.raises(ValidationError, match="not an admissible prime"):
        FieldConfig(prime=p)


def test_rationals():
    assert FieldConfig(kind="QQ").to_spec() == FieldSpec.rationals()


def test_log_level_is_uppercased():
    assert LoggingConfig(level="debug").level == "DEBUG"
    with pytest.raises(ValidationError):
        LoggingConfig(level="chatty")


def test_verify_limits():
    with pytest.raises(ValidationError):
        VerifyConfig(max_concurrent=0)
    with pytest.raises(ValidationError):
        VerifyConfig(seeds=[])


def test_environment_overrides_file_values(monkeypatch):
    monkeypatch.setenv("AGPOINTS_FIELD__KIND", "QQ")
    monkeypatch.setenv("AGPOINTS_VERIFY__MAX_CONCURRENT", "8")
    cfg = ConfigModel(**{"field": {"kind": "Fp", "prime": 65537}, "verify": {"max_concurrent": 2}})
    assert cfg.field_spec == FieldSpec.rationals()
    assert cfg.verify.max_concurrent == 8


def test_config_roundtrip_json():
    cfg = ConfigModel(random={"seed": 11})
    restored = ConfigModel.model_validate_json(cfg.model_dump_json())
    assert restored.seed == 11


# ── load_config ───────────────────────────────────────────────


def test_missing_file_creates_skeleton(tmp_path):
    path = tmp_path / "config.json"
    cfg = load_config(path)
    assert path.exists()
    assert json.loads(path.read_text())["field"]["prime"] == cfg.field.prime


def test_invalid_values_exit_with_usage_code(tmp_path):
    path = tmp_path / "config.json"
    path.write_text(json.dumps({"field": {"prime": 4}}))
    with pytest.raises(SystemExit) as exc:
        load_config(path)
    assert exc.value.code == 2


def test_unreadable_json_exits(tmp_path):
    path = tmp_path / "config.json"
    path.write_text("{")
    with pytest.raises(SystemExit) as exc:
        load_config(path)
    assert exc.value.code == 2


# ── main ──────────────────────────────────────────────────────


def test_console_only_logging_before_config(tmp_path, monkeypatch):
    monkeypatch.chdir(tmp_path)
    setup_logging()
    assert not (tmp_path / "LOGS").exists()


def test_file_sink_can_be_disabled(tmp_path):
    setup_logging(LoggingConfig(log_dir=tmp_path / "LOGS", file_sink=False))
    assert not (tmp_path / "LOGS").exists()
    setup_logging(LoggingConfig(log_dir=tmp_path / "LOGS"))
    assert (tmp_path / "LOGS").is_dir()
    setup_logging()


def test_unexpected_crash_maps_to_computation_code(monkeypatch):
    def crash(argv, out, config):
        raise RuntimeError("boom")

    monkeypatch.setattr(main_module, "load_config", lambda: ConfigModel(logging={"file_sink": False}))
    monkeypatch.setattr(main_module, "run_command", crash)
    assert main_module.main(["config"]) == EXIT_COMPUTATION
