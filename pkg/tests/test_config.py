from __future__ import annotations

import pytest

from tempord.config import Config, load_config
from tempord.errors import ConfigError


@pytest.fixture(autouse=True)
def clean_env(monkeypatch):
    monkeypatch.delenv("TEMPORD_BUDGET", raising=False)
    monkeypatch.delenv("TEMPORD_WORKERS", raising=False)


def test_defaults():
    cfg = load_config()
    assert cfg == Config()
    assert cfg.budget == 10_000_000
    assert cfg.workers == 1
    assert cfg.verify_witness


def test_environment(monkeypatch):
    monkeypatch.setenv("TEMPORD_BUDGET", " 500 ")
    monkeypatch.setenv("TEMPORD_WORKERS", "4")
    cfg = load_config()
    assert (cfg.budget, cfg.workers) == (500, 4)


def test_arguments_override_environment(monkeypatch):
    monkeypatch.setenv("TEMPORD_BUDGET", "500")
    cfg = load_config(budget=7, workers=2, verify_witness=False)
    assert (cfg.budget, cfg.workers, cfg.verify_witness) == (7, 2, False)


def test_bad_environment_value(monkeypatch):
    monkeypatch.setenv("TEMPORD_WORKERS", "many")
    with pytest.raises(ConfigError):
        load_config()


@pytest.mark.parametrize("kwargs", [{"budget": 0}, {"workers": 0}])
def test_non_positive_values(kwargs):
    with pytest.raises(ConfigError):
        load_config(**kwargs)
