import importlib.util
from pathlib import Path

import pytest

from novikov_groebner.settings import Settings, SettingsError, load_settings

NO_FILE = "does-not-exist.env"


def test_defaults():
    settings = load_settings({}, env_file=NO_FILE)

    assert settings == Settings()
    assert settings.sample_grid == ("-2", "-1", "-1/2", "0", "1/2", "1", "2")


def test_environment_values():
    environ = {
        "NOVIKOV_BUDGET": "5000",
        "NOVIKOV_SEED": "7",
        "NOVIKOV_LOG_LEVEL": "debug",
        "NOVIKOV_SAMPLE_GRID": "0, 1/3 ,-4",
    }
    settings = load_settings(environ, env_file=NO_FILE)

    assert settings.budget == 5000
    assert settings.seed == 7
    assert settings.log_level == "DEBUG"
    assert settings.sample_grid == ("0", "1/3", "-4")
    assert settings.catalog_budget == Settings().catalog_budget


def test_overrides_win_and_none_falls_through():
    environ = {"NOVIKOV_BUDGET": "5000", "NOVIKOV_SEED": "7"}
    settings = load_settings(environ, env_file=NO_FILE, budget=12, seed=None)

    assert settings.budget == 12
    assert settings.seed == 7


def test_bad_values_name_the_key():
    cases = [
        {"NOVIKOV_BUDGET": "lots"},
        {"NOVIKOV_BUDGET": "0"},
        {"NOVIKOV_LOG_LEVEL": "chatty"},
        {"NOVIKOV_SAMPLE_GRID": "1, x"},
        {"NOVIKOV_SAMPLE_GRID": " , "},
    ]

    for environ in cases:
        (key,) = environ

        with pytest.raises(SettingsError, match=key):
            load_settings(environ, env_file=NO_FILE)

    with pytest.raises(SettingsError):
        load_settings({}, env_file=NO_FILE, colour="blue")


def test_env_file_below_the_environment(tmp_path: Path):
    if importlib.util.find_spec("dotenv") is None:
        return

    env_file = tmp_path / ".env"
    env_file.write_text("NOVIKOV_SEED=11\nNOVIKOV_BUDGET=300\n", encoding="utf-8")
    settings = load_settings({"NOVIKOV_BUDGET": "400"}, env_file=env_file)

    assert settings.seed == 11
    assert settings.budget == 400


if __name__ == "__main__":
    import manual_tests.log_setup as log_setup

    logger = log_setup.get_logger(__name__, "logs/check_settings.log")
    log_setup.run_checks(globals(), logger)
