import logging

from sidonlab.config import Settings


def test_log_level_names(monkeypatch, tmp_path):
    monkeypatch.setenv("LOG_DIR", str(tmp_path / "logs"))
    assert Settings(LOG_LEVEL="debug").LOG_LEVEL == logging.DEBUG
    assert Settings(LOG_LEVEL="nonsense").LOG_LEVEL == logging.INFO
    assert (tmp_path / "logs").is_dir()


def test_workers_resolution(monkeypatch):
    settings = Settings(SIDON_WORKERS=3)
    assert settings.resolved_workers(5) == 5
    assert settings.resolved_workers(None) == 3
    assert Settings(SIDON_WORKERS=0).resolved_workers(0) >= 1


def test_env_override(monkeypatch):
    monkeypatch.setenv("SIDON_WORKERS", "2")
    monkeypatch.setenv("ENUMERATOR_TYPE", "serial")
    settings = Settings()
    assert settings.SIDON_WORKERS == 2
    assert settings.to_dict()["ENUMERATOR_TYPE"] == "serial"
