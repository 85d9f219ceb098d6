import pytest

from fillingrec.core.settings import THREADS_ENV, reset_settings


@pytest.fixture(autouse=True)
def fresh_settings(monkeypatch):
    """每个测试使用一份新的配置，且不受外部 FILLINGS_THREADS 影响"""
    monkeypatch.delenv(THREADS_ENV, raising=False)
    reset_settings()
    yield
    reset_settings()
