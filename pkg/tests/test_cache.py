import json

import pytest

from matchjack import cache
from matchjack.symfunc import JACKS, jack_table


@pytest.fixture
def fresh_cache(tmp_path, jack_cache):
    cache.configure(tmp_path)
    yield tmp_path
    cache.configure(jack_cache)


def test_encode_decode_round_trip():
    table = jack_table(4)
    data = json.loads(json.dumps(cache.encode_jacks(4, table)))
    assert cache.decode_jacks(4, data) == table


def test_tampered_payload_is_a_miss():
    data = cache.encode_jacks(3, jack_table(3))
    data["jacks"][0][1][0][1] = ["7"]
    assert cache.decode_jacks(3, data) is None


def test_version_and_degree_mismatch_are_misses():
    data = cache.encode_jacks(3, jack_table(3))
    assert cache.decode_jacks(4, data) is None
    stale = dict(data, version=cache.VERSION + 1)
    assert cache.decode_jacks(3, stale) is None


def test_save_and_load(fresh_cache):
    table = jack_table(4)
    cache.save_jacks(4, table)
    files = sorted(p.name for p in fresh_cache.iterdir())
    assert files == ["jack_4.json"]
    assert cache.load_jacks(4) == table


def test_corrupt_file_is_ignored(fresh_cache):
    (fresh_cache / "jack_3.json").write_text("{not json")
    assert cache.load_jacks(3) is None


def test_disabled_cache_writes_nothing(tmp_path, jack_cache):
    cache.configure(enabled=False)
    try:
        assert cache.cache_dir() is None
        cache.save_jacks(3, jack_table(3))
        assert cache.load_jacks(3) is None
    finally:
        cache.configure(jack_cache)


def test_env_var_sets_directory(monkeypatch, tmp_path, jack_cache):
    monkeypatch.setenv(cache.ENV_VAR, str(tmp_path))
    cache.configure()
    try:
        assert cache.cache_dir() == tmp_path
    finally:
        cache.configure(jack_cache)


def test_cold_and_warm_agree(fresh_cache):
    JACKS.clear()
    cold = {k: dict(v) for k, v in jack_table(5).items()}
    assert (fresh_cache / "jack_5.json").exists()
    JACKS.clear()
    warm = jack_table(5)
    assert warm == cold
