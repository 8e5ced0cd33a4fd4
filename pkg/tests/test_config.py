"""
Tests for environment-driven configuration and logging setup
"""
import logging
from fractions import Fraction

import pytest
from src.engine import config
from src.infrastructure.logging_setup import configure_logging
from src.model.errors import ProfileInputError


class TestConfigReader:
    def test_missing_key_uses_default(self, monkeypatch):
        monkeypatch.delenv('DSF_TEST_KEY', raising=False)
        assert config._read('DSF_TEST_KEY', 5, int) == 5

    def test_blank_value_uses_default(self, monkeypatch):
        monkeypatch.setenv('DSF_TEST_KEY', '  ')
        assert config._read('DSF_TEST_KEY', 5, int) == 5

    def test_inline_comment(self, monkeypatch):
        monkeypatch.setenv('DSF_TEST_KEY', '12  # electorate cap')
        assert config._read('DSF_TEST_KEY', 5, int) == 12

    def test_rational(self, monkeypatch):
        monkeypatch.setenv('DSF_TEST_KEY', '1/50')
        assert config._read('DSF_TEST_KEY', Fraction(1, 100), Fraction) == Fraction(1, 50)

    @pytest.mark.parametrize("raw", ['zero', '0', '-3'])
    def test_bad_positive_int_falls_back(self, monkeypatch, caplog, raw):
        monkeypatch.setenv('DSF_TEST_KEY', raw)
        with caplog.at_level(logging.WARNING):
            assert config._read('DSF_TEST_KEY', 20, config._positive_int) == 20
        assert '[Config]' in caplog.text

    @pytest.mark.parametrize("raw", ['-1', str(2 ** 64)])
    def test_out_of_range_seed_falls_back(self, monkeypatch, raw):
        monkeypatch.setenv('DSF_TEST_KEY', raw)
        assert config._read('DSF_TEST_KEY', 7, config._seed) == 7

    def test_check_seed(self):
        assert config.check_seed(0) == 0
        assert config.check_seed(2 ** 64 - 1) == 2 ** 64 - 1
        for bad in (-1, 2 ** 64, True, 2.0, None):
            with pytest.raises(ProfileInputError):
                config.check_seed(bad)

    def test_defaults_are_sane(self):
        assert 0 <= config.DEFAULT_SEED < config.SEED_LIMIT
        assert config.EXACT_CAP >= 2
        assert config.MC_SAMPLES >= 1
        assert config.THREADS >= 1
        assert isinstance(config.EPSILON, Fraction)


class TestLogging:
    def test_single_tagged_handler(self):
        root = configure_logging('info')
        configure_logging('debug')
        tagged = [h for h in root.handlers if getattr(h, '_divisiveness', False)]
        assert len(tagged) == 1
        assert root.level == logging.DEBUG

    def test_unknown_level_falls_back_to_warning(self):
        assert configure_logging('chatty').level == logging.WARNING


if __name__ == "__main__":
    pytest.main([__file__, "-v"])
