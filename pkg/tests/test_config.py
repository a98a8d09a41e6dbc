"""Tests for environment-driven configuration."""

import os
import unittest
from unittest import mock

import pytz

from deutsch_paths.common import config, formatting


class TestEnvInt(unittest.TestCase):
    def test_unset_uses_default(self):
        with mock.patch.dict(os.environ, {}, clear=True):
            self.assertEqual(config._env_int("DEUTSCH_PATHS_TRUNC", 16), 16)

    def test_integer_override(self):
        with mock.patch.dict(os.environ, {"DEUTSCH_PATHS_TRUNC": "24"}):
            self.assertEqual(config._env_int("DEUTSCH_PATHS_TRUNC", 16), 24)

    def test_garbage_falls_back(self):
        for raw in ("sixteen", "", "2.5", "0", "-3"):
            with mock.patch.dict(os.environ, {"DEUTSCH_PATHS_TRUNC": raw}):
                with self.assertLogs(config.__name__, level="WARNING"):
                    self.assertEqual(config._env_int("DEUTSCH_PATHS_TRUNC", 16), 16, raw)


class TestTimezone(unittest.TestCase):
    def test_known_zone(self):
        self.assertEqual(formatting._timezone("Australia/Sydney").zone, "Australia/Sydney")

    def test_unknown_zone_falls_back_to_utc(self):
        with self.assertLogs(formatting.__name__, level="WARNING"):
            self.assertIs(formatting._timezone("Mars/Olympus"), pytz.utc)


if __name__ == "__main__":
    unittest.main()
