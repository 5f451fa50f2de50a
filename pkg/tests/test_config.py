import os
import unittest
from unittest import mock

from swde.config import TRUNCATION_ENV, SWDEConfig, parse_truncation
from swde.errors import InputError, InvalidTruncation
from swde.utils import update_nested_dict


class ConfigTest(unittest.TestCase):
    def test_defaults(self):
        with mock.patch.dict(os.environ, {}, clear=True):
            config = SWDEConfig()
        self.assertEqual(config.truncation(), 16)
        self.assertEqual(config.max_shift(), 64)
        self.assertEqual(config.batch_workers(), 4)

    def test_environment(self):
        with mock.patch.dict(os.environ, {TRUNCATION_ENV: "24"}):
            self.assertEqual(SWDEConfig().truncation(), 24)

    def test_invalid_environment(self):
        for raw in ("abc", "1", "3", "-16", "4.5"):
            with self.subTest(raw=raw), mock.patch.dict(os.environ, {TRUNCATION_ENV: raw}):
                with self.assertRaises(InvalidTruncation) as ctx:
                    SWDEConfig()
                self.assertIsInstance(ctx.exception, InputError)
                self.assertIn(TRUNCATION_ENV, str(ctx.exception))

    def test_parse_truncation(self):
        self.assertEqual(parse_truncation("4"), 4)
        self.assertEqual(parse_truncation(" 20 "), 20)
        with self.assertRaises(InvalidTruncation):
            parse_truncation("", "--trunc")

    def test_overrides(self):
        config = SWDEConfig({"batch.workers": 2, "normalization.max_shift": None})
        self.assertEqual(config.batch_workers(), 2)
        self.assertEqual(config.max_shift(), 64)

    def test_update_nested_dict(self):
        cfg: dict = {}
        update_nested_dict(cfg, ["a", "b"], 1)
        update_nested_dict(cfg, ["a", "c"], None)
        self.assertEqual(cfg, {"a": {"b": 1}})
