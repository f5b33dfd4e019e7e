import json
import logging
import tempfile
import unittest
from pathlib import Path

from hecke_afl.logging_utils import AsyncTimedRotatingFileHandler, LoggingUtils, LogTagging, LogType


def _flush_root():
    for handler in logging.getLogger().handlers:
        if isinstance(handler, AsyncTimedRotatingFileHandler):
            handler.flush_queue()
        handler.flush()


class TestLogTagging(unittest.TestCase):
    def test_kwargs(self):
        tags = LogTagging({"component": "lattice"})
        self.assertEqual(tags.get_log_kwargs(), {"component": "lattice"})
        self.assertEqual(
            tags.get_log_kwargs(LogType.ENUMERATION),
            {"log_type": "enumeration", "component": "lattice"},
        )
        self.assertEqual(LogTagging().get_log_kwargs(LogType.CLI), {"log_type": "cli"})


class TestLoggingUtils(unittest.TestCase):
    def setUp(self):
        self.root = logging.getLogger()
        self.saved_handlers = list(self.root.handlers)
        self.tmp = tempfile.TemporaryDirectory()

    def tearDown(self):
        for handler in list(self.root.handlers):
            if handler not in self.saved_handlers:
                self.root.removeHandler(handler)
                handler.close()
        self.tmp.cleanup()

    def _records(self, name):
        _flush_root()
        lines = (Path(self.tmp.name) / name).read_text(encoding="utf-8").splitlines()
        return [json.loads(line) for line in lines if line.strip()]

    def test_json_file_records(self):
        utils = LoggingUtils(
            log_file="run.log",
            log_dir=self.tmp.name,
            log_level="debug",
            binding_dict={"command": "afl-check", "p": 3},
        )
        utils.get_logger().info("cases checked", total=24, **LogTagging().get_log_kwargs(LogType.VERIFICATION))
        records = self._records("run.log")
        record = next(r for r in records if r["msg"] == "cases checked")
        self.assertEqual(record["total"], 24)
        self.assertEqual(record["command"], "afl-check")
        self.assertEqual(record["log_type"], "verification")
        self.assertEqual(record["level"], "info")

    def test_level_filters(self):
        utils = LoggingUtils(log_file="quiet.log", log_dir=self.tmp.name, log_level="warning")
        logger = utils.get_logger()
        logger.info("hidden")
        logger.warning("shown")
        messages = [r["msg"] for r in self._records("quiet.log")]
        self.assertIn("shown", messages)
        self.assertNotIn("hidden", messages)

    def test_bindings_replace_previous_run(self):
        LoggingUtils(log_file="bind.log", log_dir=self.tmp.name, binding_dict={"seed": 0, "r": 5})
        utils = LoggingUtils(log_file="bind.log", log_dir=self.tmp.name, binding_dict={"seed": 1})
        utils.get_logger().info("second run")
        record = next(r for r in self._records("bind.log") if r["msg"] == "second run")
        self.assertNotIn("r", record)
        self.assertEqual(record["seed"], 1)

    def test_same_file_attached_once(self):
        for _ in range(3):
            LoggingUtils(log_file="once.log", log_dir=self.tmp.name)
        target = str(Path(self.tmp.name) / "once.log")
        attached = [h for h in self.root.handlers if getattr(h, "baseFilename", None) == target]
        self.assertEqual(len(attached), 1)

    def test_key_value_format(self):
        utils = LoggingUtils(log_file="kv.log", log_dir=self.tmp.name, json_formatter=False)
        utils.get_logger().info("plain", total=3)
        _flush_root()
        text = (Path(self.tmp.name) / "kv.log").read_text(encoding="utf-8")
        self.assertIn("msg='plain'", text)
        self.assertIn("total=3", text)

    def test_level_mapping(self):
        utils = LoggingUtils(log_level=logging.ERROR)
        self.assertEqual(utils.binding_dict["min_log_level"], "ERROR")
        self.assertEqual(self.root.level, logging.ERROR)


if __name__ == "__main__":
    unittest.main()
