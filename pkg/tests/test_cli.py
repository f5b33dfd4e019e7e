import io
import json
import tempfile
import unittest
from pathlib import Path

from hecke_afl.cli import build_parser, run


def _run(*argv):
    stdout, stderr = io.StringIO(), io.StringIO()
    code = run(list(argv), stdout=stdout, stderr=stderr)
    return code, stdout.getvalue(), stderr.getvalue()


def _json(*argv):
    code, out, _ = _run(*argv)
    return code, json.loads(out)


class TestParser(unittest.TestCase):
    def test_defaults(self):
        args = build_parser().parse_args(["intersect", "--r", "1", "--m", "0"])
        self.assertEqual((args.p, args.precision, args.seed), (3, 32, 0))
        self.assertEqual(args.format, "json")

    def test_int_list(self):
        args = build_parser().parse_args(["afl-check", "--r-list", "1,3,5"])
        self.assertEqual(args.r_list, [1, 3, 5])

    def test_fl_sample_defaults(self):
        args = build_parser().parse_args(["fl-check"])
        self.assertEqual((args.odd_samples, args.even_samples, args.m_max), (100, 50, 6))


class TestCommands(unittest.TestCase):
    def test_satake(self):
        code, payload = _json("satake", "--family", "f", "--m", "1")
        self.assertEqual(code, 0)
        self.assertEqual(payload["schema"], 1)
        self.assertEqual(payload["satake"], "q*s1 + q")

    def test_bc(self):
        code, payload = _json("bc", "--fprime", "1")
        self.assertEqual(code, 0)
        self.assertEqual(payload["satake"], "q*sigma1")
        self.assertEqual(payload["bc"], "q*s1")

    def test_atomic(self):
        code, payload = _json("atomic", "--n", "2", "--t", "2")
        self.assertEqual(code, 0)
        self.assertEqual(payload["expansion"], "f[2] + 4*f[0]")
        self.assertEqual(payload["m_counts"], {"0": 4, "2": 1})

    def test_orb(self):
        code, payload = _json("orb", "--a", "4", "--b", "3", "--m", "1")
        self.assertEqual(code, 0)
        self.assertEqual(payload["method"], "closed")
        self.assertEqual(payload["match_class"], "nonsplit")
        self.assertEqual(payload["orbit"]["dvalue0_logq"], "1/1")
        self.assertEqual(payload["orbit"]["omega"], -1)

    def test_orb_unnormalized_uses_oracle(self):
        code, payload = _json("orb", "--a", "4", "--b", "1", "--m", "0")
        self.assertEqual(code, 0)
        self.assertEqual(payload["method"], "oracle")

    def test_intersect(self):
        code, payload = _json("intersect", "--r", "1", "--m", "1")
        self.assertEqual(code, 0)
        self.assertEqual(payload["int_value"], "1/1")
        self.assertEqual(payload["degree"], "12/1")

    def test_lattice_count(self):
        code, payload = _json("lattice", "count", "--n", "2", "--t", "2")
        self.assertEqual(code, 0)
        self.assertEqual(payload["m_count"], 4)

    def test_lattice_comm(self):
        code, payload = _json("lattice", "comm", "--n", "2", "--t", "2", "--t2", "0")
        self.assertEqual(code, 0)
        self.assertTrue(payload["pass"])

    def test_afl_check(self):
        code, payload = _json("afl-check", "--r-list", "1,3,5", "--m-max", "4")
        self.assertEqual(code, 0)
        self.assertEqual(payload["kind"], "AFL")
        self.assertEqual(payload["summary"]["failed"], 0)
        self.assertEqual(payload["summary"]["total"], 15)

    def test_fl_and_kernel(self):
        self.assertEqual(_run("fl-check", "--odd-samples", "8", "--even-samples", "4", "--m-max", "2")[0], 0)
        self.assertEqual(_run("kernel-check", "--m-max", "3")[0], 0)
        self.assertEqual(_run("injectivity-check", "--m-max", "4", "--r-bound", "8")[0], 0)
        self.assertEqual(_run("coprime-check", "--q-list", "3,5")[0], 0)


class TestExitCodes(unittest.TestCase):
    def test_usage_errors(self):
        self.assertEqual(_run("--p", "4", "intersect", "--r", "1", "--m", "0")[0], 2)
        self.assertEqual(_run("intersect", "--r", "2", "--m", "0")[0], 2)
        self.assertEqual(_run("satake", "--family", "f")[0], 2)
        self.assertEqual(_run("--precision", "4", "satake", "--family", "f", "--m", "1")[0], 2)
        self.assertEqual(_run("nonsense")[0], 2)
        self.assertEqual(_run("orb", "--a", "1/0", "--b", "3", "--m", "0")[0], 2)
        self.assertEqual(_run("orb", "--a", "__import__('os')", "--b", "3", "--m", "0")[0], 2)

    def test_error_message_on_stderr(self):
        code, out, err = _run("intersect", "--r", "2", "--m", "0")
        self.assertEqual(code, 2)
        self.assertEqual(out, "")
        self.assertTrue(err.startswith("hecke-afl: "))

    def test_budget(self):
        code, _, _ = _run("lattice", "support", "--n", "2", "--t", "2", "--budget", "2")
        self.assertEqual(code, 3)


class TestOutput(unittest.TestCase):
    def test_deterministic(self):
        argv = ("--seed", "5", "afl-check", "--r-list", "1,3", "--m-max", "2")
        self.assertEqual(_run(*argv)[1], _run(*argv)[1])

    def test_out_file(self):
        with tempfile.TemporaryDirectory() as tmp:
            path = Path(tmp) / "reports" / "satake.json"
            code, out, _ = _run("--out", str(path), "satake", "--family", "phi", "--m", "1")
            self.assertEqual(code, 0)
            self.assertEqual(out, "")
            payload = json.loads(path.read_text(encoding="utf-8"))
            self.assertEqual(payload["satake"], "q*s1 + q - 1")

    def test_table_format(self):
        code, out, _ = _run("--format", "table", "lattice", "table", "--n", "2")
        self.assertEqual(code, 0)
        self.assertIn("m_count", out)
        self.assertIn("schema: 1", out)


if __name__ == "__main__":
    unittest.main()
