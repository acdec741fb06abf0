# Copyright 2026 The aqnn Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""End-to-end checks of the aqnn command-line tool.

Usage: test_cli.py <aqnn binary> <specs dir> <configs dir>
"""

import csv
import json
import os
import subprocess
import sys
import tempfile
import unittest

AQNN = SPECS = CONFIGS = None


def run(*args, env=None):
    full_env = dict(os.environ)
    full_env.update(env or {})
    proc = subprocess.run([AQNN, *args], capture_output=True, text=True, env=full_env)
    return proc.returncode, proc.stdout, proc.stderr


def spec(name):
    return os.path.join(SPECS, name)


class CliTest(unittest.TestCase):
    def setUp(self):
        self.tmp = tempfile.TemporaryDirectory()
        self.dir = self.tmp.name

    def tearDown(self):
        self.tmp.cleanup()

    def write(self, name, doc):
        path = os.path.join(self.dir, name)
        with open(path, "w") as f:
            json.dump(doc, f) if not isinstance(doc, str) else f.write(doc)
        return path

    def psi2(self):
        return self.write("psi2.json", {"dim": 2, "re": [[0.5, 0.5], [0.5, 0.5]], "im": [[0, 0], [0, 0]]})

    def test_apply_full_dephasing(self):
        code, out, _ = run("apply", "--spec", spec("ideal_n2_full.json"), "--state", self.psi2())
        self.assertEqual(code, 0)
        doc = json.loads(out)
        self.assertAlmostEqual(doc["c_l1"], 0.0, places=12)
        self.assertAlmostEqual(doc["state"]["re"][0][1], 0.0, places=12)

    def test_apply_half_coherence(self):
        code, out, _ = run("apply", "--spec", spec("ideal_n2_half.json"), "--state", self.psi2())
        self.assertEqual(code, 0)
        self.assertAlmostEqual(json.loads(out)["c_l1"], 0.5, places=12)

    def test_apply_faulty_leak(self):
        zero = self.write("zero.json", {"dim": 2, "re": [[1, 0], [0, 0]]})
        code, out, _ = run("apply", "--spec", spec("faulty_n2.json"), "--state", zero)
        self.assertEqual(code, 0)
        re = json.loads(out)["state"]["re"]
        self.assertAlmostEqual(re[0][0], 0.8, places=12)
        self.assertAlmostEqual(re[1][1], 0.2, places=12)

    def test_apply_writes_out_file(self):
        path = os.path.join(self.dir, "out.json")
        code, out, _ = run("apply", "--spec", spec("ideal_n2_half.json"), "--state", self.psi2(),
                           "--iterations", "2", "--out", path)
        self.assertEqual(code, 0)
        self.assertEqual(out, "")
        with open(path) as f:
            self.assertAlmostEqual(json.load(f)["c_l1"], 0.25, places=12)

    def test_iterate_trajectory(self):
        code, out, _ = run("iterate", "--spec", spec("ideal_n2_half.json"), "--state", self.psi2(),
                           "--iterations", "3")
        self.assertEqual(code, 0)
        values = [p["c_l1"] for p in json.loads(out)["trajectory"]]
        for got, want in zip(values, [1.0, 0.5, 0.25, 0.125]):
            self.assertAlmostEqual(got, want, places=12)

    def test_exit_codes(self):
        bad = self.write("bad.json", "{not json")
        self.assertEqual(run("apply", "--spec", bad, "--state", self.psi2())[0], 2)
        self.assertEqual(run("apply", "--spec", spec("ideal_n3.json"), "--state", self.psi2())[0], 3)
        self.assertEqual(run("apply", "--spec", spec("not_cptp_n2.json"), "--state", self.psi2())[0], 4)
        self.assertEqual(run("cptp-check", "--spec", spec("not_cptp_n2.json"))[0], 4)
        self.assertEqual(run("classify", "--spec", spec("not_cptp_n2.json"))[0], 4)
        self.assertEqual(run("apply", "--spec", spec("ideal_n2_half.json"))[0], 2)
        self.assertEqual(run()[0], 2)

    def test_choi_and_cptp(self):
        code, out, _ = run("choi", "--spec", spec("ideal_n2_half.json"))
        self.assertEqual(code, 0)
        m = json.loads(out)["matrix"]
        self.assertEqual((m["rows"], m["cols"]), (4, 4))
        self.assertAlmostEqual(m["re"][0][3], 0.5, places=12)
        code, out, _ = run("cptp-check", "--spec", spec("lambda_n3.json"))
        self.assertEqual(code, 0)
        self.assertTrue(json.loads(out)["cptp"])

    def test_classify(self):
        code, out, _ = run("classify", "--spec", spec("ideal_n3.json"))
        self.assertEqual(code, 0)
        self.assertTrue(json.loads(out)["is_gio"])
        code, out, _ = run("classify", "--spec", spec("faulty_n3.json"))
        doc = json.loads(out)
        self.assertFalse(doc["is_gio"])
        self.assertIsNotNone(doc["sio_certificate"])
        code, out, _ = run("classify", "--spec", spec("lambda_n3.json"), "--budget", "2000")
        self.assertEqual(code, 0)
        self.assertTrue(json.loads(out)["is_ncg"])

    def test_dilate(self):
        code, out, _ = run("dilate", "--spec", spec("ideal_n3.json"), "--method", "gio")
        self.assertEqual(code, 0)
        self.assertLess(json.loads(out)["residual"], 1e-9)
        code, out, _ = run("dilate", "--spec", spec("faulty_n2_boundary.json"), "--method", "sio")
        self.assertEqual(code, 0)
        self.assertLess(json.loads(out)["residual"], 1e-9)
        code, _, err = run("dilate", "--spec", spec("faulty_n2.json"), "--method", "sio")
        self.assertEqual(code, 5)
        self.assertIn("generic", err)
        code, out, _ = run("dilate", "--spec", spec("lambda_n3.json"), "--method", "generic")
        self.assertEqual(code, 0)
        self.assertLess(json.loads(out)["residual"], 1e-9)
        self.assertEqual(run("dilate", "--spec", spec("faulty_n2.json"), "--method", "gio")[0], 5)

    def test_diamond(self):
        code, out, _ = run("diamond", "--spec", spec("ideal_n3.json"), "--spec", spec("faulty_n3.json"),
                           "--method", "interior_point")
        self.assertEqual(code, 0)
        doc = json.loads(out)
        self.assertAlmostEqual(doc["value"], 0.3, delta=1e-6)
        self.assertLessEqual(doc["lower_bound"], doc["value"] + 1e-7)
        code, out, _ = run("diamond", "--spec", spec("ideal_n3.json"), "--spec", spec("faulty_n3.json"))
        self.assertEqual(json.loads(out)["method"], "analytic")
        self.assertEqual(run("diamond", "--spec", spec("ideal_n3.json"))[0], 2)

    def experiment(self, name, extra=None, env=None):
        with open(os.path.join(CONFIGS, name + ".json")) as f:
            config = json.load(f)
        config["parameters"].update(extra or {})
        csv_path = os.path.join(self.dir, name + ".csv")
        code, out, err = run("experiment", "--config", self.write(name + ".json", config),
                             "--out", csv_path, env=env)
        self.assertEqual(code, 0, err)
        with open(csv_path) as f:
            return json.loads(out), list(csv.DictReader(f)), csv_path

    def test_fig2_curve(self):
        summary, rows, _ = self.experiment("fig2_depth_curve")
        self.assertEqual(len(rows), 200)
        self.assertTrue(summary["all_agree"])
        self.assertTrue(summary["monotone_non_increasing"])
        spot = [r for r in rows if float(r["D"]) == 49.5]
        self.assertEqual(spot[0]["simulated_depth"], "14")
        self.assertEqual(rows[-1]["simulated_depth"], "1")

    def test_experiments_are_deterministic_across_thread_counts(self):
        _, _, one = self.experiment("prop3_diamond_sweep", {"trials": 20}, env={"AQNN_THREADS": "1"})
        with open(one) as f:
            first = f.read()
        _, _, four = self.experiment("prop3_diamond_sweep", {"trials": 20}, env={"AQNN_THREADS": "4"})
        with open(four) as f:
            self.assertEqual(first, f.read())

    def test_prop3_sweep(self):
        summary, rows, _ = self.experiment("prop3_diamond_sweep", {"trials": 20})
        self.assertEqual(len(rows), 9)
        for r in rows:
            self.assertLess(abs(float(r["sdp_minus_eps"])), 1e-5)

    def test_gamma_independence(self):
        summary, rows, _ = self.experiment("gamma_independence")
        self.assertEqual(len(rows), 30)
        self.assertLess(summary["max_abs_deviation"], 1e-5)

    def test_classify_family_without_lambda_is_sio(self):
        summary, rows, _ = self.experiment("classify_family", {"lambda_grid": [0.0]})
        for r in rows:
            self.assertEqual(r["sio_certified"], "true")

    def test_cp_region_scan(self):
        summary, rows, _ = self.experiment("cp_region_scan")
        self.assertEqual(len(rows), 11 * 3 * 2 * 2)
        self.assertEqual(summary["failed_rows"], 0)

    def test_config_errors(self):
        for doc in ({"parameters": {}}, {"experiment": "nope", "parameters": {}},
                    {"experiment": "fig2_depth_curve", "parameters": {"eta": 2.0}},
                    {"experiment": "fig2_depth_curve", "parameters": {"N": 1}},
                    {"experiment": "prop3_diamond_sweep", "parameters": {"eps_grid": []}}):
            path = self.write("config.json", doc)
            code, _, _ = run("experiment", "--config", path, "--out", os.path.join(self.dir, "x.csv"))
            self.assertEqual(code, 2, doc)

    def test_row_failures_are_recorded(self):
        summary, rows, _ = self.experiment("classify_family", {"eps_grid": [0.1], "gamma_grid": [0.05],
                                                               "lambda_grid": [0.05]})
        self.assertEqual(summary["failed_rows"], 1)
        self.assertIn("NotCPTP", rows[0]["error"])


if __name__ == "__main__":
    AQNN, SPECS, CONFIGS = sys.argv[1:4]
    unittest.main(argv=sys.argv[:1] + sys.argv[4:], verbosity=2)
