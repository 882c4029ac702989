"""Command-line interface: spec parsing, report rendering, exit codes."""

import json

import pytest

from elindep.cli import main, parse_spec, render
from elindep.errors import InputError


def write_spec(tmp_path, doc, name="spec.json"):
    path = tmp_path / name
    path.write_text(json.dumps(doc))
    return str(path)


CERTIFY_EXP = {
    "version": 1,
    "task": "certify",
    "functions": [{"type": "builtin", "name": "exp"}],
    "points": ["1", "2", "1/2"],
}


class TestParseSpec:
    def test_round_trip(self):
        spec = parse_spec(json.dumps(CERTIFY_EXP))
        again = parse_spec(render(spec))
        assert render(again) == render(spec)

    def test_unknown_field_path(self):
        doc = {
            "version": 1,
            "task": "certify",
            "functions": [{"type": "builtin", "name": "exp", "oops": 1}],
            "points": ["1"],
        }
        with pytest.raises(InputError, match=r"\$\.functions\[0\]\.oops: unknown field"):
            parse_spec(json.dumps(doc))

    def test_version_mismatch(self):
        doc = dict(CERTIFY_EXP, version=99)
        with pytest.raises(InputError, match=r"\$\.version"):
            parse_spec(json.dumps(doc))

    def test_unknown_task(self):
        doc = dict(CERTIFY_EXP, task="frobnicate")
        with pytest.raises(InputError, match=r"\$\.task"):
            parse_spec(json.dumps(doc))

    def test_not_json(self):
        with pytest.raises(InputError, match="not valid JSON"):
            parse_spec("{nope")

    def test_bad_hypergeometric_parameters(self):
        doc = {
            "version": 1,
            "task": "certify_hyp",
            "functions": [{"type": "hypergeometric", "upper": [], "lower": ["-1"]}],
            "points": ["1"],
        }
        with pytest.raises(InputError, match="lower parameters outside"):
            parse_spec(json.dumps(doc))

    def test_missing_points(self):
        doc = {
            "version": 1,
            "task": "certify",
            "functions": [{"type": "builtin", "name": "exp"}],
        }
        with pytest.raises(InputError, match=r"\$\.points"):
            parse_spec(json.dumps(doc))

    def test_hyp_task_requires_hyp_functions(self):
        doc = {
            "version": 1,
            "task": "certify_hyp",
            "functions": [{"type": "builtin", "name": "exp"}],
            "points": ["1"],
        }
        with pytest.raises(InputError, match="hypergeometric"):
            parse_spec(json.dumps(doc))

    def test_ode_function(self):
        doc = {
            "version": 1,
            "task": "singularities",
            "functions": [{
                "type": "ode",
                "operator": "(1)*∂^1 + (-1)",
                "initial": ["1"],
                "coeff_bound": "1",
                "name": "myexp",
            }],
        }
        spec = parse_spec(json.dumps(doc))
        assert spec.functions[0].kind == "ode"


class TestMain:
    def test_certify_text(self, tmp_path, capsys):
        path = write_spec(tmp_path, CERTIFY_EXP)
        code = main(["certify", "--spec", path])
        out = capsys.readouterr().out
        assert code == 0
        assert "CertifiedIndependent" in out

    def test_certify_json(self, tmp_path, capsys):
        path = write_spec(tmp_path, CERTIFY_EXP)
        code = main(["certify", "--spec", path, "--format", "json"])
        assert code == 0
        report = json.loads(capsys.readouterr().out)
        assert report["version"] == 1
        assert report["certificate"]["verdict"] == "CertifiedIndependent"
        assert report["certificate"]["caveat"] == "unless two of them are algebraic"

    def test_singularities(self, tmp_path, capsys):
        doc = {
            "version": 1,
            "task": "singularities",
            "functions": [
                {"type": "builtin", "name": "J0"},
                {"type": "builtin", "name": "exp"},
            ],
        }
        path = write_spec(tmp_path, doc)
        code = main(["singularities", "--spec", path, "--format", "json"])
        assert code == 0
        report = json.loads(capsys.readouterr().out)
        polys = [r["root_set"]["poly"] for r in report["results"]]
        assert polys[0] in ([1, 0, 1], [-1, 0, -1])
        assert polys[1] in ([-1, 1], [1, -1])

    def test_transform(self, tmp_path, capsys):
        doc = {
            "version": 1,
            "task": "transform",
            "functions": [{"type": "builtin", "name": "exp"}],
        }
        path = write_spec(tmp_path, doc)
        code = main(["transform", "--spec", path, "--format", "json"])
        assert code == 0
        report = json.loads(capsys.readouterr().out)
        assert report["results"][0]["operator_text"] == "(1 - z)*∂^1 + (-1)"

    def test_eval(self, tmp_path, capsys):
        doc = {
            "version": 1,
            "task": "eval",
            "functions": [{"type": "builtin", "name": "exp"}],
            "points": ["1"],
        }
        path = write_spec(tmp_path, doc)
        code = main(["eval", "--spec", path, "--digits", "30", "--format", "json"])
        assert code == 0
        report = json.loads(capsys.readouterr().out)
        value = report["results"][0]["value"]
        assert value["re"].startswith("2.71828182845904523536")

    def test_certify_si(self, tmp_path, capsys):
        doc = {
            "version": 1,
            "task": "certify_si",
            "pairs": [["1", "2"], ["3", "4"]],
        }
        path = write_spec(tmp_path, doc)
        code = main(["certify-si", "--spec", path, "--format", "json"])
        assert code == 0
        report = json.loads(capsys.readouterr().out)
        assert report["certificate"]["verdict"] == "CertifiedIndependent"

    def test_certify_hyp(self, tmp_path, capsys):
        doc = {
            "version": 1,
            "task": "certify_hyp",
            "functions": [
                {"type": "hypergeometric", "upper": [], "lower": ["1"]},
                {"type": "hypergeometric", "upper": [], "lower": ["1", "1"]},
            ],
            "points": ["1/2", "1"],
        }
        path = write_spec(tmp_path, doc)
        code = main(["certify-hyp", "--spec", path, "--format", "json"])
        assert code == 0
        report = json.loads(capsys.readouterr().out)
        assert report["certificate"]["verdict"] == "CertifiedIndependent"

    def test_falsify_negative_control(self, tmp_path, capsys):
        doc = dict(CERTIFY_EXP, task="falsify", points=["1", "2"])
        path = write_spec(tmp_path, doc)
        code = main(["falsify", "--spec", path, "--digits", "40",
                     "--coeff-bound", "1000", "--format", "json"])
        assert code == 0
        report = json.loads(capsys.readouterr().out)
        rel = report["relation_report"]
        assert rel["excluded"] and not rel["found"]

    def test_deterministic_output(self, tmp_path, capsys):
        path = write_spec(tmp_path, CERTIFY_EXP)
        main(["certify", "--spec", path, "--format", "json"])
        first = capsys.readouterr().out
        main(["certify", "--spec", path, "--format", "json"])
        second = capsys.readouterr().out
        assert first == second


class TestExitCodes:
    def test_missing_file(self, capsys):
        code = main(["certify", "--spec", "/nonexistent/spec.json"])
        assert code == 1
        assert "input error" in capsys.readouterr().err

    def test_bad_spec(self, tmp_path, capsys):
        path = write_spec(tmp_path, {"version": 1, "task": "bogus"})
        code = main(["certify", "--spec", path])
        assert code == 1

    def test_task_subcommand_mismatch(self, tmp_path, capsys):
        path = write_spec(tmp_path, CERTIFY_EXP)
        code = main(["eval", "--spec", path])
        assert code == 1
        assert "does not match" in capsys.readouterr().err

    def test_precision_cap(self, tmp_path, capsys):
        # two digits cannot separate found from excluded at bound 10^12
        doc = dict(CERTIFY_EXP, task="falsify", points=["1", "2"])
        path = write_spec(tmp_path, doc)
        code = main(["falsify", "--spec", path, "--digits", "2",
                     "--coeff-bound", str(10**12)])
        assert code == 3
        assert "precision" in capsys.readouterr().err

    def test_demo_runs_clean(self, capsys):
        code = main(["demo", "--digits", "25", "--coeff-bound", "50",
                     "--format", "json"])
        assert code == 0
        report = json.loads(capsys.readouterr().out)
        names = [e["name"] for e in report["demos"]]
        assert len(names) == len(set(names)) >= 10
        for entry in report["demos"]:
            rel = entry.get("relation_report")
            if rel:
                assert not rel["contradiction"]
