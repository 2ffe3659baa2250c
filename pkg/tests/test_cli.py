import io
import json

import pytest

from poincare_orbits import wire
from poincare_orbits.cli import main
from poincare_orbits.coadjoint import DualVector, casimir
from poincare_orbits.group import GroupElement, KinematicParams


def run(argv):
    out = io.StringIO()
    code = main(argv, out=out)
    return code, out.getvalue()


class TestTransform:
    def test_coadjoint_example(self):
        code, out = run(["--c", "1", "transform", "--kind", "coadjoint",
                         "--element", '{"v":0,"tau":0,"x":1}',
                         "--point", '{"k":0,"e":0,"p":0,"f":1}'])
        assert code == 0
        assert json.loads(out) == {"k": -0.5, "e": -1.0, "p": 0.0, "f": 1.0}
        assert out.strip() == '{"k":-0.5,"e":-1.0,"p":0.0,"f":1.0}'

    def test_spacetime_identity_echo(self):
        code, out = run(["transform", "--kind", "spacetime", "--element", '{"v":0,"tau":0,"x":0}',
                         "--point", '{"t":1.5,"q":-2.25}'])
        assert code == 0
        assert json.loads(out) == {"t": 1.5, "q": -2.25}

    def test_phase_requires_nonzero_force(self):
        args = ["transform", "--kind", "phase", "--element", '{"v":0,"tau":0,"x":0}',
                "--point", '{"p":1,"q":1}']
        assert run(args + ["--f", "0"])[0] == 2
        assert run(args)[0] == 2
        code, out = run(args + ["--f", "2"])
        assert code == 0 and json.loads(out) == {"p": 1.0, "q": 1.0}

    def test_group_and_extended(self):
        code, out = run(["transform", "--kind", "group", "--element", '{"v":0.6,"tau":0,"x":0}',
                         "--point", '{"v":0,"tau":1,"x":0}'])
        assert code == 0
        assert json.loads(out) == pytest.approx({"v": 0.6, "tau": 1.25, "x": 0.75})
        code, out = run(["transform", "--kind", "group", "--element", '{"v":0,"tau":0,"x":2,"zeta":0}',
                         "--point", '{"v":0,"tau":3,"x":0,"zeta":0}'])
        assert json.loads(out) == {"v": 0.0, "tau": 3.0, "x": 2.0, "zeta": 3.0}

    @pytest.mark.parametrize("element,point", [
        ('{"v":0,"tau":0}', '{"t":0,"q":0}'),          # missing field
        ('{"v":0,"tau":0,"x":0}', '{"t":0,"q":"a"}'),  # wrong type
        ('not json', '{"t":0,"q":0}'),
        ('{"v":2,"tau":0,"x":0}', '{"t":0,"q":0}'),    # |v| >= c
    ])
    def test_schema_and_range_errors(self, element, point):
        code, _ = run(["transform", "--kind", "spacetime", "--element", element, "--point", point])
        assert code == 2

    def test_galilean_flag_after_subcommand(self):
        code, out = run(["transform", "--c", "inf", "--kind", "spacetime",
                         "--element", '{"v":5,"tau":0,"x":0}', "--point", '{"t":2,"q":1}'])
        assert code == 0 and json.loads(out) == {"t": 2.0, "q": 11.0}


class TestOrbit:
    def test_origin_row(self):
        code, out = run(["orbit", "--f", "1", "--casimir", "0", "--p-range", "0", "--q-range", "0"])
        assert code == 0
        assert out == "k,e,p,f,t,q\n0,0,0,1,0,0\n"

    def test_worked_row(self):
        code, out = run(["--c", "1", "orbit", "--f", "1", "--casimir", "-1.5",
                         "--p-range", "3", "--q-range", "2"])
        assert out.splitlines()[1] == "1,-2,3,1,3,2"

    def test_rows_self_validate(self):
        code, out = run(["orbit", "--f", "-0.7", "--casimir", "2.5",
                         "--p-range=-3:3:7", "--q-range=-2:2:5"])
        assert code == 0
        lines = out.splitlines()
        assert lines[0] == "k,e,p,f,t,q"
        assert len(lines) == 1 + 35
        for line in lines[1:]:
            k, e, p, f, t, q = map(float, line.split(","))
            assert abs(casimir(DualVector(k, e, p, f), KinematicParams(1.0)).casimir - 2.5) <= 1e-12
            assert t == pytest.approx(p / f) and q == pytest.approx(-e / f)

    def test_full_precision(self):
        code, out = run(["orbit", "--f", "3", "--casimir", "0.1", "--p-range", "0.1", "--q-range", "0"])
        k = out.splitlines()[1].split(",")[0]
        assert float(k) == 0.1 + 0.1 * 0.1 / 6
        assert len(k.replace("0.", "", 1).lstrip("0")) <= 17

    @pytest.mark.parametrize("extra", [["--f", "0", "--p-range", "0"], ["--f", "1", "--p-range", "1:2"],
                                       ["--f", "1", "--p-range", "0:1:0"]])
    def test_errors(self, extra):
        code, _ = run(["orbit", "--casimir", "0", "--q-range", "0"] + extra)
        assert code == 2

    def test_output_file(self, tmp_path):
        path = tmp_path / "orbit.csv"
        code, out = run(["orbit", "--f", "1", "--casimir", "0", "--p-range", "0", "--q-range", "0",
                         "--output", str(path)])
        assert code == 0 and out == ""
        assert path.read_bytes() == b"k,e,p,f,t,q\n0,0,0,1,0,0\n"


class TestContract:
    def test_spacetime_slope(self):
        code, out = run(["--seed", "42", "contract", "--op", "spacetime",
                         "--c-grid", "1e2,1e3,1e4,1e5,1e6"])
        report = json.loads(out)
        assert code == 0
        assert -2.1 <= report["fitted_slope"] <= -1.9
        devs = report["deviations"]
        assert all(b < a for a, b in zip(devs, devs[1:]))

    def test_zero_boosts(self):
        code, out = run(["contract", "--op", "phase", "--zero-boosts"])
        report = json.loads(out)
        assert report["fitted_slope"] is None and report["degenerate"]

    @pytest.mark.parametrize("grid", ["1e3,1e2", "1e2", "abc", "0.5,1e2"])
    def test_bad_grid(self, grid):
        assert run(["contract", "--op", "compose", "--c-grid", grid])[0] == 2


class TestVerify:
    def test_small_run_passes_and_lists_properties(self):
        code, out = run(["--cases", "50", "verify"])
        assert code == 0
        lines = [json.loads(line) for line in out.splitlines()]
        names = [line["name"] for line in lines]
        assert names == sorted(names)
        assert {"name", "cases", "max_deviation", "tolerance", "status"} <= set(lines[0])

    def test_impossible_tolerance_fails(self):
        assert run(["--cases", "50", "--rel-tol", "1e-30", "verify"])[0] == 1

    @pytest.mark.parametrize("flags", [["--cases", "0"], ["--rel-tol", "0"], ["--c", "-1"],
                                       ["--c", "abc"], ["--seed", "-3"]])
    def test_invalid_config(self, flags):
        assert run(flags + ["verify"])[0] == 2

    def test_help_exits_zero(self, capsys):
        assert run(["--help"])[0] == 0

    def test_deterministic(self):
        assert run(["--cases", "40", "--seed", "7", "verify"]) == run(["--cases", "40", "--seed", "7", "verify"])


class TestWire:
    @pytest.mark.parametrize("obj", [GroupElement(0.1, -2.0, 3.5), DualVector(1.0, 2.0, 3.0, 4.0)])
    def test_round_trip(self, obj):
        schema = "group" if isinstance(obj, GroupElement) else "dual"
        assert wire.loads(schema, wire.dumps(obj)) == obj

    def test_negative_zero_normalised(self):
        assert wire.format_number(-0.0) == "0"
        assert wire.dumps(GroupElement(-0.0, 0.0, 0.0)) == '{"v":0.0,"tau":0.0,"x":0.0}'

    def test_rejects_extra_fields(self):
        with pytest.raises(wire.SchemaError):
            wire.from_dict("phase", {"p": 1, "q": 2, "r": 3})

    def test_rejects_bool(self):
        with pytest.raises(wire.SchemaError):
            wire.from_dict("phase", {"p": True, "q": 2})
