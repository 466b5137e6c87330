import json
import math
from fractions import Fraction as Fr

import numpy as np
import pytest

from pzfield import Params
from pzfield.portrait import PortraitConfig, from_disk, portrait, to_disk
from pzfield.report import analysis_report, dumps, jsonable
from pzfield.verify import run_verification


@pytest.mark.parametrize("params", [
    Params(0, 1, 1), Params(1, 0, -1), Params(0, 2, 0, k=Fr(1, 2)), Params(5, 5, -100),
    Params(-2.5, 1.25, 0.3), Params(0, 0, -9),
])
def test_verification_passes(params):
    checks = run_verification(params, seed=3)
    assert checks and all(c.passed for c in checks), [c.line() for c in checks if not c.passed]


def test_verification_skips_darboux_when_rho_vanishes():
    checks = run_verification(Params(3, 0, 0))
    notes = [c.note for c in checks if c.skipped]
    assert any("RhoZero" in n for n in notes)


def test_jsonable():
    assert jsonable(Fr(1, 4)) == 0.25
    assert jsonable(1 + 2j) == {"re": 1.0, "im": 2.0}
    assert jsonable(3 + 0j) == 3.0
    assert jsonable(float("inf")) is None
    assert jsonable(np.float64("nan")) is None
    with pytest.raises(TypeError):
        jsonable(object())


def test_report_shape():
    report = analysis_report(Params(1, 1, 1))
    assert report["kind"] == "UnstableNode"
    assert [p["kind"] for p in report["infinity"]] == ["Repulsor", "Saddle"]
    fam = report["families"][0]
    assert fam["galois"]["group"] == "MultiplicativeGm"
    assert fam["lienard_residual"] < 1e-8
    assert fam["darboux"]["residuals"]["integrating_factor"] < 1e-9
    text = dumps(report)
    assert json.loads(text)["input"] == {"a": "1", "b": "1", "c": "1", "m": "1", "k": "0", "exact": True}


def test_report_rho_zero_skips_darboux():
    fam = analysis_report(Params(1, 1, 2))["families"][0]
    assert fam["darboux"] == {"skipped": "RhoZero"}
    assert fam["galois"]["group"] == "AdditiveGa"


def test_disk_projection_round_trip():
    for xy in [(0.0, 0.0), (3.0, -4.0), (1e6, 2.0)]:
        u, w = to_disk(*xy)
        assert math.hypot(u, w) < 1
        assert from_disk(u, w) == pytest.approx(xy, rel=1e-9, abs=1e-12)


def test_portrait_is_deterministic_and_bounded():
    config = PortraitConfig(n_seeds=6, t_end=2.0)
    svg1, trajs = portrait(Fr(1), Fr(1), Fr(1), config)
    svg2, _ = portrait(Fr(1), Fr(1), Fr(1), config)
    assert svg1 == svg2
    assert len(trajs) == 6
    for traj in trajs:
        assert traj.times[0] == pytest.approx(-2.0) and traj.times[-1] == pytest.approx(2.0)
        assert np.all(np.diff(traj.times) > 0)
    assert svg1.count("<polyline") == 6
