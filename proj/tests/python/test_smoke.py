import os
from fractions import Fraction
from pathlib import Path

import pytest

import soccuts

CORPUS = Path(os.environ.get("SOCCUTS_CORPUS", Path(__file__).resolve().parents[2] / "instances"))

T_PRIME = {
    "schema_version": 1,
    "name": "t_prime",
    "blocks": [{"type": "soc", "A": [[0, 0], [1, -1], [1, 1]], "b": [-2, 0, 0]}],
}


def texts(report):
    return [c["text"] for c in report["cuts"]]


def test_f_gamma_columns():
    gamma = [0, Fraction(1, 2), Fraction(1, 2)]
    assert soccuts.f_gamma(gamma, 1, [0, 1, 1]) == 1
    assert soccuts.f_gamma(gamma, 1, [0, -1, 1]) == 0
    assert soccuts.f_gamma(gamma, 1, [-2, 0, 0]) == 1
    assert soccuts.f_gamma(["1/3", "1/2", "1"], 2, ["1/2", "1/2", "0"]) == 1


def test_classify_gamma():
    assert soccuts.classify_gamma([0, 1, 1], 1) == "GammaJ"
    assert soccuts.classify_gamma([0, 1, 1], 2) == "Inadmissible"


def test_inadmissible_gamma_raises():
    with pytest.raises(soccuts.SoccutsError) as info:
        soccuts.f_gamma([0, 1, 1], 2, [1, 0, 0])
    assert info.value.exit_code == 3


def test_check_function_orthant_pair():
    report = soccuts.check_function([0, 1, 1], 1, samples=200, orthant=True)
    assert report["all_pass"]
    witness = report["orthant_monotonicity"]["first_counterexample"]
    assert (witness["f_u"], witness["f_v"]) == ("1", "2")


def test_cuts_on_dict_instance():
    report = soccuts.cuts(T_PRIME)
    assert texts(report) == ["x1 >= 1", "x2 >= 1"]
    assert report["all_valid"]
    assert report["exit_code"] == 0


def test_certify_band():
    report = soccuts.certify(CORPUS / "band.json")
    cert = report["certificate"]
    assert cert["result"] == "Empty"
    assert len(cert["cuts"]) == 2


def test_face_and_hull():
    report = soccuts.face(CORPUS / "parabola_halfplane.json")
    cut = report["certificate"]["cuts"][0]
    assert cut["text"] == "x1 >= 3"
    assert cut["pathway"]["alpha"] == "7/3"
    hull = soccuts.hull(CORPUS / "disc_3_4.json", box=(-3, 3, -3, 3))
    assert len(hull["hull"]["inequalities"]) == 4


def test_malformed_instance():
    with pytest.raises(soccuts.SoccutsError) as info:
        soccuts.cuts({"schema_version": 1, "name": "bad", "blocks": [{"type": "soc"}]})
    assert info.value.kind == "malformed-input"
    assert info.value.exit_code == 2
