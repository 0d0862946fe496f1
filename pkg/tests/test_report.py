import json

import pytest

from analysis import SplitExp, distance_profile, spectrum_from_values
from reporting import build_report, render_table
from reporting.report import number, round_sig


def test_round_sig():
    assert round_sig(8105.4885, 6) == 8105.49
    assert round_sig(-1e-20, 6) == -1e-20
    assert str(round_sig(-0.0, 6)) == "0.0"


def test_number_falls_back_to_split_text():
    assert number(SplitExp(2.0, 1.0), 3) == 4.72
    assert number(SplitExp(152.11, 900.0), 6) == "152.11 + e^900"


def test_report_for_generated_family(c60):
    doc = build_report(c60, family="c60_truncated_icosahedron")
    assert doc.graph.family == "c60_truncated_icosahedron"
    assert doc.spectrum.n_plus == 18
    assert doc.spectrum.n_zero == 0
    assert doc.dee.split.startswith("152.1")
    assert doc.dee.split.endswith("+ e^278")
    assert doc.bounds.chain_holds
    assert json.loads(doc.to_json())["profile"]["distance_degree_regular"] == 278


def test_overflowing_spectrum_reports_text(k1):
    # a made-up spectrum big enough to overflow exp; the profile is only used for bounds
    profile = distance_profile(k1)
    doc = build_report(k1, profile=profile, spectrum=spectrum_from_values([800.0]))
    assert doc.dee.overflow
    assert doc.dee.value == "0 + e^800"


def test_near_zero_eigenvalues_printed_as_zero(c6):
    doc = build_report(c6)
    assert doc.spectrum.eigenvalues.count(0.0) == 2
    assert all(str(x) != "-0.0" for x in doc.spectrum.eigenvalues)


def test_table_marks_chain(tree5):
    text = render_table(build_report(tree5, family="chemical_tree_fig1"))
    assert "chemical_tree_fig1" in text
    assert "regular lower" in text
    assert text.endswith("[OK] bound chain holds\n")
