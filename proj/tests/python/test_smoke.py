import json

import pytest

import hocolim


@pytest.fixture(scope="module")
def workspace():
    return hocolim.builtin_workspace()


def test_builtin_workspace_is_canonical(workspace):
    assert hocolim.canonical(workspace) == workspace
    doc = json.loads(workspace)
    assert set(doc) == {"complexes", "categories", "diagrams", "transformations"}
    assert "z2" in doc["complexes"]


def test_homology(workspace):
    report = hocolim.homology(workspace, "z2")
    assert report["pass"]
    assert report["info"]["H0"] == "Z/2"
    with pytest.raises(hocolim.WorkspaceError):
        hocolim.homology(workspace, "no_such_complex")


def test_replace_direct(workspace):
    report, output = hocolim.replace(workspace, "torsion_arrow", mode="direct")
    assert report["pass"]
    out = json.loads(output)
    assert "torsion_arrow_replacement" in out["diagrams"]
    assert "torsion_arrow_augmentation" in out["transformations"]


def test_replace_bar(workspace):
    report, _ = hocolim.replace(
        workspace, "trivial_module", mode="bar", truncation=4
    )
    assert report["pass"]
    assert report["info"]["safe degree"] == "2"


def test_wcolim(workspace):
    report = hocolim.wcolim(workspace, "trivial_weight", "trivial_module")
    assert report["pass"]
    assert report["info"]["homology"] == "H0 = Z"


def test_verify_counterexample(workspace):
    report = hocolim.verify(workspace, suite="counterexample")
    assert report["pass"]
    assert len(report["checks"]) == 5
    assert all(check["pass"] for check in report["checks"])
