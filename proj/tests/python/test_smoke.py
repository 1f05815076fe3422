import json

import pytest

import medkit

PLUS = json.dumps(
    {
        "nodes": [
            {"id": "a", "x": 0, "y": 200},
            {"id": "b", "x": 400, "y": 200},
            {"id": "c", "x": 200, "y": 0},
            {"id": "d", "x": 200, "y": 400},
        ],
        "edges": [{"source": "a", "target": "b"}, {"source": "c", "target": "d"}],
    }
)


@pytest.fixture
def layout():
    return medkit.parse_layout(PLUS)


def test_layout(layout):
    assert layout.node_count == 4
    assert layout.edge_ids == ["a--b", "c--d"]
    assert layout.density == 0.5


def test_crossings(layout):
    assert medkit.avoidable_crossings(layout) == [("a--b", "c--d", 200.0, 200.0, 0.5, 0.5)]


def test_schedule_roundtrip(layout):
    sched = medkit.compute_schedule(layout, medkit.preset("slowlin"))
    assert sched.makespan == 2250.0
    assert sched.starts == {"a--b": [0.0], "c--d": [150.0]}
    passed, kind, _ = medkit.validate_schedule(layout, sched)
    assert passed and kind == "none"
    back = medkit.parse_schedule(sched.to_json(), layout)
    assert medkit.frame_svg(layout, back, 900.0) == medkit.frame_svg(layout, sched, 900.0)
    fast = medkit.compute_schedule(layout, medkit.preset("fastlin"))
    assert medkit.relative_slowdown(sched, fast) == pytest.approx(0.8)


def test_easing():
    assert medkit.ease("ease", 0.0) == 0.0
    assert medkit.ease("ease", 1.0) == 1.0
    assert medkit.ease_inverse("ease", 0.5) == pytest.approx(0.29330066851866195, abs=1e-6)
    with pytest.raises(medkit.ParseError):
        medkit.ease("bounce", 0.5)


def test_config_errors():
    cfg = medkit.Config()
    cfg.easing = "ease"
    assert cfg.easing == "cubic-bezier:0.25,0.1,0.25,1"
    with pytest.raises(medkit.UsageError):
        medkit.preset("medium")
    with pytest.raises(medkit.MedError):
        medkit.parse_layout('{"nodes":[{"id":"a","x":0,"y":0}],"edges":[{"source":"a","target":"a"}]}')


def test_trial_and_score(layout):
    trial = json.loads(medkit.make_trial(layout, "T1", 3))
    assert trial == json.loads(medkit.make_trial(layout, "T1", 3))
    assert medkit.score_answer("T2", 4, 5) == 0.5


def test_cli(layout, tmp_path):
    path = tmp_path / "plus.json"
    path.write_text(PLUS)
    code, out, _ = medkit.run_cli(["validate", str(path)])
    assert code == 0
    assert out == "ok: 4 nodes, 2 edges, density 0.5\n"


def test_error_classes():
    assert issubclass(medkit.ValidationError, medkit.MedError)
    with pytest.raises(medkit.ValidationError):
        medkit.parse_layout('{"nodes":[{"id":"a","x":0,"y":0}],"edges":[{"source":"a","target":"a"}]}')
    with pytest.raises(medkit.RangeError):
        medkit.ease("ease", 2.0)
