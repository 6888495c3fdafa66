import numpy as np
import pytest

from drawjectory.exceptions import (
    InvalidTrimRange,
    MalformedRecord,
    NonMonotoneTime,
    TooFewPoints,
)
from drawjectory.recording import (
    effective_points,
    load_flight_path,
    save_flight_path,
    trim_flight_path,
)

from conftest import circle_rows, make_path, random_path


def test_load_minimal_csv():
    path = load_flight_path("t,x,y,z\n0.0,1,1,1\n0.01,1,1,1.1", "csv")
    assert len(path.points) == 2
    assert path.duration == pytest.approx(0.01)
    assert path.trim_start == 0 and path.trim_end == 1


def test_duplicate_timestamp_rejected():
    csv = "t,x,y,z\n0.0,1,1,1\n0.01,1,1,1\n0.01,1,1,2\n"
    with pytest.raises(NonMonotoneTime):
        load_flight_path(csv, "csv")


def test_decreasing_timestamp_rejected():
    with pytest.raises(NonMonotoneTime):
        load_flight_path("t,x,y,z\n1.0,0,0,0\n0.5,0,0,0", "csv")


def test_circle_roundtrip_identical():
    path = make_path(circle_rows(1000))
    loaded = load_flight_path(save_flight_path(path, "csv"), "csv")
    assert loaded.points == path.points


@pytest.mark.parametrize("fmt", ["csv", "jsonl"])
def test_roundtrip_random_paths(fmt, rng):
    for _ in range(100):
        path = random_path(rng, int(rng.integers(2, 40)))
        loaded = load_flight_path(save_flight_path(path, fmt), fmt)
        for a, b in zip(loaded.points, path.points):
            assert abs(a.t - b.t) <= 1e-12
            assert abs(a.x - b.x) <= 1e-12
            assert abs(a.y - b.y) <= 1e-12
            assert abs(a.z - b.z) <= 1e-12


def test_save_csv_shape():
    path = make_path([(0, 1, 2, 3), (1, 4, 5, 6)])
    text = save_flight_path(path, "csv").decode()
    lines = text.strip().split("\n")
    assert len(lines) == 3
    assert lines[0] == "t,x,y,z"


def test_jsonl_one_object_per_point():
    import json

    path = make_path([(0, 1, 2, 3), (1, 4, 5, 6)])
    lines = save_flight_path(path, "jsonl").decode().strip().split("\n")
    assert len(lines) == 2
    assert json.loads(lines[0]) == {"t": 0.0, "x": 1.0, "y": 2.0, "z": 3.0}


def test_jsonl_ignores_unknown_keys():
    text = (
        '{"t":0,"x":1,"y":1,"z":1,"qx":0,"qy":0,"qz":0,"qw":1}\n'
        '{"t":0.01,"x":1,"y":1,"z":1.1,"note":"pose"}\n'
    )
    path = load_flight_path(text, "jsonl")
    assert len(path.points) == 2
    assert path.points[1].z == 1.1


def test_malformed_field_count():
    with pytest.raises(MalformedRecord) as err:
        load_flight_path("t,x,y,z\n0.0,1,1\n", "csv")
    assert err.value.line_number == 2


def test_malformed_non_numeric():
    with pytest.raises(MalformedRecord):
        load_flight_path("t,x,y,z\n0.0,1,abc,1\n", "csv")


def test_missing_header():
    with pytest.raises(MalformedRecord):
        load_flight_path("0.0,1,1,1\n0.01,1,1,2\n", "csv")


def test_too_few_points():
    with pytest.raises(TooFewPoints):
        load_flight_path("t,x,y,z\n0.0,1,1,1\n", "csv")


def test_trim_identity():
    path = make_path([(i * 0.1, i, 0, 1) for i in range(10)])
    trimmed = trim_flight_path(path, 0, 9)
    assert effective_points(trimmed) == list(path.points)


def test_trim_interior():
    path = make_path([(i * 0.1, i, 0, 1) for i in range(10)])
    trimmed = trim_flight_path(path, 2, 7)
    eff = effective_points(trimmed)
    assert len(eff) == 6
    assert eff[0] is path.points[2]
    assert eff[-1] is path.points[7]
    # original points retained for re-trimming
    assert trimmed.points == path.points


def test_trim_reversed_rejected():
    path = make_path([(i * 0.1, i, 0, 1) for i in range(10)])
    with pytest.raises(InvalidTrimRange):
        trim_flight_path(path, 7, 2)


def test_trim_out_of_range_rejected():
    path = make_path([(i * 0.1, i, 0, 1) for i in range(10)])
    with pytest.raises(InvalidTrimRange):
        trim_flight_path(path, 0, 10)


def test_effective_points_untrimmed():
    path = make_path([(i * 0.1, i, 0, 1) for i in range(5)])
    assert effective_points(path) == list(path.points)


def test_effective_points_slice():
    path = make_path([(i * 0.1, i, 0, 1) for i in range(5)])
    eff = effective_points(trim_flight_path(path, 1, 3))
    assert eff == list(path.points[1:4])


def test_effective_points_length_property(rng):
    for _ in range(50):
        n = int(rng.integers(3, 60))
        path = random_path(rng, n)
        start = int(rng.integers(0, n - 1))
        end = int(rng.integers(start + 1, n))
        eff = effective_points(trim_flight_path(path, start, end))
        assert len(eff) == end - start + 1
        assert len(eff) >= 2
        ts = np.array([p.t for p in eff])
        assert np.all(np.diff(ts) > 0)
