import pytest

from scripts.triangulation import PointTable, triangulate


@pytest.fixture
def triangle_table():
    return PointTable.from_coords([(0, 0), (4, 0), (0, 4)])


@pytest.fixture
def square_table():
    return PointTable.from_coords([(0, 0), (4, 0), (4, 4), (0, 4)])


@pytest.fixture
def split_table():
    # (1, 1) est dans le triangle initial
    return PointTable.from_coords([(0, 0), (4, 0), (0, 4), (1, 1)])


@pytest.fixture
def triangle(triangle_table):
    return triangulate(triangle_table)


@pytest.fixture
def square(square_table):
    return triangulate(square_table)


@pytest.fixture
def write_points(tmp_path):
    def _write(coords, name="points.txt"):
        path = tmp_path / name
        path.write_text("".join(f"{x} {y}\n" for x, y in coords), encoding="utf-8")
        return path

    return _write
