import json

import pytest

from kronecker_coslice.core_category import n_coords
from kronecker_coslice.window import DEFAULT_WINDOW, WINDOW_ENV, WindowConfig, ar_quiver_dot


def test_default_sizes():
    w = DEFAULT_WINDOW
    assert len(w.indecomposables()) == 210
    assert len(w.corpus()) == 310
    assert list(w.n_range()) == list(range(-6, 8))


def test_seeded_corpus():
    assert WindowConfig(seed=3).random_sums() == WindowConfig(seed=3).random_sums()
    assert WindowConfig(seed=3).random_sums() != WindowConfig(seed=4).random_sums()


def test_contains():
    w = DEFAULT_WINDOW
    assert all(w.contains(x) for x in w.indecomposables())
    assert all(n_coords(x) is not None for x in w.non_regular())


@pytest.mark.parametrize("field", ["max_shift", "max_pp_index", "max_pi_index", "max_reg_length", "max_p"])
def test_bounds_positive(field):
    with pytest.raises(ValueError):
        WindowConfig(**{field: 0})


def test_json(tmp_path, monkeypatch):
    w = WindowConfig(max_shift=2, seed=9)
    assert WindowConfig.from_json(w.to_json()) == w
    path = tmp_path / "w.json"
    path.write_text(json.dumps(w.to_json()))
    assert WindowConfig.load(path) == w
    monkeypatch.setenv(WINDOW_ENV, str(path))
    assert WindowConfig.load() == w
    with pytest.raises(ValueError):
        WindowConfig.from_json({"bogus": 1})


def test_dot_edges():
    dot = ar_quiver_dot(WindowConfig(max_shift=1, max_pp_index=2, max_pi_index=2, max_reg_length=1))
    assert dot.count("->") == len([line for line in dot.splitlines() if "->" in line])
    assert '"P1" -> "P2"' in dot
