import random

import pytest

from hessberg.rootsys import build_root_system

RANK_LE_3 = ["A1", "A2", "B2", "G2", "A3", "B3", "C3"]
SMALL = ["A1", "A2", "B2", "G2", "A3"]


@pytest.fixture(autouse=True)
def _isolated_cache(tmp_path, monkeypatch):
    monkeypatch.setenv("HESSBERG_CACHE", str(tmp_path / "cache"))


_systems = {}


def system(label):
    """Shared root system instances so Weyl tables are built once per session."""
    if label not in _systems:
        _systems[label] = build_root_system(label)
    return _systems[label]


def random_reduced_word(rs, length, rng):
    """Random reduced word of the given length by random reduced extensions."""
    from hessberg.errors import InputError
    from hessberg.rootsys import element_from_word

    word = []
    while len(word) < length:
        choices = list(range(rs.rank))
        rng.shuffle(choices)
        for i in choices:
            try:
                element_from_word(rs, word + [i])
            except InputError:
                continue
            word.append(i)
            break
        else:
            raise AssertionError("stuck before reaching the requested length")
    return word


def seeded(seed):
    return random.Random(seed)
