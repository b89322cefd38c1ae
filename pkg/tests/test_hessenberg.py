from itertools import product

import pytest

from hessberg.errors import InputError, ResourceError
from hessberg.hessenberg import (HessenbergValidationError, brute_force_hessenberg_spaces,
                                 codim_one_chain, enumerate_hessenberg_spaces, from_hessenberg_function,
                                 full_space, minimal_space, space_from_json, space_to_json,
                                 to_hessenberg_function, type_a_positions, type_a_root,
                                 validate_hessenberg)
from hessberg.rootsys import build_root_system

from conftest import system


@pytest.mark.parametrize("label", ["A1", "A2", "A3", "B2", "G2", "B3", "C3", "A1xA2"])
def test_enumeration_matches_brute_force(label):
    rs = system(label)
    fast = {h.root_set for h in enumerate_hessenberg_spaces(rs)}
    slow = set(brute_force_hessenberg_spaces(rs))
    assert fast == slow


@pytest.mark.parametrize("label,count", [("A2", 2), ("A3", 5), ("B2", 3), ("G2", 5), ("B3", 10)])
def test_counts(label, count):
    assert len(enumerate_hessenberg_spaces(system(label))) == count


def hessenberg_functions(n):
    for h in product(range(1, n + 1), repeat=n):
        if all(h[i] >= i + 2 for i in range(n - 1)) and h[-1] == n and list(h) == sorted(h):
            yield list(h)


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_hfun_round_trip(n):
    rs = system(f"A{n - 1}")
    spaces = set()
    for h in hessenberg_functions(n):
        hs = from_hessenberg_function(n, h, rs)
        validate_hessenberg(rs, hs.root_set)
        assert to_hessenberg_function(hs) == h
        spaces.add(hs.root_set)
    # Hessenberg functions and root-set spaces are in bijection (Catalan many)
    catalan = {2: 1, 3: 2, 4: 5, 5: 14}[n]
    assert len(spaces) == catalan


def test_peterson_and_full():
    rs = system("A2")
    assert from_hessenberg_function(3, [2, 3]).root_set == minimal_space(rs).root_set
    assert from_hessenberg_function(3, [3, 3, 3]).root_set == full_space(rs).root_set
    assert type_a_root(3, 2, 4) == (0, 1, 1) and type_a_positions((0, 1, 1)) == (2, 4)


def test_validation_lists_every_violation():
    rs = system("A3")
    with pytest.raises(HessenbergValidationError) as err:
        validate_hessenberg(rs, [(1, 0, 0), (0, 1, 0), (1, 1, 1), (2, 0, 0)])
    v = err.value.violations
    assert any("a3" in s for s in v)
    assert any("not a positive root" in s for s in v)
    assert any("lower-closed" in s for s in v)


@pytest.mark.parametrize("h", [[1, 3], [3, 2], [2, 4], [2]])
def test_bad_hessenberg_functions(h):
    with pytest.raises(InputError):
        from_hessenberg_function(3, h)


def test_codim_chain_reaches_minimal():
    rs = system("B3")
    chain = codim_one_chain(full_space(rs))
    assert len(chain) == rs.num_positive_roots - rs.rank
    assert chain[-1][0].is_minimal
    for (space, _), d in zip(chain, range(rs.num_positive_roots - 1, 0, -1)):
        assert space.dimension == d


def test_json_round_trip():
    rs = system("G2")
    for h in enumerate_hessenberg_spaces(rs):
        assert space_from_json(space_to_json(h)).root_set == h.root_set
    with pytest.raises(InputError):
        space_from_json({"type": "A2", "roots": [[1, 0]], "hfun": [2, 3]})


def test_rank_bound():
    with pytest.raises(ResourceError):
        enumerate_hessenberg_spaces(build_root_system("A5"))
