from __future__ import annotations

import json

import pytest

from linearr import generators as gen
from linearr.arrangement import Arrangement, ArrangementError, WeakCombinatorics
from linearr.kernel import ProjPoint, collinear, incident, meet
from linearr.supersolvable import is_supersolvable


def test_generic_is_seeded_and_generic():
    assert gen.generic_arrangement(3, 5).weak_combinatorics[2] == 3
    for seed in range(5):
        assert gen.generic_arrangement(6, seed).weak_combinatorics == WeakCombinatorics(6, {2: 15})
    assert gen.generic_arrangement(7, 4).lines == gen.generic_arrangement(7, 4).lines
    assert gen.generic_arrangement(7, 4).lines != gen.generic_arrangement(7, 5).lines


def test_published_lines():
    L, P = gen.paper_L(), gen.pappus_P()
    assert len(L) == len(P) == 6
    assert L.weak_combinatorics == P.weak_combinatorics == WeakCombinatorics(6, {2: 15})
    assert P == Arrangement([(5, 4, -44), (1, 1, -9), (5, -3, -57), (5, 1, -61), (5, -2, -68), (1, -1, -13)])


def test_pappus_points_and_span_line():
    P = gen.pappus_P()
    for x, y in gen.PAPPUS_POINTS["top"] + gen.PAPPUS_POINTS["bottom"]:
        assert ProjPoint(x, y, 1) in P.multiplicities
    s = gen.pappus_span_line()
    assert s not in P
    on = [p for p in P.singular_points if incident(p, s)]
    assert len(on) == 3
    assert collinear(*on)


def test_paper_L_has_a_collinear_triple_off_the_arrangement():
    L = gen.paper_L()
    a, b, c = ProjPoint(0, -2, 1), ProjPoint(0, 2, 1), ProjPoint(0, 9, 1)
    assert all(L.multiplicities.get(p) == 2 for p in (a, b, c))
    assert collinear(a, b, c)


def test_fermat_families():
    F3 = gen.fermat(3)
    assert F3.weak_combinatorics == WeakCombinatorics(9, {3: 12})
    for n in (3, 4, 5):
        W = gen.fermat_extended(n).weak_combinatorics
        assert W == WeakCombinatorics(3 * n + 2, {2: 2 * n, 3: n * n, n + 1: 2, n + 2: 1})
    assert gen.fermat(2).weak_combinatorics == gen.boroczky(6).weak_combinatorics


def test_near_pencil():
    A = gen.near_pencil(6)
    assert A.weak_combinatorics == WeakCombinatorics(6, {5: 1, 2: 5})


@pytest.mark.parametrize("n", range(6, 25))
def test_boroczky_triple_points(n):
    A = gen.boroczky(n)
    assert len(A) == n
    W = A.weak_combinatorics
    assert W.max_multiplicity <= 3
    assert W[3] == n * (n - 3) // 6 + 1
    per_line = [sum(1 for p in ps if A.multiplicities[p] == 3) for ps in A.points_by_line]
    s = (n - 3) // 2
    assert min(per_line) >= s
    if n >= 8:
        assert max(per_line) == min(per_line) + 1


def test_boroczky_small_cases():
    assert gen.boroczky(12).weak_combinatorics[3] == 19
    assert gen.boroczky(9).weak_combinatorics == WeakCombinatorics(9, {3: 10, 2: 6})
    assert is_supersolvable(gen.boroczky(6)) is not None


def test_reflection_arrangements(klein_arr, wiman_arr):
    assert len(klein_arr) == 21 and klein_arr.weak_combinatorics == WeakCombinatorics(21, {3: 28, 4: 21})
    assert len(wiman_arr) == 45
    data = gen.load_group("klein")
    assert data.order == 168 and data.conductor == 7
    assert gen.load_group("wiman").order == 360
    assert gen.ReflectionGroupData.from_json(json.loads(json.dumps(data.to_json()))) == data


def test_group_closure_detects_bad_order():
    data = gen.load_group("klein")
    bad = gen.ReflectionGroupData(data.name, data.conductor, data.generators, 42, data.source)
    with pytest.raises(ValueError):
        gen.reflection_arrangement(bad)


def test_files(tmp_path):
    path = tmp_path / "k.json"
    gen.to_file(gen.fermat(3), path)
    assert gen.from_file(path) == gen.fermat(3)
    path.write_text(json.dumps({"lines": [["1", "0", "0"], ["0", "1", "0"], ["1", "0", "0"]]}))
    with pytest.raises(ArrangementError):
        gen.from_file(path)
