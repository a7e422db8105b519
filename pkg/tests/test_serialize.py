import json
from fractions import Fraction

import pytest

from ammann.delzant import delzant_result
from ammann.golden import GoldenRational as G
from ammann.serialize import (
    delzant_to_dict,
    dumps_canonical,
    export_obj,
    golden_from_json,
    golden_to_json,
    patch_dumps,
    patch_from_dict,
    patch_loads,
    patch_to_dict,
    render_delzant_report,
    tile_from_dict,
    tile_to_dict,
)
from ammann.tiling import PatchConfig, canonical_oblate, generate_patch


def small_patch():
    return generate_patch(PatchConfig(radius=Fraction(2)))


def test_golden_json_round_trip():
    x = G(Fraction(-7, 3), Fraction(2, 5))
    assert golden_from_json(golden_to_json(x)) == x


def test_tile_round_trip():
    tile = canonical_oblate()
    data = tile_to_dict(tile)
    back = tile_from_dict(data)
    assert back.anchor == tile.anchor
    assert back.edges == tile.edges
    assert back.lattice_origin == tile.lattice_origin
    assert back.axis_triple == tile.axis_triple
    assert back.tile_type == "oblate"


def test_tile_type_mismatch_rejected():
    data = tile_to_dict(canonical_oblate())
    data["type"] = "prolate"
    with pytest.raises(ValueError):
        tile_from_dict(data)


def test_tile_structure_validation():
    data = tile_to_dict(canonical_oblate())
    data["axis_triple"] = [0, 5, 6]
    with pytest.raises(ValueError):
        tile_from_dict(data)
    data = tile_to_dict(canonical_oblate())
    data["lattice_origin"] = [0] * 5
    with pytest.raises(ValueError):
        tile_from_dict(data)


def test_patch_round_trip():
    patch = small_patch()
    text = patch_dumps(patch)
    back = patch_loads(text)
    assert back.config == patch.config
    assert len(back.tiles) == len(patch.tiles)
    for a, b in zip(patch.tiles, back.tiles):
        assert a.anchor == b.anchor
        assert a.edges == b.edges
        assert a.lattice_origin == b.lattice_origin
        assert a.axis_triple == b.axis_triple
    # round trip is byte-stable
    assert patch_dumps(back) == text


def test_patch_rejects_tampered_window():
    patch = small_patch()
    data = patch_to_dict(patch)
    data["config"]["window_normals"][0]["offset"] = golden_to_json(G(99))
    with pytest.raises(ValueError):
        patch_from_dict(data)


def test_dumps_canonical_deterministic():
    payload = {"b": [1, 2], "a": {"x": 1}}
    assert dumps_canonical(payload) == dumps_canonical(payload)
    assert dumps_canonical(payload).endswith("\n")


def test_export_obj_counts():
    patch = small_patch()
    obj = export_obj(patch)
    lines = obj.splitlines()
    n_v = sum(1 for l in lines if l.startswith("v "))
    n_f = sum(1 for l in lines if l.startswith("f "))
    n_o = sum(1 for l in lines if l.startswith("o "))
    assert n_v == 8 * len(patch.tiles)
    assert n_f == 6 * len(patch.tiles)
    assert n_o == len(patch.tiles)
    assert any(l.startswith("o oblate_") for l in lines)
    assert any(l.startswith("o prolate_") for l in lines)
    # faces reference valid 1-based vertex indices
    for l in lines:
        if l.startswith("f "):
            idx = [int(t) for t in l.split()[1:]]
            assert len(idx) == 4
            assert all(1 <= i <= n_v for i in idx)


def test_delzant_serialization():
    result = delzant_result(canonical_oblate())
    data = delzant_to_dict(result)
    text = dumps_canonical(data)
    parsed = json.loads(text)
    assert parsed["invariants"]["type"] == "oblate"
    assert parsed["ndescriptor"]["gamma_rank"] == 3
    assert len(parsed["rep"]["normals"]) == 6
    assert len(parsed["chart_groups"]) == 8
    # lambda_4 = -1/phi serializes as [1, 1, -1, 1]
    assert parsed["rep"]["offsets"][3] == [1, 1, -1, 1]
    report = render_delzant_report(result)
    assert "= U1" in report
    assert "lambda_4 = 1 - phi" in report
    assert "gamma rank: 3" in report
