import pytest
from fastapi.testclient import TestClient

from ammann.service.app import app


@pytest.fixture(scope="module")
def client():
    with TestClient(app) as c:
        yield c


@pytest.fixture(scope="module")
def patch2(client):
    resp = client.post("/patch/generate", json={"radius": "2"})
    assert resp.status_code == 200
    return resp.json()


def test_health(client):
    data = client.get("/health").json()
    assert data["status"] == "ok"


def test_star_endpoint(client):
    data = client.get("/star").json()
    assert len(data["v"]) == 6
    assert len(data["u"]) == 6
    assert len(data["q30"]) == 30


def test_group_endpoint(client):
    data = client.get("/group").json()
    assert data["order"] == 120
    assert data["rotations"] == 60
    assert data["star_invariant"]
    assert data["unit_star_invariant"]


def test_canonical_tiles(client):
    for kind in ("oblate", "prolate"):
        data = client.get(f"/tiles/canonical/{kind}").json()
        assert data["type"] == kind
        assert data["lattice_origin"] == [0] * 6
    assert client.get("/tiles/canonical/flat").status_code == 404


def test_generate_and_verify(client, patch2):
    assert len(patch2["tiles"]) > 10
    verify = client.post("/patch/verify", json=patch2).json()
    assert verify["ok"]
    assert verify["violations"] == []
    assert verify["n_tiles"] == len(patch2["tiles"])


def test_generate_rejects_bad_radius(client):
    assert client.post("/patch/generate", json={"radius": "fast"}).status_code == 400
    assert client.post("/patch/generate", json={"radius": "1/0"}).status_code == 400


def test_generate_custom_shift(client):
    resp = client.post(
        "/patch/generate", json={"radius": "1", "shift": ["1/9", "1/17", "1/23"]}
    )
    assert resp.status_code == 200
    shift = resp.json()["config"]["shift"]
    assert shift[0] == [1, 9, 0, 1]


def test_stats_endpoint(client, patch2):
    data = client.post("/patch/stats", json=patch2).json()
    assert data["n_oblate"] > 0
    assert data["n_prolate"] > 0
    assert data["ratio"] == pytest.approx(data["n_prolate"] / data["n_oblate"])
    assert not data["ratio_infinite"]


def test_export_obj_endpoint(client, patch2):
    obj = client.post("/patch/export-obj", json=patch2).json()["obj"]
    assert obj.count("\nv ") + obj.startswith("v ") == 8 * len(patch2["tiles"])


def test_verify_flags_tampering(client, patch2):
    import copy

    bad = copy.deepcopy(patch2)
    bad["tiles"][0]["anchor"][0] = [1, 2, 0, 1]  # add 1/2 to the x coordinate
    resp = client.post("/patch/verify", json=bad)
    assert resp.status_code == 200
    data = resp.json()
    assert not data["ok"]
    assert any(v["check"] == "vertex-in-R" for v in data["violations"])


def test_verify_rejects_tampered_window(client, patch2):
    import copy

    bad = copy.deepcopy(patch2)
    bad["config"]["window_normals"][0]["offset"] = [9, 1, 0, 1]
    assert client.post("/patch/verify", json=bad).status_code == 400


def test_delzant_endpoint(client):
    tile = client.get("/tiles/canonical/oblate").json()
    data = client.post("/delzant", json={"tile": tile}).json()
    assert data["result"]["invariants"]["type"] == "oblate"
    assert "lambda_4 = 1 - phi" in data["report"]
    # radii squared are all 1/phi = -1 + phi
    assert data["result"]["radii_sq"] == [[-1, 1, 1, 1]] * 3


def test_canon_endpoint(client, patch2):
    tile = patch2["tiles"][3]
    data = client.post("/canon", json={"tile": tile}).json()
    assert data["result"]["type"] == tile["type"]
    assert data["result"]["translation_in_r"]
    assert data["result"]["det"] in (1, -1)


def test_compare_endpoint(client):
    a = client.get("/tiles/canonical/oblate").json()
    b = client.get("/tiles/canonical/prolate").json()
    data = client.post("/compare", json={"a": a, "b": b}).json()
    assert data["same_diffeotype"]
    assert not data["same_symplectotype"]
    assert "diffeomorphic: yes" in data["report"]
    assert "symplectomorphic: no" in data["report"]


def test_tile_validation_errors(client):
    tile = client.get("/tiles/canonical/oblate").json()
    tile["type"] = "prolate"
    assert client.post("/delzant", json={"tile": tile}).status_code == 400
    tile = client.get("/tiles/canonical/oblate").json()
    tile["anchor"][0] = [1, 0, 0, 1]  # zero denominator
    assert client.post("/delzant", json={"tile": tile}).status_code == 400
