import warnings

import pytest

with warnings.catch_warnings():
    warnings.simplefilter("ignore")
    from starlette.testclient import TestClient

from dqv.catalog import CHECKS
from dqv.service import app


@pytest.fixture(scope="module")
def client():
    with TestClient(app) as c:
        yield c


def test_health(client):
    data = client.get("/health").json()
    assert data["status"] == "ok"
    assert data["checks"] == len(CHECKS)


def test_checks_listing(client):
    items = client.get("/checks").json()
    assert {i["check_id"] for i in items} == set(CHECKS)
    assert all(i["description"] for i in items)


def test_run_check(client):
    resp = client.post("/checks/pentagon-h2/run", json={})
    assert resp.status_code == 200
    data = resp.json()
    assert data["passed"] is True
    assert data["order"] == 2
    assert "PASS" in data["summary"]


def test_run_check_with_flags(client):
    resp = client.post(
        "/checks/hexagon-h1-left/run", json={"flags": "symmetric"}
    )
    assert resp.status_code == 200
    assert resp.json()["passed"] is False


def test_run_unknown_check(client):
    assert client.post("/checks/nope/run", json={}).status_code == 404


def test_run_bad_flags(client):
    resp = client.post("/checks/pentagon-h2/run", json={"flags": "bogus"})
    assert resp.status_code == 422


def test_normalize_endpoint(client):
    resp = client.post(
        "/normalize", json={"expression": "t[(1,2),3]", "flags": "strict"}
    )
    data = resp.json()
    assert data["normalized"] == "t[1,3] + t[2,3]"
    assert data["zero"] is False


def test_normalize_unit_strand(client):
    resp = client.post(
        "/normalize", json={"expression": "t[1,0]", "flags": "unital"}
    )
    assert resp.json()["zero"] is True


def test_normalize_parse_error(client):
    resp = client.post("/normalize", json={"expression": "t[1", "flags": ""})
    assert resp.status_code == 422


def test_oracle_endpoint(client):
    resp = client.post("/oracle", json={"seed": 11, "instances": 3})
    data = resp.json()
    assert data["all_passed"] is True
    assert [i["seed"] for i in data["instances"]] == [11, 12, 13]
