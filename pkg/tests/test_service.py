from __future__ import annotations

import pytest

pytest.importorskip("fastapi")
from fastapi.testclient import TestClient  # noqa: E402

from towercoh.service import app  # noqa: E402

client = TestClient(app)


def test_towers_endpoint():
    resp = client.get("/towers")
    assert resp.status_code == 200
    names = {t["name"] for t in resp.json()}
    assert "y3" in names and "z" in names


def test_cohomology_endpoint():
    resp = client.post("/cohomology", json={"tower": "pv", "expression": "T(-1)"})
    assert resp.status_code == 200
    body = resp.json()
    assert body["degrees"] == {"0": {"dim": 5, "rep": "V"}}
    assert body["expression"] == "Q@0"


@pytest.mark.parametrize(
    "payload, status",
    [
        ({"tower": "nope", "expression": "O"}, 404),
        ({"tower": "pv", "expression": "dual("}, 400),
        ({"tower": "z", "expression": "S@1 * Q@1"}, 422),
        ({"tower": "pv"}, 422),
    ],
)
def test_cohomology_errors(payload, status):
    assert client.post("/cohomology", json=payload).status_code == status


def test_verify_endpoint():
    resp = client.post("/verify", json={"suite": "appendix-a", "samples": 5, "seed": 1})
    assert resp.status_code == 200
    body = resp.json()
    assert body["verdict"] == "PASS"
    assert body["report"]["samples_per_profile"] == 5


def test_verify_rejects_unknown_suite_and_bad_samples():
    assert client.post("/verify", json={"suite": "nope"}).status_code == 404
    assert client.post("/verify", json={"suite": "prop-y", "samples": 0}).status_code == 422
