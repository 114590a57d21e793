"""
Tests for the HTTP API
"""

import pytest
from fastapi.testclient import TestClient

from dedekind_symbols.api import app
from dedekind_symbols.config import get_config


@pytest.fixture(scope="module")
def client():
    return TestClient(app)


def test_root_and_health(client):
    assert client.get("/").json()["status"] == "running"
    health = client.get("/health").json()
    assert health["status"] == "healthy"
    assert set(health["presets"]) == {"sl2z", "gamma0-11", "gamma0-37plus"}


def test_sum(client):
    response = client.get("/api/v1/sum", params={"h": 2, "k": 3})
    assert response.status_code == 200
    assert response.json()["value"] == "-1/18"


def test_symbol(client):
    response = client.get("/api/v1/symbol", params={"group": "gamma0-11", "matrix": "4,1,-33,-8"})
    assert response.json()["value"] == "2/5"
    response = client.get("/api/v1/symbol", params={"group": "sl2z", "matrix": "1,1,0,1"})
    assert response.json()["multiplier"] == "exp(pi*i*1/12)"
    response = client.get("/api/v1/symbol", params={"group": "gamma0", "level": 11, "cusp": "0", "matrix": "1,0,-11,1"})
    assert response.json()["value"] == "1"


def test_star(client):
    response = client.get("/api/v1/star", params={"group": "gamma0-11", "matrix": "-7,-1,22,3"})
    assert response.status_code == 200
    assert response.json()["value"] == "9/10 (mod 1)"
    response = client.get("/api/v1/star", params={"group": "gamma0-11", "word": "A", "cusp": "0"})
    assert response.json()["value"] == "1/10 (mod 1)"


def test_word(client):
    response = client.get("/api/v1/word", params={"group": "gamma0-37plus", "matrix": "-1,0,0,-1"})
    assert response.json()["word"] == "E1^2"


def test_presets(client):
    presets = {p["name"]: p for p in client.get("/api/v1/presets").json()}
    assert presets["gamma0-11"]["kappa"] == "1/2"
    assert presets["gamma0-37plus"]["kappa"] == "-19/24"
    assert presets["gamma0-11"]["symbols"]["A"] == "-2/5"


def test_verify(client):
    response = client.get("/api/v1/verify", params={"suite": "sums", "count": 20})
    assert response.status_code == 200
    assert response.json()["passed"]


@pytest.mark.parametrize(
    "path,params",
    [
        ("/api/v1/sum", {"h": 2, "k": 4}),
        ("/api/v1/symbol", {"group": "gamma0-11", "matrix": "0,-1,1,0"}),
        ("/api/v1/symbol", {"group": "sl2z", "matrix": "oops"}),
        ("/api/v1/star", {"group": "gamma0-11"}),
        ("/api/v1/star", {"group": "gamma0-11", "word": "A", "matrix": "1,1,0,1"}),
        ("/api/v1/word", {"group": "unknown", "matrix": "1,1,0,1"}),
        ("/api/v1/verify", {"suite": "nope"}),
    ],
)
def test_bad_requests(client, path, params):
    assert client.get(path, params=params).status_code == 400


def test_word_search_uses_request_budget(client, monkeypatch):
    monkeypatch.setattr(get_config().api, "search_budget", 0)
    response = client.get("/api/v1/word", params={"group": "gamma0-11", "matrix": "-7,-1,22,3"})
    assert response.status_code == 400
    assert "within 0 nodes" in response.json()["detail"]
    response = client.get("/api/v1/star", params={"group": "gamma0-11", "matrix": "-7,-1,22,3"})
    assert response.status_code == 400
