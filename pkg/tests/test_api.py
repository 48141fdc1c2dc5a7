from fastapi.testclient import TestClient

from app.main import app

client = TestClient(app)

A2 = {"type": "A", "rank": 2}


def test_root_redirects_to_docs():
    response = client.get("/", follow_redirects=False)
    assert response.status_code in (302, 307)
    assert response.headers["location"] == "/docs"


def test_check_even_chain():
    response = client.post("/check/even-chain", json={"k": 2})
    assert response.status_code == 200
    body = response.json()
    assert body["passed"] is True
    assert body["period"] == 8


def test_check_rejects_degenerate_chain():
    response = client.post("/check/even-chain", json={"k": 1})
    assert response.status_code == 400
    assert "xyx = yxy" in response.json()["detail"]


def test_check_fold_and_claims():
    fold = client.post("/check/fold-D", json={"k": 4}).json()
    assert (fold["x"], fold["period"]) == ("1 3 4", 6)
    claims = client.post("/check/claims-odd", json={"k": 3}).json()
    assert claims["all_agree"] is True


def test_unknown_theorem():
    assert client.post("/check/lemma", json={"k": 2}).status_code == 422


def test_surface_endpoint():
    response = client.post("/surface", json={"graph": {"type": "A", "rank": 4}})
    assert response.json() == {"graph": {"type": "A", "rank": 4}, "genus": 2, "boundary": 1, "chi": -3}
    assert client.post("/surface", json={"graph": {"type": "D", "rank": 3}}).status_code == 400


def test_malformed_edge_lists_are_bad_requests():
    for edges in (5, [5], "1 2"):
        graph = {"type": "custom", "rank": 2, "edges": edges}
        assert client.post("/surface", json={"graph": graph}).status_code == 400
        assert client.post("/words_equal", json={"graph": graph, "u": "1", "v": "2"}).status_code == 400


def test_check_request_bounds():
    assert client.post("/check/even-chain", json={"k": 7}).status_code == 422
    assert client.post("/check/odd-chain", json={"k": 2, "n_max": 129}).status_code == 422


def test_normal_form_endpoint():
    response = client.post("/normal_form", json={"graph": A2, "word": "1 1 2"})
    assert response.json()["factors"] == [[1], [1, 2]]
    assert client.post("/normal_form", json={"graph": A2, "word": "1 7"}).status_code == 400


def test_words_equal_endpoint():
    assert client.post("/words_equal", json={"graph": A2, "u": "1 2 1", "v": "2 1 2"}).json() == {"equal": True}
    assert client.post("/words_equal", json={"graph": A2, "u": "1 2", "v": "2 1"}).json() == {"equal": False}


def test_clear_cache_requires_password(monkeypatch):
    monkeypatch.delenv("ADMIN_PASSWORD", raising=False)
    assert client.post("/clear_cache/", json={"password": "x"}).status_code == 500
    monkeypatch.setenv("ADMIN_PASSWORD", "secret")
    assert client.post("/clear_cache/", json={"password": "wrong"}).status_code == 401
    response = client.post("/clear_cache/", json={"password": "secret"})
    assert response.status_code == 200
    assert response.json() == {"message": "All cached verdicts cleared!"}
