"""HTTP service endpoints, exercised in process over ASGI."""
import asyncio
import math

import httpx
import pytest

from opnorm.service.app import create_app

LOSHU = [[8.0, 1.0, 6.0], [3.0, 5.0, 7.0], [4.0, 9.0, 2.0]]
FAST = {"restarts": 6, "sample_count": 2000}


@pytest.fixture(scope="module")
def post():
    app = create_app()
    transport = httpx.ASGITransport(app=app)

    def _post(path, payload=None, method="POST"):
        async def go():
            async with httpx.AsyncClient(transport=transport,
                                         base_url="http://test") as client:
                if method == "GET":
                    return await client.get(path)
                return await client.post(path, json=payload)
        return asyncio.run(go())

    return _post


def norm_payload(**kw):
    body = {"matrix": {"entries": LOSHU}, "p": "2", "q": "2", **FAST}
    body.update(kw)
    return body


class TestHealth:
    def test_ok(self, post):
        resp = post("/health", method="GET")
        assert resp.status_code == 200
        body = resp.json()
        assert body["status"] == "ok"
        assert body["version"]


class TestNorm:
    def test_exact_euclidean(self, post):
        resp = post("/norm", norm_payload())
        assert resp.status_code == 200
        body = resp.json()
        assert abs(body["value"] - 15.0) <= 1e-9
        assert body["status"] == "exact"
        assert body["lo"] is None and body["hi"] is None
        assert body["witness"] is None

    def test_witness_round_trip(self, post):
        resp = post("/norm", norm_payload(p="1", q="2", include_witness=True))
        body = resp.json()
        assert abs(body["value"] - math.sqrt(107.0)) <= 1e-9
        w = [complex(re, im) for re, im in body["witness"]]
        assert len(w) == 3
        # the maximizing column is the second one
        assert abs(abs(w[1]) - 1.0) <= 1e-9

    def test_bracket_fields(self, post):
        resp = post("/norm", norm_payload(p="2", q="4"))
        body = resp.json()
        assert body["status"] == "bracket"
        assert body["lo"] <= body["hi"] * (1.0 + 1e-9)
        assert body["value"] == body["lo"]

    def test_complex_entries(self, post):
        entries = [[0.0, [0.0, 1.0]], [1.0, 0.0]]
        resp = post("/norm", {"matrix": {"entries": entries}, "p": "2", "q": "2", **FAST})
        body = resp.json()
        # unitary permutation with phases: value 1 on the euclidean point
        assert abs(body["value"] - 1.0) <= 1e-9
        assert body["status"] == "exact"

    def test_rational_exponent_strings(self, post):
        resp = post("/norm", norm_payload(p="3/2", q="1"))
        body = resp.json()
        assert abs(body["value"] - 15.0 * 3.0 ** (1.0 / 3.0)) <= 1e-9

    def test_bad_exponent_is_400(self, post):
        resp = post("/norm", norm_payload(p="0.5"))
        assert resp.status_code == 400
        assert "invalid exponent p" in resp.json()["detail"]

    def test_non_square_is_422(self, post):
        resp = post("/norm", {"matrix": {"entries": [[1.0, 2.0]]}, "p": "2", "q": "2"})
        assert resp.status_code == 422

    def test_determinism(self, post):
        a = post("/norm", norm_payload(p="2", q="4", include_witness=True)).json()
        b = post("/norm", norm_payload(p="2", q="4", include_witness=True)).json()
        assert a == b


class TestClassify:
    def test_magic(self, post):
        resp = post("/classify", {"matrix": {"entries": LOSHU}})
        body = resp.json()
        assert body["tag"] == "magic-squared"
        assert body["description"] == "magic-squared alpha=15"
        assert abs(body["alpha"] - 15.0) <= 1e-9
        assert body["sigma"] is None

    def test_unitary_permutation_fields(self, post):
        entries = [[0.0, [0.0, -1.0]], [1.0, 0.0]]
        resp = post("/classify", {"matrix": {"entries": entries}})
        body = resp.json()
        assert body["tag"] == "unitary-permutation"
        assert body["sigma"] == [2, 1]
        assert body["phases"] == [[0.0, -1.0], [1.0, 0.0]]


class TestScan:
    def test_grid(self, post):
        resp = post("/scan", {"matrix": {"entries": LOSHU}, "resolution": 2, **FAST})
        body = resp.json()
        assert len(body["cells"]) == 9
        first = body["cells"][0]
        assert first["u"] == 0.0 and first["v"] == 0.0
        assert abs(first["value"] - 15.0) <= 1e-9
        assert [c["status"] for c in body["cells"]].count("exact") == 9

    def test_resolution_validated(self, post):
        resp = post("/scan", {"matrix": {"entries": LOSHU}, "resolution": 1})
        assert resp.status_code == 422


class TestVerify:
    def test_all_suites_pass(self, post):
        resp = post("/verify", {"matrix": {"entries": LOSHU}, "suite": "all", **FAST})
        body = resp.json()
        assert body["passed"] is True
        assert len(body["checks"]) >= 10
        assert all(set(c) == {"name", "passed", "detail"} for c in body["checks"])

    def test_unknown_suite_is_422(self, post):
        resp = post("/verify", {"matrix": {"entries": LOSHU}, "suite": "bogus"})
        assert resp.status_code == 422
