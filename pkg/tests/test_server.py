import json
import time

import numpy as np
import pytest

from helpers import snapshot_from_arcs
from motifscope.cache import AnalysisCache, Manifest
from motifscope.census import build_census_matrix
from motifscope.server import create_app
from motifscope.temporal import DynamicNetwork

fastapi_testclient = pytest.importorskip("fastapi.testclient")
TestClient = fastapi_testclient.TestClient


def build_dataset(root, dataset_id, snapshots, null_count=5):
    network = DynamicNetwork(dataset_id, 10, tuple(snapshots))
    manifest = Manifest(
        dataset_id=dataset_id,
        source=f"{dataset_id}.csv",
        delimiter=",",
        bin_width=10,
        null_count=null_count,
    )
    cache = AnalysisCache(root, manifest)
    cache.write_manifest()
    cache.write_network(network)
    cache.write_census(build_census_matrix(network, null_count=null_count, seed=0))
    return cache


def four_snapshots():
    return [
        snapshot_from_arcs(
            {("a", "b"), ("b", "c"), ("a", "c"), ("d", "e")}, index=0
        ),
        snapshot_from_arcs({("a", "b"), ("b", "c"), ("c", "a")}, index=1),
        snapshot_from_arcs({("a", "b"), ("b", "a")}, index=2),
        snapshot_from_arcs(set(), index=3),
    ]


@pytest.fixture()
def client(tmp_path):
    build_dataset(tmp_path, "demo", four_snapshots())
    app = create_app(tmp_path)
    with TestClient(app) as c:
        yield c


def test_list_datasets(client):
    r = client.get("/api/datasets")
    assert r.status_code == 200
    body = r.json()
    assert len(body) == 1
    assert body[0]["datasetId"] == "demo"
    assert body[0]["binWidth"] == 10
    assert body[0]["rng"] == "python-random-mt19937"


def test_get_census_payload(client):
    r = client.get("/api/datasets/demo/census")
    assert r.status_code == 200
    body = r.json()
    assert body["motifs"] == [
        "021D", "021U", "021C", "111D", "111U", "030T", "030C",
        "201", "120D", "120U", "120C", "210", "300",
    ]
    assert body["times"] == [0, 1, 2, 3]
    assert len(body["values"]) == 13 * 4 == 52
    assert body["nullCount"] == 5
    assert body["seed"] == 0
    assert body["rng"] == "python-random-mt19937"
    assert "manifestHash" in body and "schema" in body


def test_census_view_defaults_cluster_by_time(client):
    r = client.post("/api/datasets/demo/census/view", json={})
    assert r.status_code == 200
    view = r.json()
    assert sorted(view["colPermutation"]) == [0, 1, 2, 3]
    assert view["rowPermutation"] == list(range(13))
    assert view["clusters"] is not None
    assert view["clusters"]["parameters"] == {"minClusterSize": 5, "epsTime": 10}
    assert view["collapsed"] == []


def test_census_view_by_time(client):
    r = client.post("/api/datasets/demo/census/view", json={"strategy": "byTime"})
    assert r.status_code == 200
    assert r.json()["colPermutation"] == [0, 1, 2, 3]
    assert r.json()["clusters"] is None


def test_census_view_by_network_metric(client):
    r = client.post(
        "/api/datasets/demo/census/view",
        json={"strategy": "byNetworkMetric", "metric": "edgeCount"},
    )
    assert r.status_code == 200
    # edge counts per snapshot: 4, 3, 2, 0 -> ascending
    assert r.json()["colPermutation"] == [3, 2, 1, 0]


def test_census_view_row_statistic(client):
    r = client.post(
        "/api/datasets/demo/census/view",
        json={"strategy": "byTime", "statistic": "max"},
    )
    assert r.status_code == 200
    perm = r.json()["rowPermutation"]
    assert sorted(perm) == list(range(13))


def test_census_view_rejects_bad_parameters(client):
    checks = [
        {"strategy": "byMagic"},
        {"statistic": "mode"},
        {"epsTime": -1},
        {"minClusterSize": 1},
        {"strategy": "byNetworkMetric", "metric": "fame"},
    ]
    for body in checks:
        r = client.post("/api/datasets/demo/census/view", json=body)
        assert r.status_code == 400
        payload = r.json()
        assert payload["error"] == "invalid parameters"
        assert "detail" in payload
    r = client.post("/api/datasets/demo/census/view", json={"epsTime": "soon"})
    assert r.status_code == 400
    assert r.json()["error"] == "invalid parameters"


def test_gdv_lazy_compute_and_cache(client, tmp_path):
    r = client.get("/api/datasets/demo/snapshots/0/gdv")
    assert r.status_code == 200
    body = r.json()
    assert body["orbits"] == list(range(15))
    assert body["nodes"] == ["a", "b", "c", "d", "e"]
    assert body["maxGraphletSize"] == 4
    assert (tmp_path / "demo" / "gdv_t0_k4.json").exists()
    # second call reads the artifact straight back
    again = client.get("/api/datasets/demo/snapshots/0/gdv")
    assert again.json() == body


def test_gdv_max_size_five(client):
    r = client.get("/api/datasets/demo/snapshots/1/gdv", params={"maxSize": 5})
    assert r.status_code == 200
    assert len(r.json()["orbits"]) == 73


def test_gdv_invalid_max_size(client):
    r = client.get("/api/datasets/demo/snapshots/0/gdv", params={"maxSize": 3})
    assert r.status_code == 400
    assert r.json()["error"] == "invalid parameters"


def test_gdv_unknown_snapshot(client):
    r = client.get("/api/datasets/demo/snapshots/17/gdv")
    assert r.status_code == 404
    assert r.json()["error"] == "unknown snapshot"


def test_gdv_view_by_cluster(client):
    r = client.post("/api/datasets/demo/snapshots/0/gdv/view", json={})
    assert r.status_code == 200
    view = r.json()
    assert sorted(view["colPermutation"]) == list(range(5))
    assert view["clusters"] is not None


def test_gdv_view_by_node_metric(client):
    r = client.post(
        "/api/datasets/demo/snapshots/0/gdv/view",
        json={"strategy": "byNodeMetric", "metric": "pagerank"},
    )
    assert r.status_code == 200
    perm = r.json()["colPermutation"]
    assert sorted(perm) == list(range(5))
    # c receives from two triad members and must outrank the sources a, d
    nodes = ["a", "b", "c", "d", "e"]
    assert perm.index(nodes.index("a")) < perm.index(nodes.index("c"))


def test_gdv_view_rejects_bad_parameters(client):
    r = client.post(
        "/api/datasets/demo/snapshots/0/gdv/view", json={"strategy": "sideways"}
    )
    assert r.status_code == 400
    r = client.post(
        "/api/datasets/demo/snapshots/0/gdv/view",
        json={"strategy": "byNodeMetric", "metric": "charisma"},
    )
    assert r.status_code == 400


def test_graph_endpoint_small_snapshot(client):
    r = client.get("/api/datasets/demo/snapshots/0/graph")
    assert r.status_code == 200
    body = r.json()
    assert body["snapshot"] == 0
    assert [n["id"] for n in body["nodes"]] == ["a", "b", "c", "d", "e"]
    for node in body["nodes"]:
        assert "pagerank" in node and "degreeCentrality" in node
        assert "community" not in node
    assert body["edges"] == [["a", "b"], ["a", "c"], ["b", "c"], ["d", "e"]]
    assert set(body["layout"]) == {"a", "b", "c", "d", "e"}
    assert "communities" not in body


def test_graph_layout_is_cached_and_stable(client, tmp_path):
    first = client.get("/api/datasets/demo/snapshots/0/graph").json()
    assert (tmp_path / "demo" / "layout.json").exists()
    second = client.get("/api/datasets/demo/snapshots/1/graph").json()
    for v in second["layout"]:
        assert second["layout"][v] == first["layout"][v]


def test_graph_communities_only_above_node_threshold(tmp_path):
    ring = {(f"n{i:03d}", f"n{(i + 1) % 102:03d}") for i in range(102)}
    build_dataset(tmp_path, "big", [snapshot_from_arcs(ring, index=0)], null_count=2)
    app = create_app(tmp_path)
    with TestClient(app) as client:
        body = client.get("/api/datasets/big/snapshots/0/graph").json()
        assert "communities" in body
        assert body["communities"]["count"] >= 1
        assert isinstance(body["communities"]["modularity"], float)
        for node in body["nodes"]:
            assert isinstance(node["community"], int)


def test_metrics_endpoint(client):
    r = client.get("/api/datasets/demo/snapshots/1/metrics")
    assert r.status_code == 200
    assert r.json() == {
        "snapshot": 1,
        "nodeCount": 3,
        "edgeCount": 3,
        "avgClustering": 1.0,
    }


def test_motif_nodes_endpoint(client):
    r = client.get("/api/datasets/demo/snapshots/0/motifs/030T/nodes")
    assert r.status_code == 200
    body = r.json()
    assert body == {
        "label": "030T",
        "available": True,
        "nodes": ["a", "b", "c"],
        "instanceCount": 1,
    }
    none = client.get("/api/datasets/demo/snapshots/2/motifs/030T/nodes").json()
    assert none["nodes"] == [] and none["instanceCount"] == 0


def test_motif_nodes_unknown_label(client):
    r = client.get("/api/datasets/demo/snapshots/0/motifs/999X/nodes")
    assert r.status_code == 404
    assert r.json()["error"] == "unknown motif"


def test_motif_nodes_disabled_on_huge_snapshots(tmp_path):
    chain = {(f"v{i:04d}", f"v{i + 1:04d}") for i in range(1001)}
    build_dataset(tmp_path, "huge", [snapshot_from_arcs(chain, index=0)], null_count=2)
    app = create_app(tmp_path)
    with TestClient(app) as client:
        body = client.get("/api/datasets/huge/snapshots/0/motifs/021C/nodes").json()
        assert body["available"] is False
        assert body["nodes"] == []
        assert "detail" in body


def test_unknown_dataset_404(client):
    r = client.get("/api/datasets/nope/census")
    assert r.status_code == 404
    assert r.json()["error"] == "unknown dataset"


def test_tampered_artifact_409(client, tmp_path):
    path = tmp_path / "demo" / "census.json"
    body = json.loads(path.read_text())
    body["manifestHash"] = "0" * 64
    path.write_text(json.dumps(body))
    r = client.get("/api/datasets/demo/census")
    assert r.status_code == 409
    assert r.json()["error"] == "cache mismatch"


def poll_job(client, job_id, timeout=10.0):
    deadline = time.monotonic() + timeout
    while time.monotonic() < deadline:
        status = client.get(f"/api/jobs/{job_id}").json()["status"]
        if status != "running":
            return status
        time.sleep(0.05)
    raise TimeoutError(f"job {job_id} still running")


def test_gdv_job_flow(tmp_path):
    build_dataset(tmp_path, "demo", four_snapshots())
    app = create_app(tmp_path, job_threshold=3)
    with TestClient(app) as client:
        r = client.get("/api/datasets/demo/snapshots/0/gdv")
        assert r.status_code == 202
        ticket = r.json()
        assert ticket["job"] == "gdv:demo:0:4"
        assert ticket["status"] == "running"
        assert poll_job(client, ticket["job"]) == "done"
        done = client.get("/api/datasets/demo/snapshots/0/gdv")
        assert done.status_code == 200
        assert done.json()["nodes"] == ["a", "b", "c", "d", "e"]


def test_layout_job_flow(tmp_path):
    build_dataset(tmp_path, "demo", four_snapshots())
    app = create_app(tmp_path, job_threshold=3)
    with TestClient(app) as client:
        r = client.get("/api/datasets/demo/snapshots/0/graph")
        assert r.status_code == 202
        ticket = r.json()
        assert ticket["job"] == "layout:demo"
        assert poll_job(client, ticket["job"]) == "done"
        done = client.get("/api/datasets/demo/snapshots/0/graph")
        assert done.status_code == 200
        assert set(done.json()["layout"]) == {"a", "b", "c", "d", "e"}


def test_unknown_job_404(client):
    r = client.get("/api/jobs/gdv:demo:9:4")
    assert r.status_code == 404
    assert r.json()["error"] == "unknown job"
