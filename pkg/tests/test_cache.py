import json

import numpy as np
import pytest

from helpers import snapshot_from_arcs
from motifscope.cache import SCHEMA_VERSION, AnalysisCache, CacheMismatchError, Manifest
from motifscope.census import build_census_matrix
from motifscope.graphlets import compute_gdv
from motifscope.metrics import NetworkMetrics
from motifscope.temporal import DynamicNetwork


def manifest(**overrides):
    base = dict(dataset_id="demo", source="demo.csv", delimiter=",", bin_width=10)
    base.update(overrides)
    return Manifest(**base)


def network():
    snaps = (
        snapshot_from_arcs({("a", "b"), ("b", "c"), ("a", "c")}, index=0),
        snapshot_from_arcs({("c", "b")}, index=1),
    )
    return DynamicNetwork("demo", 10, snaps)


def test_manifest_dict_roundtrip():
    m = manifest(null_count=7, seed=3)
    again = Manifest.from_dict(m.to_dict())
    assert again == m
    d = m.to_dict()
    assert d["datasetId"] == "demo"
    assert d["binWidth"] == 10
    assert d["nullCount"] == 7
    assert d["maxGraphletSize"] == 4
    assert d["rng"] == "python-random-mt19937"
    assert d["version"] == SCHEMA_VERSION


def test_manifest_hash_tracks_parameters():
    assert manifest().hash() == manifest().hash()
    assert manifest().hash() != manifest(seed=1).hash()
    assert manifest().hash() != manifest(null_count=50).hash()
    assert len(manifest().hash()) == 64


def test_network_roundtrip(tmp_path):
    cache = AnalysisCache(tmp_path, manifest())
    cache.write_manifest()
    cache.write_network(network())
    again = cache.read_network()
    assert again == network()


def test_open_reads_manifest_back(tmp_path):
    cache = AnalysisCache(tmp_path, manifest(seed=9))
    cache.write_manifest()
    reopened = AnalysisCache.open(tmp_path, "demo")
    assert reopened.manifest == manifest(seed=9)


def test_open_unknown_dataset(tmp_path):
    with pytest.raises(FileNotFoundError):
        AnalysisCache.open(tmp_path, "ghost")


def test_list_datasets(tmp_path):
    assert AnalysisCache.list_datasets(tmp_path / "none") == []
    for name in ("beta", "alpha"):
        c = AnalysisCache(tmp_path, manifest(dataset_id=name))
        c.write_manifest()
    listed = AnalysisCache.list_datasets(tmp_path)
    assert [m.dataset_id for m in listed] == ["alpha", "beta"]


def test_census_roundtrip(tmp_path):
    cache = AnalysisCache(tmp_path, manifest(null_count=5))
    cache.write_manifest()
    cm = build_census_matrix(network(), null_count=5, seed=0)
    cache.write_census(cm)
    again = cache.read_census()
    assert np.allclose(again.values, cm.values)
    assert again.null_count == 5


def test_gdv_roundtrip_and_naming(tmp_path):
    cache = AnalysisCache(tmp_path, manifest())
    cache.write_manifest()
    m = compute_gdv(network().snapshots[0], 4)
    cache.write_gdv(0, m)
    assert cache.gdv_name(0, 4) == "gdv_t0_k4.json"
    assert cache.has_artifact("gdv_t0_k4.json")
    assert not cache.has_artifact("gdv_t1_k4.json")
    again = cache.read_gdv(0, 4)
    assert np.array_equal(again.values, m.values)
    assert again.node_ids == m.node_ids


def test_metrics_roundtrip(tmp_path):
    cache = AnalysisCache(tmp_path, manifest())
    cache.write_manifest()
    rows = [NetworkMetrics(3, 3, 1.0), NetworkMetrics(2, 1, 0.0)]
    cache.write_metrics(rows)
    assert cache.read_metrics() == rows


def test_layout_roundtrip(tmp_path):
    cache = AnalysisCache(tmp_path, manifest())
    cache.write_manifest()
    pos = {"a": (0.5, -1.25), "b": (3.0, 2.0)}
    cache.write_layout(pos, iterations=500, seed=0)
    assert cache.read_layout() == pos


def test_artifacts_embed_manifest_hash(tmp_path):
    cache = AnalysisCache(tmp_path, manifest())
    cache.write_manifest()
    cache.write_network(network())
    body = json.loads((tmp_path / "demo" / "snapshots.json").read_text())
    assert body["manifestHash"] == manifest().hash()
    assert body["schema"] == SCHEMA_VERSION


def test_stale_artifact_rejected(tmp_path):
    cache = AnalysisCache(tmp_path, manifest())
    cache.write_manifest()
    cache.write_network(network())
    # same files, different parameters: the old snapshot dump must not pass
    changed = AnalysisCache(tmp_path, manifest(seed=123))
    with pytest.raises(CacheMismatchError):
        changed.read_network()


def test_missing_artifact_is_file_not_found(tmp_path):
    cache = AnalysisCache(tmp_path, manifest())
    cache.write_manifest()
    with pytest.raises(FileNotFoundError):
        cache.read_census()


def test_restamping_heals_mismatch(tmp_path):
    cache = AnalysisCache(tmp_path, manifest())
    cache.write_manifest()
    net = network()
    cache.write_network(net)
    changed = AnalysisCache(tmp_path, manifest(seed=123))
    changed.write_manifest()
    changed.write_network(net)  # re-stamp under the new hash
    assert changed.read_network() == net


def test_write_is_atomic_no_temp_left_behind(tmp_path):
    cache = AnalysisCache(tmp_path, manifest())
    cache.write_manifest()
    cache.write_network(network())
    leftovers = [p for p in (tmp_path / "demo").iterdir() if p.suffix == ".tmp"]
    assert leftovers == []


def test_snapshot_edges_serialized_sorted(tmp_path):
    cache = AnalysisCache(tmp_path, manifest())
    cache.write_manifest()
    cache.write_network(network())
    body = json.loads((tmp_path / "demo" / "snapshots.json").read_text())
    edges = body["snapshots"][0]["edges"]
    assert edges == sorted(edges)
