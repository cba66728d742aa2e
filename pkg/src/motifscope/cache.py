"""On-disk store for precomputed analytics, keyed by a dataset manifest.

Every artifact file embeds the hash of the manifest it was computed under;
readers reject artifacts whose hash no longer matches (parameters changed,
cache must be recomputed). Writes go to a temp file in the same directory
followed by an atomic rename, so concurrent readers never see partial files.
"""

from __future__ import annotations

import hashlib
import json
import os
import tempfile
from dataclasses import asdict, dataclass
from pathlib import Path

from .census import CensusMatrix
from .graphlets import GdvMatrix
from .metrics import NetworkMetrics
from .temporal import DynamicNetwork, Snapshot

SCHEMA_VERSION = 1


class CacheMismatchError(Exception):
    """Artifact was computed under a different manifest."""


@dataclass(frozen=True)
class Manifest:
    dataset_id: str
    source: str
    delimiter: str
    bin_width: int
    null_count: int = 100
    seed: int = 0
    max_graphlet_size: int = 4
    version: int = SCHEMA_VERSION
    rng: str = "python-random-mt19937"

    def to_dict(self) -> dict:
        d = asdict(self)
        return {
            "datasetId": d["dataset_id"],
            "source": d["source"],
            "delimiter": d["delimiter"],
            "binWidth": d["bin_width"],
            "nullCount": d["null_count"],
            "seed": d["seed"],
            "maxGraphletSize": d["max_graphlet_size"],
            "version": d["version"],
            "rng": d["rng"],
        }

    @staticmethod
    def from_dict(obj: dict) -> "Manifest":
        return Manifest(
            dataset_id=obj["datasetId"],
            source=obj["source"],
            delimiter=obj["delimiter"],
            bin_width=int(obj["binWidth"]),
            null_count=int(obj["nullCount"]),
            seed=int(obj["seed"]),
            max_graphlet_size=int(obj["maxGraphletSize"]),
            version=int(obj["version"]),
            rng=obj.get("rng", "python-random-mt19937"),
        )

    def hash(self) -> str:
        canon = json.dumps(self.to_dict(), sort_keys=True, separators=(",", ":"))
        return hashlib.sha256(canon.encode("utf-8")).hexdigest()


def _atomic_write(path: Path, data: str) -> None:
    path.parent.mkdir(parents=True, exist_ok=True)
    fd, tmp = tempfile.mkstemp(dir=path.parent, prefix=path.name, suffix=".tmp")
    try:
        with os.fdopen(fd, "w", encoding="utf-8") as fh:
            fh.write(data)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


class AnalysisCache:
    """File layout: <root>/<dataset_id>/{manifest,snapshots,census,...}.json"""

    def __init__(self, root: str | Path, manifest: Manifest):
        self.root = Path(root)
        self.manifest = manifest
        self.dir = self.root / manifest.dataset_id

    @staticmethod
    def open(root: str | Path, dataset_id: str) -> "AnalysisCache":
        path = Path(root) / dataset_id / "manifest.json"
        if not path.exists():
            raise FileNotFoundError(f"no cached dataset {dataset_id!r} under {root}")
        manifest = Manifest.from_dict(json.loads(path.read_text(encoding="utf-8")))
        return AnalysisCache(root, manifest)

    @staticmethod
    def list_datasets(root: str | Path) -> list[Manifest]:
        root = Path(root)
        out = []
        if root.exists():
            for sub in sorted(root.iterdir()):
                mf = sub / "manifest.json"
                if mf.exists():
                    out.append(Manifest.from_dict(json.loads(mf.read_text(encoding="utf-8"))))
        return out

    def write_manifest(self) -> None:
        _atomic_write(self.dir / "manifest.json", json.dumps(self.manifest.to_dict(), indent=2))

    def write_artifact(self, name: str, payload: dict) -> None:
        body = {"manifestHash": self.manifest.hash(), "schema": SCHEMA_VERSION}
        body.update(payload)
        _atomic_write(self.dir / name, json.dumps(body, separators=(",", ":")))

    def read_artifact(self, name: str) -> dict:
        path = self.dir / name
        if not path.exists():
            raise FileNotFoundError(f"{name} not computed for dataset {self.manifest.dataset_id!r}")
        body = json.loads(path.read_text(encoding="utf-8"))
        if body.get("manifestHash") != self.manifest.hash():
            raise CacheMismatchError(
                f"{name} was computed under a different manifest; rerun the pipeline"
            )
        return body

    def has_artifact(self, name: str) -> bool:
        return (self.dir / name).exists()

    # --- snapshots ---

    def write_network(self, network: DynamicNetwork) -> None:
        snaps = [
            {
                "index": s.index,
                "interval": list(s.interval),
                "nodes": list(s.nodes),
                "edges": sorted(list(e) for e in s.edges),
            }
            for s in network.snapshots
        ]
        self.write_artifact(
            "snapshots.json",
            {"datasetId": network.dataset_id, "binWidth": network.bin_width, "snapshots": snaps},
        )

    def read_network(self) -> DynamicNetwork:
        body = self.read_artifact("snapshots.json")
        snaps = tuple(
            Snapshot(
                int(s["index"]),
                (int(s["interval"][0]), int(s["interval"][1])),
                tuple(s["nodes"]),
                frozenset((a, b) for a, b in s["edges"]),
            )
            for s in body["snapshots"]
        )
        return DynamicNetwork(body["datasetId"], int(body["binWidth"]), snaps)

    # --- census ---

    def write_census(self, matrix: CensusMatrix) -> None:
        self.write_artifact("census.json", json.loads(matrix.to_json()))

    def read_census(self) -> CensusMatrix:
        return CensusMatrix.from_json(json.dumps(self.read_artifact("census.json")))

    # --- per-snapshot GDV ---

    def gdv_name(self, t: int, max_size: int) -> str:
        return f"gdv_t{t}_k{max_size}.json"

    def write_gdv(self, t: int, matrix: GdvMatrix) -> None:
        self.write_artifact(
            self.gdv_name(t, matrix.max_graphlet_size), json.loads(matrix.to_json())
        )

    def read_gdv(self, t: int, max_size: int) -> GdvMatrix:
        return GdvMatrix.from_json(json.dumps(self.read_artifact(self.gdv_name(t, max_size))))

    # --- per-snapshot network metrics ---

    def write_metrics(self, per_snapshot: list[NetworkMetrics]) -> None:
        self.write_artifact(
            "metrics.json",
            {
                "perSnapshot": [
                    {
                        "nodeCount": m.node_count,
                        "edgeCount": m.edge_count,
                        "avgClustering": m.avg_clustering,
                    }
                    for m in per_snapshot
                ]
            },
        )

    def read_metrics(self) -> list[NetworkMetrics]:
        body = self.read_artifact("metrics.json")
        return [
            NetworkMetrics(int(m["nodeCount"]), int(m["edgeCount"]), float(m["avgClustering"]))
            for m in body["perSnapshot"]
        ]

    # --- supergraph layout ---

    def write_layout(self, positions: dict[str, tuple[float, float]],
                     iterations: int, seed: int) -> None:
        self.write_artifact(
            "layout.json",
            {
                "iterations": iterations,
                "seed": seed,
                "positions": {k: [x, y] for k, (x, y) in positions.items()},
            },
        )

    def read_layout(self) -> dict[str, tuple[float, float]]:
        body = self.read_artifact("layout.json")
        return {k: (float(v[0]), float(v[1])) for k, v in body["positions"].items()}
