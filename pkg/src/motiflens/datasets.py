"""Bundled sample networks.

* ``lesmis`` — the classic co-occurrence network of the characters of
  Les Misérables (77 nodes, 254 weighted links).
* ``marieboucher`` — a synthetic 17th-century style merchant trade
  network with dated, directed links (189 nodes, 488 links), sized like
  the historical Marie Boucher correspondence data.
"""

from __future__ import annotations

from importlib import resources

from .graph import Network
from .netio import load_network

DATASETS = ("lesmis", "marieboucher")


def dataset_bytes(name: str) -> bytes:
    if name not in DATASETS:
        raise KeyError(f"unknown dataset {name!r}; available: {DATASETS}")
    return resources.files("motiflens.data").joinpath(f"{name}.json").read_bytes()


def load_dataset(name: str) -> Network:
    return load_network(dataset_bytes(name), "json")
