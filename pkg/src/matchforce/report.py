"""Invariant reports: stable serializable records with re-checkable witnesses."""

from __future__ import annotations

import hashlib
import json
import time
from pathlib import Path
from typing import Any, Callable

from .antiforcing import (
    anti_forcing_edges,
    antiforcing_number,
    is_antiforcing_set,
)
from .errors import InapplicableInvariant, NoPerfectMatching
from .forcing import Spectrum, forcing_number, is_forcing_set
from .graphs import (
    DEFAULT_CYCLE_CAP,
    DEFAULT_MATCHING_CAP,
    Graph,
    Matching,
    count_perfect_matchings,
    enumerate_perfect_matchings,
)
from .hexsys import HexSystem, alternating_hexagons, clar_number, fries_numbers
from .io import load_instance, serialize_instance

SCHEMA_VERSION = 1


def _graph_of(kind: str, obj: Graph | HexSystem) -> Graph:
    return obj.graph if kind == "hex" else obj


def _spectrum_value(s: Spectrum) -> dict[str, Any]:
    return {
        "values": list(s.values),
        "min": s.min,
        "max": s.max,
        "value_set": list(s.value_set),
    }


def _extreme(
    g: Graph,
    number_fn: Callable[[Graph, Matching], tuple[int, tuple[int, ...]]],
    pick,
    caps: dict[str, int],
) -> tuple[int, dict[str, Any]]:
    pms = enumerate_perfect_matchings(g, caps["max_matchings"])
    best = None
    for m in pms:
        value, witness = number_fn(g, m)
        if best is None or pick(value, best[0]):
            best = (value, m, witness)
    if best is None:
        raise NoPerfectMatching("graph has no perfect matching")
    value, m, witness = best
    return value, {"matching": list(m.edge_ids), "edge_set": list(witness)}


def _inv_pm_count(kind, obj, caps):
    return count_perfect_matchings(_graph_of(kind, obj), caps["max_matchings"]), None


def _inv_f(kind, obj, caps):
    g = _graph_of(kind, obj)
    fn = lambda g_, m: forcing_number(g_, m, caps["max_cycles"])  # noqa: E731
    return _extreme(g, fn, lambda v, b: v < b, caps)


def _inv_F(kind, obj, caps):
    g = _graph_of(kind, obj)
    fn = lambda g_, m: forcing_number(g_, m, caps["max_cycles"])  # noqa: E731
    return _extreme(g, fn, lambda v, b: v > b, caps)


def _inv_af(kind, obj, caps):
    g = _graph_of(kind, obj)
    fn = lambda g_, m: antiforcing_number(g_, m, caps["max_cycles"])  # noqa: E731
    return _extreme(g, fn, lambda v, b: v < b, caps)


def _inv_Af(kind, obj, caps):
    g = _graph_of(kind, obj)
    fn = lambda g_, m: antiforcing_number(g_, m, caps["max_cycles"])  # noqa: E731
    return _extreme(g, fn, lambda v, b: v > b, caps)


def _spectrum_of(g, number_fn, caps):
    pms = enumerate_perfect_matchings(g, caps["max_matchings"])
    if not pms:
        raise NoPerfectMatching("graph has no perfect matching")
    return Spectrum(tuple(number_fn(g, m)[0] for m in pms))


def _inv_f_spectrum(kind, obj, caps):
    g = _graph_of(kind, obj)
    s = _spectrum_of(g, lambda g_, m: forcing_number(g_, m, caps["max_cycles"]), caps)
    return _spectrum_value(s), None


def _inv_af_spectrum(kind, obj, caps):
    g = _graph_of(kind, obj)
    s = _spectrum_of(g, lambda g_, m: antiforcing_number(g_, m, caps["max_cycles"]), caps)
    return _spectrum_value(s), None


def _inv_clar(kind, obj, caps):
    if kind != "hex":
        raise InapplicableInvariant("clar needs a hexagonal system")
    value, (m, cells) = clar_number(obj, caps["max_matchings"])
    return value, {"matching": list(m.edge_ids), "hexagons": [list(c) for c in cells]}


def _inv_fries(kind, obj, caps):
    if kind != "hex":
        raise InapplicableInvariant("fries needs a hexagonal system")
    fr = fries_numbers(obj, caps["max_matchings"])
    value = {"max": fr.maximum, "min": fr.minimum}
    witness = {
        "max_matching": list(fr.max_witness[0].edge_ids),
        "max_hexagons": [list(c) for c in fr.max_witness[1]],
        "min_matching": list(fr.min_witness[0].edge_ids),
        "min_hexagons": [list(c) for c in fr.min_witness[1]],
    }
    return value, witness


def _inv_anti_forcing_edges(kind, obj, caps):
    return list(anti_forcing_edges(_graph_of(kind, obj))), None


REGISTRY: dict[str, Callable] = {
    "pm_count": _inv_pm_count,
    "f": _inv_f,
    "F": _inv_F,
    "af": _inv_af,
    "Af": _inv_Af,
    "f_spectrum": _inv_f_spectrum,
    "af_spectrum": _inv_af_spectrum,
    "clar": _inv_clar,
    "fries": _inv_fries,
    "anti_forcing_edges": _inv_anti_forcing_edges,
}


def compute_report(
    path: str | Path,
    invariants: list[str],
    max_matchings: int = DEFAULT_MATCHING_CAP,
    max_cycles: int = DEFAULT_CYCLE_CAP,
) -> dict[str, Any]:
    kind, obj = load_instance(path)
    caps = {"max_matchings": max_matchings, "max_cycles": max_cycles}
    canonical = serialize_instance(obj)
    entries = []
    for name in invariants:
        if name not in REGISTRY:
            raise InapplicableInvariant(f"unknown invariant {name!r}")
        start = time.perf_counter()
        value, witness = REGISTRY[name](kind, obj, caps)
        entries.append(
            {
                "name": name,
                "value": value,
                "witness": witness,
                "runtime_ms": round((time.perf_counter() - start) * 1000, 3),
            }
        )
    return {
        "schema": SCHEMA_VERSION,
        "instance": {
            "id": Path(path).stem,
            "kind": kind,
            "sha256": hashlib.sha256(canonical.encode()).hexdigest(),
        },
        "invariants": entries,
        "theorems": [],
    }


def dumps_report(report: dict[str, Any]) -> str:
    return json.dumps(report, indent=2, sort_keys=False) + "\n"


def _check_witness(name: str, value, witness, kind, obj) -> list[str]:
    problems = []
    g = _graph_of(kind, obj)
    if name in ("f", "F"):
        m = Matching(witness["matching"])
        s = witness["edge_set"]
        if len(s) != value:
            problems.append(f"{name}: witness size {len(s)} != {value}")
        elif not is_forcing_set(g, m, s):
            problems.append(f"{name}: witness is not a forcing set")
    elif name in ("af", "Af"):
        m = Matching(witness["matching"])
        s = witness["edge_set"]
        if len(s) != value:
            problems.append(f"{name}: witness size {len(s)} != {value}")
        elif not is_antiforcing_set(g, m, s):
            problems.append(f"{name}: witness is not an anti-forcing set")
    elif name == "clar":
        m = Matching(witness["matching"])
        cells = [tuple(c) for c in witness["hexagons"]]
        alt = {obj.cells[i] for i in alternating_hexagons(obj, m)}
        if len(cells) != value or not set(cells) <= alt:
            problems.append("clar: witness hexagons are not all alternating")
    elif name == "fries":
        for side in ("max", "min"):
            m = Matching(witness[f"{side}_matching"])
            cells = {tuple(c) for c in witness[f"{side}_hexagons"]}
            alt = {obj.cells[i] for i in alternating_hexagons(obj, m)}
            if cells != alt or len(cells) != value[side]:
                problems.append(f"fries: {side} witness does not re-validate")
    return problems


def replay(report: dict[str, Any], path: str | Path) -> list[str]:
    """Recompute a report against its instance; returns mismatch descriptions."""
    kind, obj = load_instance(path)
    problems = []
    canonical = serialize_instance(obj)
    digest = hashlib.sha256(canonical.encode()).hexdigest()
    if digest != report["instance"]["sha256"]:
        problems.append("instance hash differs from the report")
    for entry in report["invariants"]:
        name = entry["name"]
        caps = {"max_matchings": DEFAULT_MATCHING_CAP, "max_cycles": DEFAULT_CYCLE_CAP}
        value, _ = REGISTRY[name](kind, obj, caps)
        if value != entry["value"]:
            problems.append(f"{name}: recomputed {value!r} != reported {entry['value']!r}")
        if entry.get("witness") is not None:
            problems += _check_witness(name, entry["value"], entry["witness"], kind, obj)
    return problems
