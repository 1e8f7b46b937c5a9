"""JSON file formats.

Tower files use 1-based ``"j,l"`` keys::

    {"type": "flag_bott", "n": [2, 1, 1], "A": {"2,1": [[1, 2, 0], [0, 0, 0]], ...}}
    {"type": "generalized_bott", "n": [2, 1], "a": {"2,1": [1]}}

Fan files use 0-based ray indices::

    {"dim": 2, "rays": [[1, 0], ...], "max_cones": [[0, 1], ...], "labels": [...]}
"""

import json

from ..errors import FanError, InputError
from ..fan import Fan
from ..lattice import as_matrix, as_vector, primitive
from ..tower import FlagBottTower, GeneralizedBottTower, flag_tower, generalized_tower

FLAG = "flag_bott"
GENERALIZED = "generalized_bott"


def read_json(path):
    try:
        with open(path, encoding="utf-8") as fh:
            return json.load(fh)
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from exc
    except json.JSONDecodeError as exc:
        raise InputError(f"{path}: invalid JSON ({exc.msg} at line {exc.lineno})") from exc


def _parse_key(key):
    try:
        j, l = (int(x) for x in key.split(","))
    except (AttributeError, ValueError):
        raise InputError(f"bad stage key {key!r}, expected \"j,l\"") from None
    return j, l


def tower_from_doc(doc):
    if not isinstance(doc, dict):
        raise InputError("tower file must hold a JSON object")
    kind = doc.get("type")
    dims = doc.get("n")
    if not isinstance(dims, list):
        raise InputError("tower file needs a list \"n\" of stage sizes")
    if kind == FLAG:
        entries = doc.get("A", {})
        if not isinstance(entries, dict):
            raise InputError("\"A\" must map \"j,l\" to matrices")
        return flag_tower(dims, {_parse_key(k): as_matrix(v) for k, v in entries.items()})
    if kind == GENERALIZED:
        entries = doc.get("a", {})
        if not isinstance(entries, dict):
            raise InputError("\"a\" must map \"j,l\" to vectors")
        return generalized_tower(dims, {_parse_key(k): as_vector(v) for k, v in entries.items()})
    raise InputError(f"unknown tower type {kind!r}")


def tower_to_doc(t):
    def key(jl):
        return f"{jl[0]},{jl[1]}"

    if isinstance(t, FlagBottTower):
        return {"type": FLAG, "n": list(t.dims),
                "A": {key(k): [list(r) for r in t.mats[k]] for k in sorted(t.mats)}}
    if isinstance(t, GeneralizedBottTower):
        return {"type": GENERALIZED, "n": list(t.dims),
                "a": {key(k): list(t.vecs[k]) for k in sorted(t.vecs)}}
    raise InputError(f"not a tower: {t!r}")


def load_tower(path):
    return tower_from_doc(read_json(path))


def fan_to_doc(f):
    doc = {"dim": f.dim, "rays": [list(r) for r in f.rays],
           "max_cones": [list(c) for c in f.max_cones]}
    if f.labels is not None:
        doc["labels"] = list(f.labels)
    return doc


def fan_from_doc(doc):
    if not isinstance(doc, dict):
        raise InputError("fan file must hold a JSON object")
    try:
        dim = doc["dim"]
        rays = [as_vector(r) for r in doc["rays"]]
        cones = [as_vector(c) for c in doc["max_cones"]]
    except (KeyError, TypeError) as exc:
        raise InputError(f"malformed fan file: {exc}") from exc
    for r in rays:
        if any(r) and primitive(r) != r:
            raise InputError(f"ray {list(r)} is not primitive")
    try:
        return Fan(dim, rays, cones, doc.get("labels"))
    except FanError as exc:
        raise InputError(str(exc)) from exc


def load_fan(path):
    return fan_from_doc(read_json(path))


def dumps(doc):
    return json.dumps(doc, indent=1) + "\n"
