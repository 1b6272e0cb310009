"""JSON readers and writers for channels, compositions, graphs and codes."""

import hashlib
import json
from pathlib import Path

import numpy as np

from .channel import (
    CodeBlock,
    ConditionalComposition,
    ConfusabilityGraph,
    CQChannel,
    PureStateChannel,
    check_probability,
    classical_embed,
)
from .linalg import InvalidInputError


def file_digest(path) -> str:
    return hashlib.sha256(Path(path).read_bytes()).hexdigest()


def load_json(path) -> dict:
    try:
        with open(path, encoding="utf-8") as fh:
            data = json.load(fh)
    except OSError as exc:
        raise InvalidInputError(f"cannot read {path}: {exc.strerror}") from exc
    except json.JSONDecodeError as exc:
        raise InvalidInputError(f"{path}: malformed JSON ({exc.msg} at line {exc.lineno})") from exc
    if not isinstance(data, dict):
        raise InvalidInputError(f"{path}: top-level JSON value must be an object")
    return data


def _complex(obj, name: str) -> np.ndarray:
    if isinstance(obj, dict):
        if "re" not in obj:
            raise InvalidInputError(f"{name}: missing 're' field")
        re = np.asarray(obj["re"], dtype=float)
        im = np.asarray(obj.get("im", np.zeros_like(re)), dtype=float)
        if re.shape != im.shape:
            raise InvalidInputError(f"{name}: 're' and 'im' shapes differ ({re.shape} vs {im.shape})")
        return re + 1j * im
    return np.asarray(obj, dtype=float).astype(complex)


def encode_complex(a) -> dict:
    a = np.asarray(a, dtype=complex)
    return {"re": a.real.tolist(), "im": a.imag.tolist()}


def channel_from_dict(data: dict):
    """``CQChannel`` from ``states``, ``PureStateChannel`` from ``vectors``, classical from ``W``."""
    try:
        if "vectors" in data:
            vecs = np.array([_complex(v, f"vector {i}") for i, v in enumerate(data["vectors"])])
            return PureStateChannel(vecs)
        if "states" in data:
            states = np.array([_complex(s, f"state {i}") for i, s in enumerate(data["states"])])
            if "dim" in data and states.ndim == 3 and states.shape[1] != int(data["dim"]):
                raise InvalidInputError(f"channel: dim {data['dim']} differs from state size {states.shape[1]}")
            return CQChannel(states)
        if "W" in data:
            return classical_embed(np.asarray(data["W"], dtype=float))
    except (TypeError, ValueError) as exc:
        if isinstance(exc, InvalidInputError):
            raise
        raise InvalidInputError(f"channel: {exc}") from exc
    raise InvalidInputError("channel: expected one of the fields 'states', 'vectors' or 'W'")


def channel_to_dict(ch) -> dict:
    if isinstance(ch, PureStateChannel):
        return {"vectors": [encode_complex(v) for v in ch.vectors]}
    return {"dim": ch.dim, "states": [encode_complex(s) for s in ch.states]}


def composition_from_dict(data: dict) -> np.ndarray:
    if "P" not in data:
        raise InvalidInputError("composition: missing field 'P'")
    return check_probability(np.asarray(data["P"], dtype=float))


def conditional_from_dict(data: dict) -> ConditionalComposition:
    if "V" not in data:
        raise InvalidInputError("conditional composition: missing field 'V'")
    return ConditionalComposition.from_matrix(np.asarray(data["V"], dtype=float))


def graph_from_dict(data: dict) -> ConfusabilityGraph:
    if "n" not in data:
        raise InvalidInputError("graph: missing field 'n'")
    n = int(data["n"])
    if n < 1:
        raise InvalidInputError(f"graph: n must be positive, got {n}")
    edges = data.get("edges", [])
    if any(len(e) != 2 for e in edges):
        raise InvalidInputError("graph: every edge must be a pair [i, j]")
    return ConfusabilityGraph.from_edges(n, [(int(i), int(j)) for i, j in edges])


def graph_to_dict(G: ConfusabilityGraph) -> dict:
    return {"n": G.n, "edges": [list(e) for e in G.edges]}


def code_from_dict(data: dict) -> CodeBlock:
    if "codewords" not in data:
        raise InvalidInputError("code: missing field 'codewords'")
    words = np.asarray(data["codewords"])
    k = int(data["alphabet_size"]) if "alphabet_size" in data else int(words.max()) + 1
    return CodeBlock(words, k)


def code_to_dict(code: CodeBlock) -> dict:
    return {"alphabet_size": code.alphabet_size, "codewords": code.codewords.tolist()}


def dumps(obj) -> str:
    """Canonical JSON text; identical objects always serialize to identical bytes."""
    return json.dumps(jsonable(obj), sort_keys=True, indent=2, allow_nan=False) + "\n"


def jsonable(obj):
    """Convert numpy scalars/arrays and non-finite floats into plain JSON values.

    Infinities and NaN become the strings ``"inf"``, ``"-inf"`` and ``"nan"``.
    """
    if isinstance(obj, dict):
        return {str(k): jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [jsonable(v) for v in obj]
    if isinstance(obj, np.ndarray):
        return jsonable(obj.tolist())
    if isinstance(obj, (bool, np.bool_)):
        return bool(obj)
    if isinstance(obj, (int, np.integer)):
        return int(obj)
    if isinstance(obj, (float, np.floating)):
        x = float(obj)
        if np.isnan(x):
            return "nan"
        if np.isinf(x):
            return "inf" if x > 0 else "-inf"
        return x
    return obj
