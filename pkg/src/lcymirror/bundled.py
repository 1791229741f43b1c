"""Bundled models, scripts and fibre configurations, plus JSON file loading."""
from __future__ import annotations

import json
from importlib import resources
from pathlib import Path

from .elliptic import FibreConfig, config_from_json
from .lattice import LatticeError
from .logcy import ToricModel, model_from_json, picard
from .moves import Move, script_from_json


def _dir(kind: str):
    return resources.files("lcymirror") / "data" / kind


def _names(kind: str) -> list[str]:
    return sorted(p.name[:-5] for p in _dir(kind).iterdir() if p.name.endswith(".json"))


def model_names() -> list[str]:
    return _names("models")


def script_names() -> list[str]:
    return _names("scripts")


def fibre_names() -> list[str]:
    return _names("fibres")


def _raw(kind: str, name: str) -> dict:
    p = _dir(kind) / f"{name}.json"
    if not p.is_file():
        raise LatticeError("schema", f"no bundled {kind[:-1]} named {name!r}")
    return json.loads(p.read_text(encoding="utf-8"))


def load_model(name: str) -> ToricModel:
    return model_from_json(_raw("models", name))


def load_script(name: str) -> tuple[str, list[Move]]:
    """The script's model name and its moves."""
    obj = _raw("scripts", name)
    return obj["model"], script_from_json(obj)


def load_fibres(name: str) -> tuple[ToricModel, FibreConfig]:
    obj = _raw("fibres", name)
    model = load_model(obj["model"])
    return model, config_from_json(obj, picard(model))


def read_json(path: str | Path):
    """Parse a JSON file, reporting syntax errors with line and column.

    Raises:
        LatticeError: ``schema`` on unreadable or malformed files.
    """
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise LatticeError("schema", f"{path}: {exc.strerror}") from None
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise LatticeError("schema", f"{path}: line {exc.lineno} column {exc.colno}: {exc.msg}") from None


def resolve(kind: str, ref: str):
    """Load a file path, or a bundled item when no such file exists."""
    if not Path(ref).exists() and (_dir(kind) / f"{ref}.json").is_file():
        return _raw(kind, ref)
    return read_json(ref)
