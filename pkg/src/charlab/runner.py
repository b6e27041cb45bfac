"""Experiment runner: config parsing, artifact writing, manifests.

Configs are flat INI files (section headers + key=value lines).  Runs are
deterministic: a fixed (config, seed) pair reproduces byte-identical
artifacts, and parallel execution equals serial execution because work
units are mapped in order and merged deterministically.  Artifacts are
written atomically (temp file + rename) and a manifest.json records the
config hash, tool version, sweep indices and per-file checksums.
"""

from __future__ import annotations

import configparser
import csv
import hashlib
import io
import json
import multiprocessing
import os
from dataclasses import dataclass, field

from . import __version__
from .errors import CharlabError, ParseError


@dataclass
class ExperimentConfig:
    scenario: str
    seed: int = 0
    cap: int = 1 << 24
    params: dict = field(default_factory=dict)

    def canonical_text(self) -> str:
        lines = [f"scenario={self.scenario}", f"seed={self.seed}", f"cap={self.cap}"]
        for k in sorted(self.params):
            lines.append(f"{k}={self.params[k]}")
        return "\n".join(lines) + "\n"

    def hash(self) -> str:
        return hashlib.sha256(self.canonical_text().encode()).hexdigest()


def load_config(path) -> ExperimentConfig:
    parser = configparser.ConfigParser()
    parser.optionxform = str  # parameter names are case-sensitive (R, E, ...)
    try:
        read = parser.read(path)
    except configparser.Error as exc:
        raise ParseError(f"malformed config {path}: {exc}") from exc
    if not read:
        raise ParseError(f"config file {path} not found or unreadable")
    if "experiment" not in parser:
        raise ParseError("config needs an [experiment] section")
    exp = parser["experiment"]
    scenario = exp.get("scenario")
    if not scenario:
        raise ParseError("config needs experiment.scenario")
    try:
        seed = int(exp.get("seed", "0"))
        cap = int(exp.get("cap", str(1 << 24)))
    except ValueError as exc:
        raise ParseError(f"bad integer in [experiment]: {exc}") from exc
    params = dict(parser["params"]) if "params" in parser else {}
    return ExperimentConfig(scenario=scenario, seed=seed, cap=cap, params=params)


@dataclass
class Check:
    name: str
    passed: bool
    detail: str = ""


@dataclass
class ScenarioResult:
    checks: list = field(default_factory=list)
    csv_artifacts: dict = field(default_factory=dict)  # name -> list of rows
    json_artifacts: dict = field(default_factory=dict)  # name -> json-able object

    def record(self, name, passed, detail=""):
        self.checks.append(Check(name, bool(passed), str(detail)))

    @property
    def ok(self):
        return all(c.passed for c in self.checks)


class RunContext:
    """Carries seed/cap/parallelism into scenario bodies."""

    def __init__(self, config: ExperimentConfig, jobs: int = 1):
        self.config = config
        self.seed = config.seed
        self.cap = config.cap
        self.jobs = max(1, jobs)

    def param(self, key, default=None, cast=None):
        raw = self.config.params.get(key)
        if raw is None:
            return default
        return cast(raw) if cast else raw

    def int_list(self, key, default):
        raw = self.config.params.get(key)
        if raw is None:
            return list(default)
        try:
            return [int(s) for s in str(raw).split(",") if s != ""]
        except ValueError as exc:
            raise ParseError(f"bad integer list for {key}: {raw!r}") from exc

    def pmap(self, fn, items):
        """Order-preserving map, parallel when jobs > 1."""
        items = list(items)
        if self.jobs == 1 or len(items) <= 1:
            return [fn(item) for item in items]
        with multiprocessing.Pool(min(self.jobs, len(items))) as pool:
            return pool.map(fn, items)


def _atomic_write(path, data: bytes):
    tmp = path + ".tmp"
    with open(tmp, "wb") as fh:
        fh.write(data)
    os.replace(tmp, path)


def _csv_bytes(rows) -> bytes:
    buf = io.StringIO()
    csv.writer(buf, lineterminator="\n").writerows(rows)
    return buf.getvalue().encode()


def _json_bytes(obj) -> bytes:
    return (json.dumps(obj, indent=2, sort_keys=True, default=str) + "\n").encode()


def write_artifacts(result: ScenarioResult, config: ExperimentConfig, out_dir) -> dict:
    os.makedirs(out_dir, exist_ok=True)
    checksums = {}
    for name, rows in sorted(result.csv_artifacts.items()):
        data = _csv_bytes(rows)
        _atomic_write(os.path.join(out_dir, name), data)
        checksums[name] = hashlib.sha256(data).hexdigest()
    for name, obj in sorted(result.json_artifacts.items()):
        data = _json_bytes(obj)
        _atomic_write(os.path.join(out_dir, name), data)
        checksums[name] = hashlib.sha256(data).hexdigest()
    summary = {
        "scenario": config.scenario,
        "checks": [{"name": c.name, "passed": c.passed, "detail": c.detail} for c in result.checks],
        "ok": result.ok,
    }
    data = _json_bytes(summary)
    _atomic_write(os.path.join(out_dir, "summary.json"), data)
    checksums["summary.json"] = hashlib.sha256(data).hexdigest()
    manifest = {
        "tool_version": __version__,
        "config_hash": config.hash(),
        "scenario": config.scenario,
        "seed": config.seed,
        "start_index": 0,
        "end_index": max(len(result.checks) - 1, 0),
        "files": checksums,
    }
    _atomic_write(os.path.join(out_dir, "manifest.json"), _json_bytes(manifest))
    return manifest


def run(config=None, scenario=None, out="charlab-out", jobs=1, seed=None, cap=None) -> int:
    """Execute a scenario; returns the process exit code (0 ok, 1 failed
    checks, 2 parse errors)."""
    from . import scenarios

    try:
        if config is not None:
            cfg = load_config(config)
        elif scenario is not None:
            cfg = ExperimentConfig(scenario=scenario)
        else:
            raise ParseError("need --config or --scenario")
        if scenario is not None:
            cfg.scenario = scenario
        if seed is not None:
            cfg.seed = seed
        if cap is not None:
            cfg.cap = cap
        fn = scenarios.get(cfg.scenario)
        ctx = RunContext(cfg, jobs=jobs)
        result = fn(ctx)
    except ParseError as exc:
        print(f"parse error: {exc}")
        return 2
    except CharlabError as exc:
        print(f"error in scenario {scenario or config}: {type(exc).__name__}: {exc}")
        return 1
    write_artifacts(result, cfg, out)
    for c in result.checks:
        status = "PASS" if c.passed else "FAIL"
        print(f"[{status}] {cfg.scenario}: {c.name}" + (f" ({c.detail})" if c.detail else ""))
    return 0 if result.ok else 1
