"""Evolving sanction norms on spatial role games.

Thin wrapper over the native ``_normlab`` module: configs may be passed as
dicts, JSON strings or file paths, and run records come back as dicts.
"""

from __future__ import annotations

import json
import os
from typing import Any, Iterable, Sequence

from . import _normlab as _core
from ._normlab import ConfigError, ContractViolation, IoError

__all__ = [
    "ConfigError",
    "ContractViolation",
    "IoError",
    "apply_sanctions",
    "baseline",
    "config_hash",
    "episode_trace",
    "eval_norm",
    "evolve",
    "normalize_config",
    "preset",
    "presets",
    "render",
    "render_rules",
    "render_svg",
    "run_command",
    "wilcoxon_rank_sum",
]


def _config_text(config: Any) -> str:
    if isinstance(config, dict):
        return json.dumps(config)
    if isinstance(config, (str, os.PathLike)) and os.path.isfile(config):
        with open(config, encoding="utf-8") as fh:
            return fh.read()
    if isinstance(config, str):
        return config
    raise TypeError("config must be a dict, JSON text or a path to a JSON file")


def presets() -> list[str]:
    return list(_core.presets())


def preset(env_id: str) -> dict:
    return json.loads(_core.preset_json(env_id))


def normalize_config(config: Any) -> dict:
    """The fully defaulted, validated configuration."""
    return json.loads(_core.normalize_config(_config_text(config)))


def config_hash(config: Any) -> str:
    return _core.config_hash(_config_text(config))


def eval_norm(matrix: Sequence[Sequence[float]] | None, config: Any, seed: int,
              env: str | None = None) -> dict:
    """Scores a fixed norm (or no norm) over the configured eval repeats."""
    rows = None if matrix is None else [list(map(float, r)) for r in matrix]
    score, repeats, roles, usage = _core.eval_norm(rows, _config_text(config), env, seed)
    return {"score": score, "repeat_scores": list(repeats), "final_roles": list(roles),
            "usage": list(usage)}


def episode_trace(matrix: Sequence[Sequence[float]] | None, config: Any, seed: int,
                  env: str | None = None) -> str:
    """One traced episode as CSV: t, mean_reward, per-role counts, env_total."""
    rows = None if matrix is None else [list(map(float, r)) for r in matrix]
    return _core.episode_trace(rows, _config_text(config), env, seed)


def evolve(config: Any, seed: int, env: str | None = None) -> dict:
    return json.loads(_core.evolve(_config_text(config), env, seed))


def baseline(mode: str, config: Any, seed: int, env: str | None = None) -> dict:
    """mode is one of global, selfish, altruist, selfish_altruist."""
    return json.loads(_core.baseline(mode, _config_text(config), env, seed))


def run_command(command: str, config: Any, mode: str = "") -> tuple[str, list[dict]]:
    """Runs evolve/baseline/sweep exactly as the CLI does, writing files."""
    out_dir, records = _core.run_command(command, _config_text(config), mode)
    return out_dir, [json.loads(r) for r in records]


def render(record_paths: Iterable[str | os.PathLike], out_dir: str | os.PathLike) -> list[str]:
    return list(_core.render([os.fspath(p) for p in record_paths], os.fspath(out_dir)))


def render_svg(record: dict) -> str:
    return _core.render_svg(json.dumps(record))


def render_rules(matrix: Sequence[Sequence[float]], game: str = "settlement") -> list[str]:
    return list(_core.render_rules([list(map(float, r)) for r in matrix], game))


def apply_sanctions(roles: Sequence[int], rewards: Sequence[float],
                    matrix: Sequence[Sequence[float]], rows: int, cols: int,
                    seed: int) -> tuple[list[float], list[int]]:
    """One sanction stage on a rows x cols torus. Returns (rewards, usage)."""
    out, usage = _core.apply_sanctions(list(roles), list(map(float, rewards)),
                                       [list(map(float, r)) for r in matrix], rows, cols, seed)
    return list(out), list(usage)


def wilcoxon_rank_sum(x: Sequence[float], y: Sequence[float]) -> dict:
    u, p, exact = _core.wilcoxon_rank_sum(list(map(float, x)), list(map(float, y)))
    return {"u": u, "p_value": p, "exact": exact}
