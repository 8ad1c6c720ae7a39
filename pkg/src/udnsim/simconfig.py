"""Config-file support.

INI-style files with the sections [arena], [radio], [handover],
[mobility], [sweep]. Unknown sections or keys are rejected outright so a
typo cannot silently fall back to a default.
"""

from __future__ import annotations

import configparser

from .errors import ConfigError
from .runner import ScenarioConfig, build_grid

# section -> key -> ScenarioConfig field (scalar settings)
_SCALAR_KEYS = {
    "arena": {
        "width_m": ("arena_width_m", float),
        "height_m": ("arena_height_m", float),
    },
    "radio": {
        "carrier_freq_ghz": ("carrier_freq_ghz", float),
        "bandwidth_hz": ("bandwidth_hz", float),
        "noise_figure_db": ("noise_figure_db", float),
        "rx_antenna_gain_dbi": ("rx_antenna_gain_dbi", float),
        "shadowing_sigma_db": ("shadowing_sigma_db", float),
        "coverage_m": ("coverage_m", float),
        "tx_power_dbm": ("tx_power_dbm", float),
        "antenna_gain_dbi": ("antenna_gain_dbi", float),
        "gnb_height_m": ("gnb_height_m", float),
    },
    "handover": {
        "ho_hys_db": ("ho_hys_db", float),
        "sinr_min_db": ("sinr_min_db", float),
        "exec_hold_tics": ("exec_hold_tics", int),
        "window_len": ("window_len", int),
        "cio_db": ("cio_db", float),
        "measure_during_exec": ("measure_during_exec", "bool"),
    },
    "mobility": {
        "duration_tics": ("duration_tics", int),
        "tic_ms": ("tic_ms", float),
        "route_start_x": (("route_start", 0), float),
        "route_start_y": (("route_start", 1), float),
        "route_end_x": (("route_end", 0), float),
        "route_end_y": (("route_end", 1), float),
    },
}

_SWEEP_KEYS = {
    "cases": "str_list",
    "densities": "int_list",
    "ttt": "int_list",
    "velocities": "int_list",
    "replicates": int,
    "master_seed": int,
    "parallelism": int,
    "fixed_topology": "bool",
}


def _parse_bool(raw: str, where: str) -> bool:
    val = raw.strip().lower()
    if val in ("true", "yes", "on", "1"):
        return True
    if val in ("false", "no", "off", "0"):
        return False
    raise ConfigError(f"{where}: expected a boolean, got {raw!r}")


def _parse_int_list(raw: str, where: str) -> list[int]:
    """Comma lists with ranges: '1,2,5' or '1-12' or '10,20-40'."""
    out = []
    for piece in raw.split(","):
        piece = piece.strip()
        if not piece:
            continue
        if "-" in piece[1:]:
            lo, _, hi = piece.partition("-")
            try:
                out.extend(range(int(lo), int(hi) + 1))
            except ValueError:
                raise ConfigError(f"{where}: bad range {piece!r}") from None
        else:
            try:
                out.append(int(piece))
            except ValueError:
                raise ConfigError(f"{where}: bad integer {piece!r}") from None
    if not out:
        raise ConfigError(f"{where}: empty list")
    return out


def _parse_scalar(raw: str, kind, where: str):
    if kind == "bool":
        return _parse_bool(raw, where)
    try:
        return kind(raw)
    except ValueError:
        raise ConfigError(f"{where}: cannot parse {raw!r} as {kind.__name__}") from None


class SweepSettings:
    """Parsed config file: axis lists plus ScenarioConfig field overrides."""

    def __init__(self):
        self.cases: list[str] | None = None
        self.densities: list[int] | None = None
        self.ttts: list[int] | None = None
        self.velocities: list[int] | None = None
        self.replicates: int | None = None
        self.master_seed: int | None = None
        self.parallelism: int | None = None
        self.fixed_topology: bool | None = None
        self.overrides: dict = {}
        self._route_parts: dict = {}

    def finish_routes(self):
        for name in ("route_start", "route_end"):
            parts = self._route_parts.get(name)
            if parts is None:
                continue
            if set(parts) != {0, 1}:
                raise ConfigError(f"[mobility]: {name} needs both _x and _y")
            self.overrides[name] = (parts[0], parts[1])


def load_config(path) -> SweepSettings:
    parser = configparser.ConfigParser(interpolation=None)
    try:
        with open(path, encoding="utf-8") as fh:
            parser.read_file(fh)
    except OSError as exc:
        raise ConfigError(f"cannot read config {path}: {exc}") from exc
    except configparser.Error as exc:
        raise ConfigError(f"{path}: {exc}") from exc

    settings = SweepSettings()
    for section in parser.sections():
        if section == "sweep":
            _load_sweep_section(parser[section], settings, path)
        elif section in _SCALAR_KEYS:
            _load_scalar_section(section, parser[section], settings, path)
        else:
            raise ConfigError(f"{path}: unknown section [{section}]")
    settings.finish_routes()
    return settings


def _load_scalar_section(section, items, settings: SweepSettings, path):
    known = _SCALAR_KEYS[section]
    for key, raw in items.items():
        if key not in known:
            raise ConfigError(f"{path}: unknown key {key!r} in [{section}]")
        target, kind = known[key]
        value = _parse_scalar(raw, kind, f"{path} [{section}] {key}")
        if isinstance(target, tuple):
            name, index = target
            settings._route_parts.setdefault(name, {})[index] = value
        else:
            settings.overrides[target] = value


def _load_sweep_section(items, settings: SweepSettings, path):
    for key, raw in items.items():
        if key not in _SWEEP_KEYS:
            raise ConfigError(f"{path}: unknown key {key!r} in [sweep]")
        kind = _SWEEP_KEYS[key]
        where = f"{path} [sweep] {key}"
        if kind == "str_list":
            values = [p.strip().upper() for p in raw.split(",") if p.strip()]
            if not values:
                raise ConfigError(f"{where}: empty list")
            settings.cases = values
        elif kind == "int_list":
            values = _parse_int_list(raw, where)
            if key == "densities":
                settings.densities = values
            elif key == "ttt":
                settings.ttts = values
            else:
                settings.velocities = values
        elif kind == "bool":
            settings.fixed_topology = _parse_bool(raw, where)
        else:
            value = _parse_scalar(raw, kind, where)
            setattr(settings, key if key != "master_seed" else "master_seed", value)


def serialize_settings(settings: SweepSettings) -> str:
    """Render settings back to INI text; load_config(serialize_settings(s)) == s."""
    lines = []
    sweep = []
    if settings.cases is not None:
        sweep.append(("cases", ",".join(settings.cases)))
    if settings.densities is not None:
        sweep.append(("densities", ",".join(map(str, settings.densities))))
    if settings.ttts is not None:
        sweep.append(("ttt", ",".join(map(str, settings.ttts))))
    if settings.velocities is not None:
        sweep.append(("velocities", ",".join(map(str, settings.velocities))))
    if settings.replicates is not None:
        sweep.append(("replicates", str(settings.replicates)))
    if settings.master_seed is not None:
        sweep.append(("master_seed", str(settings.master_seed)))
    if settings.parallelism is not None:
        sweep.append(("parallelism", str(settings.parallelism)))
    if settings.fixed_topology is not None:
        sweep.append(("fixed_topology", "true" if settings.fixed_topology else "false"))
    if sweep:
        lines.append("[sweep]")
        lines.extend(f"{k} = {v}" for k, v in sweep)
        lines.append("")

    # reverse map: ScenarioConfig field -> (section, key)
    field_home = {}
    for section, keys in _SCALAR_KEYS.items():
        for key, (target, _kind) in keys.items():
            if isinstance(target, str):
                field_home[target] = (section, key)
    by_section: dict[str, list[tuple[str, str]]] = {}
    for field, value in settings.overrides.items():
        if field in ("route_start", "route_end"):
            x, y = value
            by_section.setdefault("mobility", []).append((f"{field}_x", repr(float(x))))
            by_section.setdefault("mobility", []).append((f"{field}_y", repr(float(y))))
            continue
        section, key = field_home[field]
        if isinstance(value, bool):
            text = "true" if value else "false"
        else:
            text = repr(value) if isinstance(value, float) else str(value)
        by_section.setdefault(section, []).append((key, text))
    for section in ("arena", "radio", "handover", "mobility"):
        if section in by_section:
            lines.append(f"[{section}]")
            lines.extend(f"{k} = {v}" for k, v in by_section[section])
            lines.append("")
    return "\n".join(lines) + ("\n" if lines and lines[-1] != "" else "")


def grid_from_settings(settings: SweepSettings) -> list[ScenarioConfig]:
    """Materialize a scenario grid from parsed settings (full study axes by default)."""
    common = dict(settings.overrides)
    if settings.replicates is not None:
        common["replicates"] = settings.replicates
    if settings.master_seed is not None:
        common["master_seed"] = settings.master_seed
    if settings.fixed_topology is not None:
        common["fixed_topology"] = settings.fixed_topology
    kwargs = {}
    if settings.cases is not None:
        kwargs["cases"] = settings.cases
    if settings.densities is not None:
        kwargs["densities"] = settings.densities
    if settings.ttts is not None:
        kwargs["ttts"] = settings.ttts
    if settings.velocities is not None:
        kwargs["velocities"] = settings.velocities
    return build_grid(**kwargs, **common)
