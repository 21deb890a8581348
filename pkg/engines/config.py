"""Settings file: a flat INI under <dir>/.trishape/config, read as section.key."""

from dataclasses import dataclass, fields, replace
from pathlib import Path
from typing import Dict, Tuple

STORE_NAME = ".trishape"
CONFIG_NAME = "config"

DEFAULT_CONFIG_TEXT = (
    "[classify]\n"
    "tol = 1e-9\n\n"
    "[solver]\n"
    "scan_steps = 1024\n"
    "root_tol = 1e-13\n"
    "curve_samples = 256\n"
    "minimize_tol = 1e-13\n\n"
    "[certificate]\n"
    "scan_step = 1e-4\n"
    "bracket_width = 1e-12\n\n"
    "[export]\n"
    "samples = 360\n"
    "format = json\n"
    "view = 1,1,1\n\n"
    "[sample]\n"
    "n = 100000\n"
    "seed = 0\n"
    "workers = 1\n"
    "block_size = 65536\n"
)


def config_path(root) -> Path:
    return Path(root) / STORE_NAME / CONFIG_NAME


def read_config(root) -> Dict[str, str]:
    """Parse the config INI file into a flat dict; missing file gives {}."""
    config = {}
    path = config_path(root)
    if not path.exists():
        return config

    section = ""
    for line in path.read_text().splitlines():
        line = line.strip()
        if not line or line.startswith("#") or line.startswith(";"):
            continue
        if line.startswith("[") and line.endswith("]"):
            section = line[1:-1]
            continue
        if "=" in line:
            key, _, val = line.partition("=")
            key = key.strip()
            val = val.strip()
            if section:
                config[f"{section}.{key}"] = val
            else:
                config[key] = val
    return config


def _parse_view(text: str) -> Tuple[float, float, float]:
    parts = [float(v) for v in text.split(",")]
    if len(parts) != 3:
        raise ValueError(f"export.view needs three comma-separated numbers, got {text!r}")
    return (parts[0], parts[1], parts[2])


@dataclass(frozen=True)
class Settings:
    """Typed view of the config file, defaults filled in."""

    classify_tol: float = 1e-9
    scan_steps: int = 1024
    root_tol: float = 1e-13
    curve_samples: int = 256
    minimize_tol: float = 1e-13
    certificate_scan_step: float = 1e-4
    bracket_width: float = 1e-12
    export_samples: int = 360
    export_format: str = "json"
    export_view: Tuple[float, float, float] = (1.0, 1.0, 1.0)
    sample_n: int = 100000
    sample_seed: int = 0
    sample_workers: int = 1
    sample_block_size: int = 65536

    def with_overrides(self, **overrides) -> "Settings":
        """Copy with every non-None override applied."""
        known = {f.name for f in fields(self)}
        unknown = set(overrides) - known
        if unknown:
            raise ValueError(f"Unknown settings: {sorted(unknown)}")
        return replace(self, **{k: v for k, v in overrides.items() if v is not None})


# settings field -> (config key, parser)
_KEYS = {
    "classify_tol": ("classify.tol", float),
    "scan_steps": ("solver.scan_steps", int),
    "root_tol": ("solver.root_tol", float),
    "curve_samples": ("solver.curve_samples", int),
    "minimize_tol": ("solver.minimize_tol", float),
    "certificate_scan_step": ("certificate.scan_step", float),
    "bracket_width": ("certificate.bracket_width", float),
    "export_samples": ("export.samples", int),
    "export_format": ("export.format", str),
    "export_view": ("export.view", _parse_view),
    "sample_n": ("sample.n", int),
    "sample_seed": ("sample.seed", int),
    "sample_workers": ("sample.workers", int),
    "sample_block_size": ("sample.block_size", int),
}


def load_settings(root) -> Settings:
    """Settings from <root>/.trishape/config; unset keys keep their defaults."""
    raw = read_config(root)
    values = {}
    for name, (key, parse) in _KEYS.items():
        if key in raw:
            try:
                values[name] = parse(raw[key])
            except ValueError as e:
                raise ValueError(f"Bad value for {key} in {config_path(root)}: {raw[key]!r}") from e
    return Settings(**values)
