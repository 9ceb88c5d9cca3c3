"""
Configuration Loading

Reads settings.yaml with PyYAML, merges it over the built-in defaults and
applies environment overrides. Library functions never read this; the CLI
and the scanner turn it into typed option bundles.
"""

from copy import deepcopy
from pathlib import Path
from typing import Any, Dict, Optional, Union
import logging
import os

import yaml

from ..selmer.criterion import SelmerOptions
from ..selmer.scanner import ScanConfig

logger = logging.getLogger(__name__)

DEFAULT_CONFIG_PATH = Path(__file__).parent / "settings.yaml"

DEFAULTS: Dict[str, Any] = {
    "series": {"default_precision": 60, "mt_precision": 30},
    "numerics": {"mp_dps": 50, "tolerance": 1e-6, "twisted_trace_sign": -1},
    "elliptic": {"prime_bound": 10000, "torsion_order_cap": 12, "enumeration_cutoff": 3},
    "lfunction": {"tolerance": 1e-8},
    "selmer": {"cross_check": True, "with_lvalue": False, "sha_safety_factor": 10.0},
    "scan": {"num_workers": 1, "output_file": None, "resume": True},
    "output": {"verbosity": 1, "format": "text"},
}

# env var -> (section, key)
ENV_OVERRIDES = {
    "ONAN_PRECISION": ("series", "mt_precision"),
    "ONAN_DPS": ("numerics", "mp_dps"),
}


def _merge(base: Dict[str, Any], update: Dict[str, Any]) -> Dict[str, Any]:
    merged = deepcopy(base)
    for key, value in update.items():
        if isinstance(value, dict) and isinstance(merged.get(key), dict):
            merged[key] = _merge(merged[key], value)
        else:
            merged[key] = value
    return merged


def load_config(path: Optional[Union[str, Path]] = None) -> Dict[str, Any]:
    """
    Load configuration from YAML.

    Args:
        path: Settings file (default: config/settings.yaml)

    Returns:
        Configuration dictionary with every section present

    Raises:
        FileNotFoundError: If the file does not exist
        ValueError: If an environment override is not an integer
    """
    path = Path(path) if path is not None else DEFAULT_CONFIG_PATH
    if not path.exists():
        raise FileNotFoundError(f"Config file not found: {path}")

    with open(path, "r") as f:
        loaded = yaml.safe_load(f) or {}
    config = _merge(DEFAULTS, loaded)

    for env_var, (section, key) in ENV_OVERRIDES.items():
        raw = os.environ.get(env_var)
        if raw is None:
            continue
        try:
            config[section][key] = int(raw)
        except ValueError:
            raise ValueError(f"{env_var} must be an integer, got {raw!r}") from None
        logger.debug("%s overrides %s.%s = %s", env_var, section, key, raw)

    return config


def selmer_options_from_config(config: Dict[str, Any], **overrides) -> SelmerOptions:
    """Build SelmerOptions from a loaded config; keyword overrides win."""
    values = dict(
        cross_check=config["selmer"]["cross_check"],
        with_lvalue=config["selmer"]["with_lvalue"],
        precision=config["series"]["mt_precision"],
        tolerance=config["numerics"]["tolerance"],
        dps=config["numerics"]["mp_dps"],
        l_tolerance=config["lfunction"]["tolerance"],
        sha_safety_factor=config["selmer"]["sha_safety_factor"],
    )
    values.update({k: v for k, v in overrides.items() if v is not None})
    return SelmerOptions(**values)


def scan_config_from_config(
    config: Dict[str, Any],
    D_min: int,
    D_max: int = -1,
    options: Optional[SelmerOptions] = None,
    **overrides
) -> ScanConfig:
    """Build a ScanConfig from a loaded config; keyword overrides win."""
    values = dict(
        num_workers=config["scan"]["num_workers"],
        output_file=config["scan"]["output_file"],
        resume=config["scan"]["resume"],
    )
    values.update({k: v for k, v in overrides.items() if v is not None})
    return ScanConfig(
        D_min=D_min,
        D_max=D_max,
        options=options or selmer_options_from_config(config),
        **values,
    )
