"""
Configuration Module

Loads settings.yaml and builds option bundles from it.
"""

from .settings import (
    DEFAULTS,
    DEFAULT_CONFIG_PATH,
    load_config,
    selmer_options_from_config,
    scan_config_from_config,
)

__all__ = [
    "DEFAULTS",
    "DEFAULT_CONFIG_PATH",
    "load_config",
    "selmer_options_from_config",
    "scan_config_from_config",
]
