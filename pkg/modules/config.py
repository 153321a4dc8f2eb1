#!/usr/bin/env python3
"""
config.py - Configuration management module for recolor

This module provides the default settings, environment overrides (RECOLOR_BUDGET_NODES,
RECOLOR_BUDGET_SECS, RECOLOR_WORKERS, optionally from a .env file), JSON config files,
the JSON schemas used to validate reports, and table formatting for the CLI.
"""

import os
import json
import logging
from typing import Any, Dict, Iterable, List, Optional, Sequence, Tuple

import jsonschema
from dotenv import load_dotenv

# Try to import tabulate for better table formatting
try:
    from tabulate import tabulate
    TABULATE_AVAILABLE = True
except ImportError:
    TABULATE_AVAILABLE = False
    logger = logging.getLogger("recolor.config")
    logger.warning("tabulate module not found. Tables will be displayed in simple format.")
    logger.warning("To install: pip install tabulate")

# Setup logging
logger = logging.getLogger("recolor.config")

# Constants
SCRIPT_DIR = os.path.dirname(os.path.dirname(os.path.abspath(__file__)))
CONFIG_DIR = os.path.join(SCRIPT_DIR, "config")
CONFIG_FILE_PATH = os.path.join(CONFIG_DIR, "default.json")
RESULTS_DIR = os.path.join(SCRIPT_DIR, "results")

# Default configuration
DEFAULT_CONFIG = {
    "budget_nodes": 2_000_000,
    "budget_secs": 60.0,
    "hamilton_expansions": None,
    "workers": 4,
    "brute_force_limit": 3000,
    "block_limit": 12,
    "output_format": "text"
}

ENV_OVERRIDES = {
    "RECOLOR_BUDGET_NODES": ("budget_nodes", int),
    "RECOLOR_BUDGET_SECS": ("budget_secs", float),
    "RECOLOR_WORKERS": ("workers", int),
}

CONFIG_SCHEMA = {
    "type": "object",
    "properties": {
        "budget_nodes": {"type": "integer", "minimum": 1},
        "budget_secs": {"type": "number", "exclusiveMinimum": 0},
        "hamilton_expansions": {"type": ["integer", "null"], "minimum": 1},
        "workers": {"type": "integer", "minimum": 1},
        "brute_force_limit": {"type": "integer", "minimum": 0},
        "block_limit": {"type": "integer", "minimum": 1},
        "output_format": {"enum": ["text", "json"]}
    },
    "additionalProperties": False
}

REPORT_SCHEMA = {
    "type": "object",
    "required": ["graph", "n", "k", "rows"],
    "properties": {
        "graph": {"type": "string"},
        "n": {"type": "integer", "minimum": 0},
        "k": {"type": "integer", "minimum": 1},
        "g": {"type": ["integer", "null"]},
        "h": {"type": ["integer", "null"]},
        "undecided": {"type": "boolean"},
        "rows": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["j", "connected"],
                "properties": {
                    "j": {"type": "integer", "minimum": 1},
                    "connected": {"type": "boolean"},
                    "hamiltonian": {"type": ["boolean", "null"]},
                    "status": {"type": ["string", "null"]},
                    "certificate": {"type": ["object", "null"]}
                }
            }
        }
    }
}

CODE_SCHEMA = {
    "type": "object",
    "required": ["graph", "k", "j", "length", "sequence"],
    "properties": {
        "graph": {"type": "string"},
        "k": {"type": "integer", "minimum": 1},
        "j": {"type": "integer", "minimum": 1},
        "length": {"type": "integer", "minimum": 0},
        "sequence": {"type": "array", "items": {"type": "string"}},
        "constructor": {"type": "string"},
        "notes": {"type": "object"}
    }
}

FINDING_SCHEMA = {
    "type": "object",
    "required": ["graph", "predicate", "k"],
    "properties": {
        "graph": {"type": "string"},
        "predicate": {"enum": ["h-increase", "conjecture", "table"]},
        "k": {"type": "integer"},
        "values": {"type": "object"},
        "certificates": {"type": "object"}
    }
}

_active_config: Optional[Dict[str, Any]] = None


def validate_json_file(file_path: str) -> Tuple[bool, Optional[Dict]]:
    """
    Validate a JSON file and return its contents if valid.

    Args:
        file_path: Path to the JSON file

    Returns:
        Tuple[bool, Optional[Dict]]: A tuple containing a boolean indicating if the file is valid,
                                    and the parsed JSON data if valid, None otherwise
    """
    try:
        with open(file_path, 'r') as f:
            data = json.load(f)
        return True, data
    except json.JSONDecodeError as e:
        logger.error(f"Invalid JSON in {file_path}: {e}")
        return False, None
    except Exception as e:
        logger.error(f"Error reading {file_path}: {e}")
        return False, None


def validate_document(data: Any, schema: Dict) -> Tuple[bool, Optional[str]]:
    """
    Validate a JSON-compatible document against one of the schemas above.

    Returns:
        Tuple[bool, Optional[str]]: validity and the first error message, if any
    """
    try:
        jsonschema.validate(instance=data, schema=schema)
        return True, None
    except jsonschema.ValidationError as e:
        return False, e.message


def load_config(config_path: Optional[str] = None) -> Dict[str, Any]:
    """
    Build the active configuration.

    Defaults are overlaid by a JSON config file (when given, or when config/default.json
    exists) and then by environment variables, which may come from a local .env file.

    Args:
        config_path: Optional path to a JSON config file

    Returns:
        Dict[str, Any]: The merged configuration
    """
    global _active_config
    config = DEFAULT_CONFIG.copy()

    path = config_path or (CONFIG_FILE_PATH if os.path.exists(CONFIG_FILE_PATH) else None)
    if path:
        is_valid, data = validate_json_file(path)
        if is_valid and isinstance(data, dict):
            ok, message = validate_document(data, CONFIG_SCHEMA)
            if ok:
                config.update(data)
                logger.debug(f"Loaded configuration from {path}")
            else:
                logger.error(f"Ignoring invalid configuration in {path}: {message}")

    load_dotenv()
    for variable, (key, cast) in ENV_OVERRIDES.items():
        raw = os.environ.get(variable)
        if raw is None or raw == "":
            continue
        try:
            value = cast(raw)
        except ValueError:
            logger.warning(f"Ignoring {variable}={raw!r}: not a valid {cast.__name__}")
            continue
        if value <= 0:
            logger.warning(f"Ignoring {variable}={raw!r}: must be positive")
            continue
        config[key] = value

    _active_config = config
    return config


def get_setting(name: str) -> Any:
    """Return one setting from the active configuration, loading it on first use."""
    if _active_config is None:
        load_config()
    return _active_config.get(name, DEFAULT_CONFIG.get(name))


def apply_overrides(**overrides: Any) -> Dict[str, Any]:
    """Apply non-None overrides (CLI flags) on top of the active configuration."""
    if _active_config is None:
        load_config()
    for key, value in overrides.items():
        if value is not None:
            _active_config[key] = value
    return _active_config


def reset_config() -> None:
    """Forget the active configuration so the next lookup reloads it."""
    global _active_config
    _active_config = None


def format_table(headers: Sequence[str], rows: Iterable[Sequence[Any]]) -> str:
    """
    Format rows as a table.

    Args:
        headers: Column headers
        rows: Row values

    Returns:
        str: The rendered table
    """
    rows = [list(row) for row in rows]
    if TABULATE_AVAILABLE:
        return tabulate(rows, headers=headers, tablefmt="simple")

    # Simple format
    cells: List[List[str]] = [[str(h) for h in headers]] + [[str(c) for c in row] for row in rows]
    widths = [max(len(row[i]) for row in cells) for i in range(len(headers))]
    lines = ["  ".join(cell.ljust(widths[i]) for i, cell in enumerate(cells[0]))]
    lines.append("  ".join("-" * w for w in widths))
    for row in cells[1:]:
        lines.append("  ".join(cell.ljust(widths[i]) for i, cell in enumerate(row)))
    return "\n".join(lines)
