"""Join per-country results onto boundary GeoJSON."""

import copy
import json
from pathlib import Path
from typing import Any

import structlog

from hazard_rate.errors import ErrorCode, InputError

logger = structlog.get_logger()

# Property names that hold an alpha-3 code in common boundary datasets
ISO3_KEYS = ("iso3", "ISO_A3", "ADM0_A3", "iso_a3")


def load_geojson(path: Path | str) -> dict[str, Any]:
    """Read a FeatureCollection."""
    path = Path(path)
    try:
        with open(path, encoding="utf-8") as f:
            data = json.load(f)
    except (OSError, json.JSONDecodeError) as e:
        raise InputError(ErrorCode.MALFORMED_ROW, f"unreadable GeoJSON {path}: {e}", path=str(path)) from e

    if data.get("type") != "FeatureCollection" or not isinstance(data.get("features"), list):
        raise InputError(ErrorCode.MALFORMED_ROW, f"{path.name}: not a FeatureCollection", path=str(path))
    return data


def feature_iso3(feature: dict[str, Any], known: set[str] | None = None) -> str | None:
    """First usable alpha-3 code among the feature's properties."""
    props = feature.get("properties") or {}
    for key in ISO3_KEYS:
        code = str(props.get(key) or "").strip().upper()
        if len(code) == 3 and code.isalpha() and (known is None or code in known):
            return code
    return None


def join_geojson(
    boundaries: dict[str, Any],
    properties: dict[str, dict[str, Any]],
) -> dict[str, Any]:
    """
    Copy a FeatureCollection and attach per-country properties.

    Every feature receives every property name; unmatched features get
    null values, and the feature count never changes.

    Args:
        boundaries: Boundary FeatureCollection
        properties: iso3 -> {name: value}

    Returns:
        New FeatureCollection
    """
    names = sorted({name for props in properties.values() for name in props})
    joined = copy.deepcopy(boundaries)
    matched = 0

    for feature in joined["features"]:
        iso3 = feature_iso3(feature, set(properties))
        values = properties.get(iso3, {}) if iso3 else {}
        target = feature.setdefault("properties", {}) or {}
        feature["properties"] = target
        for name in names:
            target[name] = values.get(name)
        if values:
            matched += 1

    logger.info("Joined GeoJSON", features=len(joined["features"]), matched=matched)
    return joined


def write_geojson(
    collection: dict[str, Any],
    path: Path | str,
    config_hash: str,
) -> Path:
    """Write a FeatureCollection with the config hash as a top-level member."""
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    payload = dict(collection)
    payload["config_hash"] = config_hash
    with open(path, "w", encoding="utf-8", newline="") as f:
        json.dump(payload, f, ensure_ascii=False, sort_keys=True, separators=(",", ":"))
        f.write("\n")
    return path
