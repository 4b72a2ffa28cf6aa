"""Output writers."""

from hazard_rate.output.geojson import join_geojson, load_geojson, write_geojson
from hazard_rate.output.writers import load_lcoh_file, load_rates_file, read_config_hash, write_csv

__all__ = [
    "join_geojson",
    "load_geojson",
    "load_lcoh_file",
    "load_rates_file",
    "read_config_hash",
    "write_csv",
    "write_geojson",
]
