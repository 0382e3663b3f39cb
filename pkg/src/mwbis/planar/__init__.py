from .band import BandResult, Slice, build_slices, solve_band, solve_band_solution
from .leveled import LeveledPlanarInstance, build_leveled, chain_lifts, validate_leveled
from .ptas import Band, layer_decompose, ptas, solve_layering
from .tables import SliceTable, extend_table, mask_table, merge_tables, witness

__all__ = [
    "Band",
    "BandResult",
    "LeveledPlanarInstance",
    "Slice",
    "SliceTable",
    "build_leveled",
    "build_slices",
    "chain_lifts",
    "extend_table",
    "layer_decompose",
    "mask_table",
    "merge_tables",
    "ptas",
    "solve_band",
    "solve_band_solution",
    "solve_layering",
    "validate_leveled",
    "witness",
]
