"""Shipped problem files for the worked examples used across the test suite."""

from importlib.resources import files

NAMES = (
    "ideal_census_vshape",
    "perfect_r1_z5",
    "partial_perfect_z6",
    "partial_perfect_z6_chain",
    "mds_z5_len6",
    "mds_z5_len3",
    "iperfect_not_mds_z6",
    "mds_chain_z6",
    "mds_equal_blocks_z5",
    "iperfect_z9_repetition",
    "iperfect_z9_mds",
)


def fixture_path(name: str) -> str:
    """Filesystem path of a shipped fixture (name without extension)."""
    if name not in NAMES:
        raise KeyError(f"unknown fixture {name!r}; known: {', '.join(NAMES)}")
    return str(files(__package__).joinpath(f"{name}.json"))
