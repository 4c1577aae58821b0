"""Documents shipped with the package: fans, characteristic pairs and arrangements used by the tests and examples."""

from importlib import resources

FIXTURES = (
    "concurrent_lines",
    "dependent_lambda",
    "generic_lines",
    "hirzebruch",
    "missing_cone",
    "octahedral",
    "projective_plane",
    "quadrant",
)


def fixture_text(name: str) -> str:
    if name not in FIXTURES:
        raise KeyError(f"Unknown fixture {name!r}; expected one of {', '.join(FIXTURES)}")
    return resources.files(__name__).joinpath(f"{name}.json").read_text(encoding="utf-8")

