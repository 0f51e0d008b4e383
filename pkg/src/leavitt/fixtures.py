"""Small named graphs shipped with the package."""

from __future__ import annotations

from importlib import resources

from .graph import Graph, parse_graph

NAMES = ("E2", "R2", "GL", "C1", "C3", "A2", "Y", "C3X")


def fixture_text(name: str) -> str:
    return resources.files(__package__).joinpath("data").joinpath(f"{name}.graph").read_text()


def fixture(name: str) -> Graph:
    if name not in NAMES:
        raise KeyError(f"no fixture named {name!r}; available: {', '.join(NAMES)}")
    return parse_graph(fixture_text(name))


def all_fixtures() -> dict[str, Graph]:
    return {name: fixture(name) for name in NAMES}
