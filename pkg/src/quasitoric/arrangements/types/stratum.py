import typing

from ...core.pydantic_utilities import UniversalBaseModel


class Stratum(UniversalBaseModel):
    """Points lying on exactly the members ``label`` (1-based)."""

    label: typing.List[int]
    dimension: int
    rank: int
