import typing

from ...core.pydantic_utilities import UniversalBaseModel


class Report(UniversalBaseModel):
    """The JSON document every command writes to standard output."""

    command: typing.List[str]
    input_digest: typing.Optional[str] = None
    results: typing.Any = None
    warnings: typing.List[str] = []
