from .commands import COMMANDS, Outcome, Settings
from .documents import ArrangementDocument, Document, Hyperplane, InputDocument, parse_document
from .main import build_parser, main
from .types import Report

__all__ = [
    "ArrangementDocument",
    "COMMANDS",
    "Document",
    "Hyperplane",
    "InputDocument",
    "Outcome",
    "Report",
    "Settings",
    "build_parser",
    "main",
    "parse_document",
]
