from enum import Enum
from aenum import MultiValueEnum


class EqualityMode(str, MultiValueEnum):
    """How two triples are compared."""

    MAP = "map", "m"
    STRICT = "strict", "s", "entrywise"

    @classmethod
    def select(cls, mode: str) -> "EqualityMode":
        try:
            return cls(mode.strip().lower())
        except ValueError:
            raise ValueError(f"Unknown equality mode: {mode!r}")


class OutputFormat(str, Enum):
    """Rendering of command line reports."""

    TEXT = "text"
    JSON = "json"

    @classmethod
    def select(cls, format: str) -> "OutputFormat":
        match format:
            case "text":
                return cls.TEXT
            case "json":
                return cls.JSON
            case _:
                raise ValueError(f"Unknown output format: {format}")
