from typing import TypeVar, Type
import os
import orjson
from pydantic import BaseModel

T = TypeVar("T", bound=BaseModel)


def dumps(object: BaseModel, round_trip: bool = False) -> str:
    """
    Renders a Pydantic model as indented JSON in field order.

    note: `round_trip=True` skips computed fields so the output validates back into the model.
    """
    data = object.model_dump(mode="json", by_alias=True, round_trip=round_trip)
    return orjson.dumps(data, option=orjson.OPT_INDENT_2).decode()


def write(
    object: BaseModel,
    path: str,
    ensure_parent_dir_exists: bool = False,
) -> None:
    """
    Writes a Pydantic model to a JSON file.
    """

    if ensure_parent_dir_exists:
        os.makedirs(os.path.dirname(path) or ".", exist_ok=True)

    with open(path, "w") as f:
        f.write(dumps(object, round_trip=True))


def read(cls: Type[T], path: str) -> T:
    """
    Reads a Pydantic model from a JSON file.
    """
    with open(path, "rb") as f:
        data = orjson.loads(f.read())
    return cls.model_validate(data)
