from typing import Any, TypeVar, Type, Callable, get_origin, get_args
import os
from pydantic import BaseModel
import pandas as pd


T = TypeVar("T", bound=BaseModel)

COLUMN_TYPES = [bool, int, str]


_is_list_of_any: Callable[[Any, list[type]], bool] = (
    lambda a, types: get_origin(a) is list and get_args(a)[0] in types
)


def to_frame(object: BaseModel, types: list[type] = COLUMN_TYPES) -> pd.DataFrame:
    """
    Collects the list fields of the given types into a data frame, one column per field.
    """
    fields = object.__class__.model_fields
    return pd.DataFrame(
        {
            field: getattr(object, field)
            for field, info in fields.items()
            if _is_list_of_any(info.annotation, types)
        }
    )


def write(
    object: BaseModel,
    path: str,
    types: list[type] = COLUMN_TYPES,
    ensure_parent_dir_exists: bool = False,
) -> None:
    """
    Writes a Pydantic model to a CSV file with a header row.

    note: Writes only fields that are lists of the specified types.
    """

    if ensure_parent_dir_exists:
        os.makedirs(os.path.dirname(path) or ".", exist_ok=True)

    to_frame(object, types).to_csv(path, index=False)


def read(cls: Type[T], path: str) -> T:
    """
    Reads a Pydantic model from a CSV file written by `write`.
    """
    df = pd.read_csv(path, keep_default_na=False)
    return cls.model_validate(df.to_dict("list"))
