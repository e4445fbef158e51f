from pydantic import BaseModel, ConfigDict
from typing import Type, TypeVar
from kkdrop.file import write_csv, read_csv
from kkdrop.file.csv import to_frame

T = TypeVar("T", bound="Table")


class Table(BaseModel):
    """
    A model whose list fields are the columns of a table.
    """

    model_config = ConfigDict(extra="forbid")

    def write_to_csv(self, path: str) -> None:
        write_csv(self, path)

    @classmethod
    def read_from_csv(cls: Type[T], path: str) -> T:
        return read_csv(cls, path)

    def to_text(self) -> str:
        """
        Renders the table as aligned plain text without an index column.
        """
        df = to_frame(self)
        if df.empty:
            return "(no rows)"
        return df.to_string(index=False)
