import os
from pydantic import BaseModel, ConfigDict, Field
from kkdrop.dtypes import EqualityMode

EQUALITY_ENV_VAR = "KKDROP_EQUALITY"
API_KEY_ENV_VAR = "KKDROP_API_KEY"
ROOT_PATH_ENV_VAR = "KKDROP_SERVER_ROOT_PATH"


class Settings(BaseModel):
    """
    Runtime settings of kkdrop.

    note: Fields that are not passed explicitly are read from the environment.
    """

    model_config = ConfigDict(extra="forbid", frozen=True)

    equality_mode: EqualityMode = Field(
        default_factory=lambda: EqualityMode.select(
            os.getenv(EQUALITY_ENV_VAR, EqualityMode.MAP.value)
        ),
        description=f"Default equality mode for triples. Environment: `{EQUALITY_ENV_VAR}`.",
    )
    api_key: str | None = Field(
        default_factory=lambda: os.getenv(API_KEY_ENV_VAR),
        description=f"Key accepted by the web API. Environment: `{API_KEY_ENV_VAR}`.",
    )
    root_path: str = Field(
        default_factory=lambda: os.getenv(ROOT_PATH_ENV_VAR, ""),
        description=f"Root path of the web API. Environment: `{ROOT_PATH_ENV_VAR}`.",
    )


def resolve_mode(mode: EqualityMode | None) -> EqualityMode:
    """
    Returns `mode`, or the configured default if `mode` is None.
    """
    if mode is None:
        return Settings().equality_mode
    return mode
