from fastapi import Depends, HTTPException, status
from fastapi.security.api_key import APIKeyHeader
from kkdrop.config import Settings

auth_scheme = APIKeyHeader(name="x-api-key", auto_error=False)


def api_key_auth(api_key: str | None = Depends(auth_scheme)) -> None:
    expected = Settings().api_key
    if expected is None or api_key != expected:
        raise HTTPException(
            status_code=status.HTTP_401_UNAUTHORIZED,
            detail="Forbidden",
        )
