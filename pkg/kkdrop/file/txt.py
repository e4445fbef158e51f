from pathlib import Path


def write(
    content: str,
    path: str | Path,
    ensure_parent_dir_exists: bool = False,
) -> None:
    """
    Writes a text report as UTF-8. Reports carry symbols like δ0, id̄ and μ.
    """
    target = Path(path)
    if ensure_parent_dir_exists:
        target.parent.mkdir(parents=True, exist_ok=True)
    target.write_text(content, encoding="utf-8")


def read(path: str | Path) -> str:
    return Path(path).read_text(encoding="utf-8")
