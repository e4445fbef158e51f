import logging
from concurrent.futures import ProcessPoolExecutor, as_completed
from tqdm import tqdm
from kkdrop.algebra import DimensionDropAlgebra, check_valid, k1_order
from kkdrop.coeff_ktheory import require_multiple
from kkdrop.config import resolve_mode
from kkdrop.dtypes import EqualityMode
from kkdrop.errors import BadMultiplicity
from .actions import family_element, lift_report
from .schemas.family import FamilyElement
from .schemas.report import LiftReport
from .schemas.search import SearchResult

logger = logging.getLogger(__name__)


def _scan(
    source: DimensionDropAlgebra,
    target: DimensionDropAlgebra,
    p: int,
    x: int,
    ds: list[int],
    mode: EqualityMode,
) -> list[LiftReport]:
    # every x >= m is in the span by the relation rewrite, which holds as maps only
    if mode == EqualityMode.MAP and x >= source.m:
        logger.debug("pruned x = %d >= m = %d", x, source.m)
        return []
    reports = []
    for d in ds:
        report = lift_report(
            family_element(source, target, x, d),
            p,
            mode,
            family=FamilyElement(x=x, d=d),
        )
        if report.dl_positive and not report.span_member:
            reports.append(report)
    return reports


def search_counterexamples(
    source: DimensionDropAlgebra,
    target: DimensionDropAlgebra,
    p: int,
    x_max: int,
    include_torsion: bool = False,
    mode: EqualityMode | None = None,
    workers: int = 1,
    progress: bool = False,
) -> SearchResult:
    """
    Scans the family elements with 0 <= x <= x_max for order preserving elements outside the span.

    With `include_torsion` every d in [0, m/(m0·m1)) is scanned, otherwise d = 0 only.
    The reports are sorted by (x, d) for any number of workers.

    Raises:
        ModulusNotMultiple: If m or n does not divide p.
        BadMultiplicity: If x_max < 0.
    """
    mode = resolve_mode(mode)
    check_valid(source)
    check_valid(target)
    require_multiple(source.m, p)
    require_multiple(target.m, p)
    if x_max < 0:
        raise BadMultiplicity(f"x_max must be non-negative, got {x_max}.")
    ds = list(range(k1_order(source))) if include_torsion else [0]
    xs = range(x_max + 1)

    reports: list[LiftReport] = []
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as executor:
            futures = [
                executor.submit(_scan, source, target, p, x, ds, mode) for x in xs
            ]
            for future in tqdm(
                as_completed(futures),
                total=len(futures),
                desc="Searching",
                disable=not progress,
            ):
                reports.extend(future.result())
    else:
        for x in tqdm(xs, desc="Searching", disable=not progress):
            reports.extend(_scan(source, target, p, x, ds, mode))

    reports.sort(key=lambda r: (r.family.x, r.family.d))
    logger.info(
        "%d candidates among x <= %d on %s -> %s (%s)",
        len(reports), x_max, source, target, mode.value,
    )
    return SearchResult(
        source=source,
        target=target,
        p=p,
        x_max=x_max,
        include_torsion=include_torsion,
        equality_mode=mode,
        reports=reports,
    )
