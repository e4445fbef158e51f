from typing import Callable, TypeVar

from fastapi import Body, Depends, FastAPI, HTTPException, Query, status
from fastapi.responses import ORJSONResponse, RedirectResponse

from .algebra import DimensionDropAlgebra, HomKind
from .arithmetic import lcm
from .auth.schemes import api_key_auth
from .coeff_ktheory import (
    ConeDecomposition,
    ExactnessReport,
    GpElement,
    KTheoryReport,
    cone_report,
    ktheory_report,
    verify_bockstein_exactness,
)
from .config import Settings
from .errors import InconsistencyError
from .kk import KKCanonicalForm, KKElement, KKGroupInfo, kk_canonical, kk_group_info
from .lifting import (
    AuditReport,
    LiftInput,
    LiftReport,
    SearchInput,
    SearchResult,
    audit_claims,
    family_element,
    lift_report,
    search_counterexamples,
)
from .triples import TripleReport, triple_report

T = TypeVar("T")

tags_metadata = [
    {
        "name": "ktheory",
        "description": "K-theory with Z_p coefficients, Bockstein maps and the positive cone.",
    },
    {
        "name": "kk",
        "description": "Morphism triples and KK classes between dimension drop algebras.",
    },
    {
        "name": "lifting",
        "description": "Order, K-homology and span tests for lifting KK classes to homomorphisms.",
    },
]

ERROR_RESPONSES = {
    400: {"description": "Invalid input or violated precondition."},
    500: {"description": "A runtime cross-check failed. The witness is in the detail."},
}


app = FastAPI(
    title="kkdrop",
    description="K-theory with coefficients and KK-lifting tests for generalized dimension drop interval algebras.",
    version="1.0.1",
    root_path=Settings().root_path,
    openapi_tags=tags_metadata,
    default_response_class=ORJSONResponse,
)


def _algebra(literal: str) -> DimensionDropAlgebra:
    return DimensionDropAlgebra.parse(literal)


def _guarded(action: Callable[[], T]) -> T:
    """
    Runs `action` and maps precondition failures to 400 and failed cross-checks to 500.
    """
    try:
        return action()
    except InconsistencyError as e:
        raise HTTPException(
            status_code=status.HTTP_500_INTERNAL_SERVER_ERROR,
            detail={"message": str(e), "witness": e.witness},
        )
    except ValueError as e:
        raise HTTPException(
            status_code=status.HTTP_400_BAD_REQUEST,
            detail=str(e),
        )


@app.get("/", include_in_schema=False)
async def root():
    return RedirectResponse(url="/docs")


@app.get(
    "/ktheory",
    dependencies=[Depends(api_key_auth)],
    tags=["ktheory"],
    responses=ERROR_RESPONSES,
)
def get_ktheory(
    algebra: str = Query(..., examples=["2,12,3"]),
    p: int | None = Query(default=None, ge=2, description="Default: m."),
) -> KTheoryReport:
    """
    Returns K0(A; G_p), the Bockstein maps and the cone generators.
    """
    return _guarded(lambda: ktheory_report(_algebra(algebra), p or _algebra(algebra).m))


@app.get(
    "/exactness",
    dependencies=[Depends(api_key_auth)],
    tags=["ktheory"],
    responses=ERROR_RESPONSES,
)
def get_exactness(
    algebra: str = Query(..., examples=["2,12,3"]),
    p: int | None = Query(default=None, ge=2, description="Default: m."),
) -> ExactnessReport:
    return _guarded(
        lambda: verify_bockstein_exactness(_algebra(algebra), p or _algebra(algebra).m)
    )


@app.post(
    "/cone/decompose",
    dependencies=[Depends(api_key_auth)],
    tags=["ktheory"],
    responses=ERROR_RESPONSES,
)
def post_cone_decompose(element: GpElement = Body(...)) -> ConeDecomposition:
    """
    Writes a positive element as a non-negative combination of the cone generators.
    """
    return _guarded(lambda: cone_report(element))


@app.get(
    "/triples/induced",
    dependencies=[Depends(api_key_auth)],
    tags=["kk"],
    responses=ERROR_RESPONSES,
)
def get_induced_triples(
    source: str = Query(..., examples=["2,12,3"]),
    target: str = Query(..., examples=["2,24,3"]),
    p: int | None = Query(default=None, ge=2, description="Default: lcm(m, n)."),
    kind: HomKind | None = Query(default=None, description="Default: all four."),
) -> TripleReport:
    def action() -> TripleReport:
        a, b = _algebra(source), _algebra(target)
        return triple_report(a, b, p or lcm(a.m, b.m), kind)

    return _guarded(action)


@app.post(
    "/kk/canonical",
    dependencies=[Depends(api_key_auth)],
    tags=["kk"],
    responses=ERROR_RESPONSES,
)
def post_kk_canonical(element: KKElement = Body(...)) -> KKCanonicalForm:
    return _guarded(lambda: kk_canonical(element))


@app.get(
    "/kk/group",
    dependencies=[Depends(api_key_auth)],
    tags=["kk"],
    responses=ERROR_RESPONSES,
)
def get_kk_group(
    source: str = Query(..., examples=["2,12,3"]),
    target: str = Query(..., examples=["2,12,3"]),
) -> KKGroupInfo:
    """
    Returns the stated structure of KK(A, B) next to the enumerated torsion counts.
    """
    return _guarded(lambda: kk_group_info(_algebra(source), _algebra(target)))


@app.post(
    "/lift",
    dependencies=[Depends(api_key_auth)],
    tags=["lifting"],
    responses=ERROR_RESPONSES,
)
def post_lift(input: LiftInput = Body(...)) -> LiftReport:
    def action() -> LiftReport:
        if input.coeffs is not None:
            e = KKElement(source=input.source, target=input.target, coeffs=input.coeffs)
        else:
            e = family_element(input.source, input.target, input.family.x, input.family.d)
        p = input.p or lcm(input.source.m, input.target.m)
        return lift_report(e, p, input.mode, family=input.family)

    return _guarded(action)


@app.post(
    "/search",
    dependencies=[Depends(api_key_auth)],
    tags=["lifting"],
    responses=ERROR_RESPONSES,
)
def post_search(input: SearchInput = Body(...)) -> SearchResult:
    """
    Scans family elements for order preserving elements outside the non-negative span.
    """
    return _guarded(
        lambda: search_counterexamples(
            input.source,
            input.target,
            input.p or lcm(input.source.m, input.target.m),
            input.x_max if input.x_max is not None else input.source.m - 1,
            include_torsion=input.include_torsion,
            mode=input.mode,
            workers=input.workers,
        )
    )


@app.get(
    "/audit",
    dependencies=[Depends(api_key_auth)],
    tags=["lifting"],
    responses=ERROR_RESPONSES,
)
def get_audit() -> AuditReport:
    return _guarded(audit_claims)
