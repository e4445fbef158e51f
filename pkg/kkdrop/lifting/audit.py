import logging
from kkdrop.algebra import DimensionDropAlgebra
from kkdrop.arithmetic import bezout_canonical
from kkdrop.dtypes import EqualityMode
from kkdrop.errors import InconsistencyError
from kkdrop.kk import KKElement, kk_equal
from .actions import dl_closed_form, family_element, lift_report
from .schemas.audit import AuditReport, AuditRow, Claim
from .schemas.family import FamilyElement

logger = logging.getLogger(__name__)

M0, M, M1 = 2, 12, 3
P = 12
EXPECTED_BEZOUT = (2, -1)
X_VALUES = (1, 2, 3, 5)


def _candidates(rows: list[AuditRow], attribute: str) -> list[int]:
    return [r.x for r in rows if r.dl_positive and getattr(r, attribute) is None]


def audit_claims() -> AuditReport:
    """
    Recomputes the published counterexample scenario on I[2,12,3] at p = 12.

    Every claim is listed with the values computed for it under both equality modes.
    No claim is marked as right or wrong.

    Raises:
        InconsistencyError: If the Bézout constants of the scenario are not (2, -1).
    """
    algebra = DimensionDropAlgebra(m0=M0, m=M, m1=M1)
    bezout = bezout_canonical(M0, M1)
    if (bezout.beta0, bezout.beta1) != EXPECTED_BEZOUT:
        raise InconsistencyError(
            f"Bézout constants of (2, 3) are {bezout.beta0, bezout.beta1}, expected {EXPECTED_BEZOUT}.",
            witness=[bezout.beta0, bezout.beta1],
        )

    rows = []
    for x in X_VALUES:
        e = family_element(algebra, algebra, x, 0)
        family = FamilyElement(x=x, d=0)
        by_mode = {
            mode: lift_report(e, P, mode, family=family) for mode in EqualityMode
        }
        closed_form = dl_closed_form(algebra, x).holds
        report = by_mode[EqualityMode.MAP]
        if closed_form != report.dl_positive:
            logger.warning(
                "x = %d: closed form gives %s, generator test gives %s",
                x, closed_form, report.dl_positive,
            )
        rows.append(
            AuditRow(
                x=x,
                coeffs=e.coeffs[:2],
                dl_closed_form=closed_form,
                dl_positive=report.dl_positive,
                js_liftable=report.js_positive,
                span_witness_map=report.span_witness,
                span_witness_strict=by_mode[EqualityMode.STRICT].span_witness,
            )
        )
    by_x = {r.x: r for r in rows}

    def _verdicts(x: int) -> str:
        r = by_x[x]
        return (
            f"dl_closed_form={r.dl_closed_form}, dl_positive={r.dl_positive}, "
            f"js_liftable={r.js_liftable}, span(map)={r.span_witness_map}, "
            f"span(strict)={r.span_witness_strict}"
        )

    ten_five = KKElement(source=algebra, target=algebra, coeffs=(10, -5, 0, 0))
    four_one = KKElement(source=algebra, target=algebra, coeffs=(4, -1, 0, 0))
    claims = [
        Claim(
            quote="take $x=2$",
            statement="x = 2 satisfies the order inequalities.",
            computed=_verdicts(2),
        ),
        Claim(
            quote="can not be lifted to a homomorphism",
            statement="4δ0 - 2δ1 fails the Jiang-Su criterion.",
            computed=_verdicts(2),
        ),
        Claim(
            quote="$10\\delta_0-5\\delta_1=4\\delta_0-\\delta_1$",
            statement="10δ0 - 5δ1 and 4δ0 - δ1 are the same KK class.",
            computed=", ".join(
                f"kk_equal({mode.value})={kk_equal(ten_five, four_one, mode)}"
                for mode in EqualityMode
            ),
        ),
        Claim(
            quote="which also fits our purpose",
            statement="x = 5 is order preserving and not liftable.",
            computed=_verdicts(5),
        ),
        Claim(
            quote="$x=3$ and $x=5$ are all the possibilities",
            statement="The counterexamples are exactly x = 3 and x = 5.",
            computed=(
                f"order preserving outside the span among x in {list(X_VALUES)}: "
                f"map={_candidates(rows, 'span_witness_map')}, "
                f"strict={_candidates(rows, 'span_witness_strict')}"
            ),
        ),
    ]
    return AuditReport(algebra=algebra, p=P, bezout=bezout, rows=rows, claims=claims)
