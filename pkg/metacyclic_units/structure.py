"""
Assembly and formatting of U(F T_3m).

FG = F(G/H) + Delta(G,H) gives
U(FG) = U(F C_3) x prod_i GL_3(F_(q^d_i)), and U(F C_3) = (1 + J) x F^*
with |1 + J| = q^2 of exponent three, so the answer reads
C_3^(2n) x C_(q-1) x prod_i GL_3(F_(q^d_i)).
"""
import collections
import json
from fractions import Fraction
from typing import Any, Dict, Iterable, List, NamedTuple

from .decomposition import components
from .errors import DegreeOutOfRange, VerificationFailure
from .group import GroupParams, validate_params
from .utils import ReportWriter, verbose

MAX_EXPONENT = 8

FORMATS = ("text", "json", "rst")

RST_HEADERS = ("m", "t", "k", "n", "Unit group", "Order")

ELEMENTARY_ABELIAN_NOTE = (
    "The C3 factor has multiplicity 2n: |1 + J(FG)| = q^2 and (1 + j)^3 = 1."
)


class GLFactor(NamedTuple):
    """GL(degree, F_field_order) repeated multiplicity times."""

    degree: int
    field_order: int
    multiplicity: int


class UnitGroupStructure(NamedTuple):
    """C_3^e x C_(q-1) x prod GL_3(F_Q)^mult with its exact order."""

    m: int
    t: int
    n: int
    elementary_abelian_exponent: int
    cyclic_order: int
    gl_factors: List[GLFactor]
    total_order: int

    @property
    def q(self) -> int:
        return 3 ** self.n

    @property
    def k(self) -> int:
        return (self.m - 1) // 3


def gl_order(field_order: int, degree: int = 3) -> int:
    """|GL_degree(F_Q)| = prod over i < degree of (Q^degree - Q^i)."""
    result = 1
    for i in range(degree):
        result *= field_order ** degree - field_order ** i
    return result


def total_order(s: UnitGroupStructure) -> int:
    """The exact order, multiplied out from the listed factors."""
    result = 3 ** s.elementary_abelian_exponent * s.cyclic_order
    for factor in s.gl_factors:
        result *= gl_order(factor.field_order, factor.degree) ** factor.multiplicity
    return result


def check_exponent(n: int) -> None:
    """Reject n outside 1..MAX_EXPONENT."""
    if not 1 <= n <= MAX_EXPONENT:
        raise DegreeOutOfRange(f"n must lie in 1..{MAX_EXPONENT} (got n={n})")


def structure(m: int, t: int, n: int) -> UnitGroupStructure:
    """
    Compute U(F_(3^n) T_3m).

    Args:
        m: Order of x, 3k + 1
        t: Twist with x^y = x^t
        n: Exponent of q = 3^n

    Returns:
        The unit group, GL factors ordered by field order

    """
    p = validate_params(m, t)
    check_exponent(n)
    q = 3 ** n
    census = components(p, n)
    orders = collections.Counter(c.field_order(q) for c in census)
    gl_factors = [GLFactor(3, order, orders[order]) for order in sorted(orders)]
    # Counted per component, independently of the grouping above.
    order = q ** 2 * (q - 1)
    for component in census:
        order *= gl_order(component.field_order(q), component.matrix_size)
    s = UnitGroupStructure(p.m, p.t, n, 2 * n, q - 1, gl_factors, order)
    if total_order(s) != order:
        raise VerificationFailure("total order", "factor product disagrees")
    verbose(f"U(F{q}T_{p.order}) has order {order}")
    return s


def table(p: GroupParams, max_n: int) -> List[UnitGroupStructure]:
    """One structure per n = 1..max_n."""
    check_exponent(max_n)
    return [structure(p.m, p.t, n) for n in range(1, max_n + 1)]


def density(s: UnitGroupStructure) -> Fraction:
    """Exact proportion of units in FG, total_order / q^(3m)."""
    return Fraction(s.total_order, s.q ** (3 * s.m))


def format_text(s: UnitGroupStructure) -> str:
    """Render as ``C3^2 x C2 x GL(3,F3)^4``."""
    parts = [f"C3^{s.elementary_abelian_exponent}", f"C{s.cyclic_order}"]
    for factor in s.gl_factors:
        name = f"GL({factor.degree},F{factor.field_order})"
        if factor.multiplicity > 1:
            name = f"{name}^{factor.multiplicity}"
        parts.append(name)
    return " x ".join(parts)


def to_dict(s: UnitGroupStructure) -> Dict[str, Any]:
    """The JSON document, big integers as decimal strings."""
    factors: List[Dict[str, Any]] = [
        {"kind": "C", "order": "3", "multiplicity": s.elementary_abelian_exponent},
        {"kind": "C", "order": str(s.cyclic_order), "multiplicity": 1},
    ]
    for factor in s.gl_factors:
        factors.append(
            {
                "kind": "GL",
                "degree": factor.degree,
                "field_order": str(factor.field_order),
                "multiplicity": factor.multiplicity,
            }
        )
    return {
        "m": s.m,
        "t": s.t,
        "n": s.n,
        "q": str(s.q),
        "factors": factors,
        "total_order": str(s.total_order),
    }


def format_json(s: UnitGroupStructure) -> str:
    return json.dumps(to_dict(s), indent=2)


def parse(text: str) -> UnitGroupStructure:
    """
    Read a structure back from its JSON form.

    Raises:
        ValueError: The document does not follow the schema

    """
    document = json.loads(text)
    try:
        cyclic = [f for f in document["factors"] if f["kind"] == "C"]
        elementary = next(f for f in cyclic if f["order"] == "3")
        other = next(f for f in cyclic if f is not elementary)
        gl_factors = [
            GLFactor(int(f["degree"]), int(f["field_order"]), int(f["multiplicity"]))
            for f in document["factors"]
            if f["kind"] == "GL"
        ]
        s = UnitGroupStructure(
            int(document["m"]),
            int(document["t"]),
            int(document["n"]),
            int(elementary["multiplicity"]),
            int(other["order"]),
            gl_factors,
            int(document["total_order"]),
        )
    except (KeyError, StopIteration, TypeError) as error:
        raise ValueError(f"not a unit group document: {error}") from error
    if str(s.q) != document["q"] or total_order(s) != s.total_order:
        raise ValueError("inconsistent unit group document")
    return s


def _row(s: UnitGroupStructure) -> List[str]:
    return [
        str(s.m),
        str(s.t),
        str(s.k),
        str(s.n),
        format_text(s),
        str(s.total_order),
    ]


def format_rst(structures: Iterable[UnitGroupStructure], title: str = "") -> str:
    """A Sphinx ``csv-table`` with one structure per row."""
    writer = ReportWriter()
    writer.csv_table(RST_HEADERS, [_row(s) for s in structures], title=title)
    writer.blank_line()
    writer.add_output(ELEMENTARY_ABELIAN_NOTE)
    return writer.render()


def format_structure(s: UnitGroupStructure, mode: str = "text") -> str:
    """Render one structure in ``text``, ``json`` or ``rst`` mode."""
    if mode == "text":
        return format_text(s)
    if mode == "json":
        return format_json(s)
    if mode == "rst":
        return format_rst([s])
    raise ValueError(f"unknown format {mode!r}; expected one of {FORMATS}")
