"""Evaluation of every inequality against a graph, with machine-checkable verdicts.

Closed-form right-hand sides are exposed as plain functions of the parameters
(``n``, ``a``, ``b``, ``e``). The graph forms return a :class:`BoundReport`
comparing the bound to the exact observed quantity. Bounds that are rational in
the parameters also carry the exact value, so equality cases can be checked
without rounding.

Tolerance: a lower bound holds iff ``observed >= bound - EPS * max(1, |bound|)``,
an upper bound iff ``e <= bound + EPS * max(1, |bound|)`` (``<`` for the strict
one). ``|slack|`` within the same margin marks the case tight.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import Iterable, Sequence

from .counting import c4_count, d_value, girth, path3_count, walk_count
from .detect import contains_c6, contains_cube
from .errors import DomainError
from .graph import BipartiteView, Graph, bipartition

__all__ = [
    "EPS",
    "BOUND_IDS",
    "CERTIFIED_IDS",
    "GRAPH_BOUNDS",
    "BIPARTITE_BOUNDS",
    "HOLDS",
    "VIOLATED",
    "PRECONDITION_FAILED",
    "ASYMPTOTIC_ONLY",
    "UPPER_ON_EDGES",
    "LOWER_ON_COUNT",
    "BoundReport",
    "GraphProfile",
    "power_mean",
    "thm1_w3_value",
    "thm1_w3_bound",
    "eq5_ms_value",
    "eq5_ms_bound",
    "blakley_roy_value",
    "blakley_roy_bound",
    "thm2_p3_value",
    "thm2_p3_bound",
    "sidorenko_p3_value",
    "sidorenko_p3_report",
    "ahl_p3_value",
    "ahl_p3_report",
    "thm3_girth8_bound",
    "thm3_girth8_report",
    "cor4_c6_bip_bound",
    "cor4_c6_bip_report",
    "eq8_c6_bip_sharp_bound",
    "eq8_c6_bip_sharp_report",
    "cor6_c6_bound",
    "cor6_c6_report",
    "eq10_cube_bip_bound",
    "eq10_cube_bip_report",
    "eq11_cube_bound",
    "eq11_cube_report",
    "eq12_cube_bip_sharp_bound",
    "eq12_cube_bip_sharp_report",
    "eq13_cube_sharp_bound",
    "eq13_cube_sharp_report",
    "lem9_c4_lower",
    "lem9_c4_report",
    "lem9_c4_weak_report",
    "lem10_c4_bip_lower",
    "lem10_c4_bip_report",
    "lem11_value",
    "lem11_c4_D_lower",
    "qplus_leading",
    "qplus_leading_n",
    "evaluate",
]

EPS = 1e-9

HOLDS = "holds"
VIOLATED = "violated"
PRECONDITION_FAILED = "precondition_failed"
ASYMPTOTIC_ONLY = "asymptotic_only"

UPPER_ON_EDGES = "upper_on_edges"
LOWER_ON_COUNT = "lower_on_count"

# bounds stated for arbitrary graphs
GRAPH_BOUNDS = (
    "thm1_w3",
    "eq5_ms",
    "blakley_roy_k",
    "ahl_p3",
    "cor6_c6",
    "eq11_cube",
    "eq13_cube_sharp",
    "lem9_c4",
    "lem9_c4_weak",
)
# bounds that need a bipartition (class sizes a, b)
BIPARTITE_BOUNDS = (
    "thm2_p3",
    "sidorenko_p3",
    "thm3_girth8",
    "cor4_c6_bip",
    "eq8_c6_bip_sharp",
    "eq10_cube_bip",
    "eq12_cube_bip_sharp",
    "lem10_c4_bip",
    "lem11_c4_D",
)
BOUND_IDS = GRAPH_BOUNDS + BIPARTITE_BOUNDS + ("qplus_leading",)
CERTIFIED_IDS = tuple(b for b in BOUND_IDS if b != "qplus_leading")


@dataclass(frozen=True)
class BoundReport:
    bound_id: str
    direction: str
    bound_value: float | None
    observed: int | None
    verdict: str
    slack: float | None
    certified: bool = True
    tight: bool = False
    exact_bound: Fraction | None = field(default=None, repr=False)
    details: dict = field(default_factory=dict)

    @property
    def exact_slack(self) -> Fraction | None:
        if self.exact_bound is None or self.observed is None:
            return None
        if self.direction == LOWER_ON_COUNT:
            return self.observed - self.exact_bound
        return self.exact_bound - self.observed

    @property
    def violated(self) -> bool:
        return self.verdict == VIOLATED

    def to_dict(self) -> dict:
        return {
            "bound_id": self.bound_id,
            "direction": self.direction,
            "bound_value": self.bound_value,
            "observed": self.observed,
            "verdict": self.verdict,
            "slack": self.slack,
            "certified": self.certified,
            "tight": self.tight,
            "details": self.details,
        }


def _judge(
    bound_id: str,
    direction: str,
    bound: float | Fraction,
    observed: int,
    *,
    strict: bool = False,
    details: dict | None = None,
) -> BoundReport:
    exact = bound if isinstance(bound, Fraction) else None
    value = float(bound)
    margin = EPS * max(1.0, abs(value))
    if exact is not None:
        diff = observed - exact if direction == LOWER_ON_COUNT else exact - observed
        slack = float(diff)
    else:
        slack = observed - value if direction == LOWER_ON_COUNT else value - observed
    if direction == LOWER_ON_COUNT:
        ok = observed >= value - margin
    elif strict:
        ok = observed < value + margin
    else:
        ok = observed <= value + margin
    return BoundReport(
        bound_id,
        direction,
        value,
        observed,
        HOLDS if ok else VIOLATED,
        slack,
        True,
        abs(slack) <= margin,
        exact,
        details or {},
    )


def _failed(bound_id: str, direction: str, observed: int | None, reason: str, bound=None) -> BoundReport:
    return BoundReport(
        bound_id,
        direction,
        None if bound is None else float(bound),
        observed,
        PRECONDITION_FAILED,
        None,
        True,
        False,
        None,
        {"reason": reason},
    )


class GraphProfile:
    """Lazily computed exact invariants of one graph, shared across bound checks."""

    def __init__(self, g: Graph):
        self.graph = g
        self._walks: dict[int, int] = {}

    def walks(self, k: int) -> int:
        if k not in self._walks:
            self._walks[k] = walk_count(self.graph, k)
        return self._walks[k]

    @cached_property
    def degrees(self) -> list[int]:
        return self.graph.degrees()

    @cached_property
    def max_degree(self) -> int:
        return max(self.degrees, default=0)

    @cached_property
    def p3(self) -> int:
        return path3_count(self.graph)

    @cached_property
    def c4(self) -> int:
        return c4_count(self.graph)

    @cached_property
    def girth(self) -> int | float:
        return girth(self.graph)

    @cached_property
    def has_c6(self) -> bool:
        return contains_c6(self.graph)

    @cached_property
    def has_cube(self) -> bool:
        return contains_cube(self.graph)


def _profile(g: Graph | BipartiteView, profile: GraphProfile | None) -> GraphProfile:
    graph = g.graph if isinstance(g, BipartiteView) else g
    if profile is None:
        return GraphProfile(graph)
    if profile.graph is not graph and profile.graph != graph:
        raise DomainError("profile belongs to a different graph")
    return profile


# -- power means -------------------------------------------------------------


def power_mean(values: Iterable[float], r: float) -> float:
    """``M_r = (mean of x**r) ** (1/r)``; ``r = inf`` gives the maximum."""
    xs = [float(v) for v in values]
    if not xs:
        raise DomainError("power mean of an empty sequence")
    if any(v < 0 for v in xs):
        raise DomainError("power mean needs nonnegative values")
    if math.isinf(r):
        return max(xs)
    if r < 1:
        raise DomainError("power mean order must be at least 1")
    return (math.fsum(v**r for v in xs) / len(xs)) ** (1.0 / r)


# -- walks ---------------------------------------------------------------------


def thm1_w3_value(degrees: Sequence[int]) -> float:
    """``n * M_{3/2}(d)**3 = (sum d**1.5)**2 / n``."""
    n = len(degrees)
    if n == 0:
        raise DomainError("empty degree sequence")
    s = math.fsum(d**1.5 for d in degrees)
    return s * s / n


def thm1_w3_bound(g: Graph, profile: GraphProfile | None = None) -> BoundReport:
    prof = _profile(g, profile)
    if g.n == 0:
        return _failed("thm1_w3", LOWER_ON_COUNT, 0, "n = 0")
    return _judge("thm1_w3", LOWER_ON_COUNT, thm1_w3_value(prof.degrees), prof.walks(3))


def blakley_roy_value(n: int, e: int, k: int) -> Fraction:
    """``n * d_ave**k`` with ``d_ave = 2e/n``."""
    if n < 1:
        raise DomainError("n must be positive")
    if k < 1:
        raise DomainError("k must be positive")
    return n * Fraction(2 * e, n) ** k


def eq5_ms_value(n: int, e: int) -> Fraction:
    """``n * d_ave**3 = 8 e**3 / n**2``."""
    return blakley_roy_value(n, e, 3)


def blakley_roy_bound(g: Graph, k: int, profile: GraphProfile | None = None) -> BoundReport:
    prof = _profile(g, profile)
    if g.n == 0:
        return _failed("blakley_roy_k", LOWER_ON_COUNT, 0, "n = 0")
    return _judge(
        "blakley_roy_k", LOWER_ON_COUNT, blakley_roy_value(g.n, g.e, k), prof.walks(k), details={"k": k}
    )


def eq5_ms_bound(g: Graph, profile: GraphProfile | None = None) -> BoundReport:
    prof = _profile(g, profile)
    if g.n == 0:
        return _failed("eq5_ms", LOWER_ON_COUNT, 0, "n = 0")
    return _judge("eq5_ms", LOWER_ON_COUNT, eq5_ms_value(g.n, g.e), prof.walks(3))


# -- 3-paths ---------------------------------------------------------------------


def thm2_p3_value(a: int, b: int, e: int) -> Fraction:
    """``e (e - a)(e - b) / (ab)``."""
    if a < 1 or b < 1:
        raise DomainError("class sizes must be positive")
    return Fraction(e * (e - a) * (e - b), a * b)


def thm2_p3_bound(view: BipartiteView, profile: GraphProfile | None = None) -> BoundReport:
    """3-path lower bound; requires minimum degree at least 2."""
    prof = _profile(view, profile)
    if view.graph.n == 0 or min(prof.degrees) < 2:
        return _failed("thm2_p3", LOWER_ON_COUNT, prof.p3, "minimum degree < 2")
    return _judge("thm2_p3", LOWER_ON_COUNT, thm2_p3_value(view.a, view.b, view.e), prof.p3)


def sidorenko_p3_value(a: int, b: int, e: int, max_degree: int) -> Fraction:
    """``e**3 / (ab) - Delta * e``."""
    if a < 1 or b < 1:
        raise DomainError("class sizes must be positive")
    return Fraction(e**3, a * b) - max_degree * e


def sidorenko_p3_report(view: BipartiteView, profile: GraphProfile | None = None) -> BoundReport:
    prof = _profile(view, profile)
    if view.a < 1 or view.b < 1:
        return _failed("sidorenko_p3", LOWER_ON_COUNT, prof.p3, "empty class")
    value = sidorenko_p3_value(view.a, view.b, view.e, prof.max_degree)
    return _judge("sidorenko_p3", LOWER_ON_COUNT, value, prof.p3)


def ahl_p3_value(n: int, e: int, max_degree: int) -> Fraction:
    """``n d**3 / 2 - 3 n Delta d / 2`` with ``d = 2e/n``."""
    if n < 1:
        raise DomainError("n must be positive")
    d = Fraction(2 * e, n)
    return n * d**3 / 2 - Fraction(3, 2) * n * max_degree * d


def ahl_p3_report(g: Graph, profile: GraphProfile | None = None) -> BoundReport:
    prof = _profile(g, profile)
    if g.n == 0:
        return _failed("ahl_p3", LOWER_ON_COUNT, 0, "n = 0")
    return _judge("ahl_p3", LOWER_ON_COUNT, ahl_p3_value(g.n, g.e, prof.max_degree), prof.p3)


# -- edge upper bounds -------------------------------------------------------------


def thm3_girth8_bound(a: int, b: int) -> float:
    return (a * b) ** (2 / 3) + a + b


def cor4_c6_bip_bound(a: int, b: int) -> float:
    return 2 * (a * b) ** (2 / 3) + 2 * a + 2 * b


def eq8_c6_bip_sharp_bound(a: int, b: int) -> float:
    return 2 ** (1 / 3) * (a * b) ** (2 / 3) + 16 * (a + b)


def cor6_c6_bound(n: int) -> float:
    return 2 ** (2 / 3) * n ** (4 / 3) + 4 * n


def eq10_cube_bip_bound(a: int, b: int) -> float:
    return 2 ** (3 / 5) * (a * b) ** (4 / 5) + 2 * a * math.sqrt(b) + 2 * math.sqrt(a) * b


def eq11_cube_bound(n: int) -> float:
    return n ** (8 / 5) + (2 * n) ** 1.5


def eq12_cube_bip_sharp_bound(a: int, b: int) -> float:
    return 2 ** (1 / 5) * (a * b) ** (4 / 5) + 9 * (a * math.sqrt(b) + math.sqrt(a) * b)


def eq13_cube_sharp_bound(n: int) -> float:
    return 2 ** (-2 / 5) * n ** (8 / 5) + 13 * n**1.5


def _bip_ok(view: BipartiteView) -> str | None:
    return "empty class" if view.a < 1 or view.b < 1 else None


def thm3_girth8_report(view: BipartiteView, profile: GraphProfile | None = None) -> BoundReport:
    prof = _profile(view, profile)
    bound = thm3_girth8_bound(view.a, view.b)
    if prof.girth < 8:
        return _failed("thm3_girth8", UPPER_ON_EDGES, view.e, f"girth {prof.girth} < 8", bound)
    return _judge("thm3_girth8", UPPER_ON_EDGES, bound, view.e)


def cor4_c6_bip_report(view: BipartiteView, profile: GraphProfile | None = None) -> BoundReport:
    prof = _profile(view, profile)
    bound = cor4_c6_bip_bound(view.a, view.b)
    if prof.has_c6:
        return _failed("cor4_c6_bip", UPPER_ON_EDGES, view.e, "contains C6", bound)
    return _judge("cor4_c6_bip", UPPER_ON_EDGES, bound, view.e)


def eq8_c6_bip_sharp_report(view: BipartiteView, profile: GraphProfile | None = None) -> BoundReport:
    prof = _profile(view, profile)
    bound = eq8_c6_bip_sharp_bound(view.a, view.b)
    if prof.has_c6:
        return _failed("eq8_c6_bip_sharp", UPPER_ON_EDGES, view.e, "contains C6", bound)
    return _judge("eq8_c6_bip_sharp", UPPER_ON_EDGES, bound, view.e, strict=True)


def cor6_c6_report(g: Graph, profile: GraphProfile | None = None) -> BoundReport:
    prof = _profile(g, profile)
    bound = cor6_c6_bound(g.n)
    if prof.has_c6:
        return _failed("cor6_c6", UPPER_ON_EDGES, g.e, "contains C6", bound)
    return _judge("cor6_c6", UPPER_ON_EDGES, bound, g.e)


def eq10_cube_bip_report(view: BipartiteView, profile: GraphProfile | None = None) -> BoundReport:
    prof = _profile(view, profile)
    bound = eq10_cube_bip_bound(view.a, view.b)
    if prof.has_cube:
        return _failed("eq10_cube_bip", UPPER_ON_EDGES, view.e, "contains Q", bound)
    return _judge("eq10_cube_bip", UPPER_ON_EDGES, bound, view.e)


def eq12_cube_bip_sharp_report(view: BipartiteView, profile: GraphProfile | None = None) -> BoundReport:
    prof = _profile(view, profile)
    bound = eq12_cube_bip_sharp_bound(view.a, view.b)
    if prof.has_cube:
        return _failed("eq12_cube_bip_sharp", UPPER_ON_EDGES, view.e, "contains Q", bound)
    return _judge("eq12_cube_bip_sharp", UPPER_ON_EDGES, bound, view.e)


def eq11_cube_report(g: Graph, profile: GraphProfile | None = None) -> BoundReport:
    prof = _profile(g, profile)
    bound = eq11_cube_bound(g.n)
    if prof.has_cube:
        return _failed("eq11_cube", UPPER_ON_EDGES, g.e, "contains Q", bound)
    return _judge("eq11_cube", UPPER_ON_EDGES, bound, g.e)


def eq13_cube_sharp_report(g: Graph, profile: GraphProfile | None = None) -> BoundReport:
    prof = _profile(g, profile)
    bound = eq13_cube_sharp_bound(g.n)
    if prof.has_cube:
        return _failed("eq13_cube_sharp", UPPER_ON_EDGES, g.e, "contains Q", bound)
    return _judge("eq13_cube_sharp", UPPER_ON_EDGES, bound, g.e)


# -- 4-cycle lower bounds ------------------------------------------------------------


def lem9_c4_lower(n: int, e: int) -> tuple[Fraction, Fraction]:
    """``(2 e**3 (e - n) / n**4 - e**2 / (2n),  2 e**4 / n**4 - 3 e n / 4)``."""
    if n < 1:
        raise DomainError("n must be positive")
    strong = Fraction(2 * e**3 * (e - n), n**4) - Fraction(e * e, 2 * n)
    weak = Fraction(2 * e**4, n**4) - Fraction(3 * e * n, 4)
    return strong, weak


def lem9_c4_report(g: Graph, profile: GraphProfile | None = None) -> BoundReport:
    prof = _profile(g, profile)
    if g.n == 0:
        return _failed("lem9_c4", LOWER_ON_COUNT, 0, "n = 0")
    return _judge("lem9_c4", LOWER_ON_COUNT, lem9_c4_lower(g.n, g.e)[0], prof.c4)


def lem9_c4_weak_report(g: Graph, profile: GraphProfile | None = None) -> BoundReport:
    prof = _profile(g, profile)
    if g.n == 0:
        return _failed("lem9_c4_weak", LOWER_ON_COUNT, 0, "n = 0")
    return _judge("lem9_c4_weak", LOWER_ON_COUNT, lem9_c4_lower(g.n, g.e)[1], prof.c4)


def lem10_c4_bip_lower(a: int, b: int, e: int) -> Fraction:
    """``(e**2 (e-b)**2 - e (e-b) b a (a-1)) / (4 b**2 a (a-1))``; not symmetric in a, b."""
    if a < 2:
        raise DomainError("lem10_c4_bip needs a >= 2")
    if b < 1:
        raise DomainError("lem10_c4_bip needs b >= 1")
    num = e * e * (e - b) ** 2 - e * (e - b) * b * a * (a - 1)
    return Fraction(num, 4 * b * b * a * (a - 1))


def lem10_c4_bip_report(view: BipartiteView, profile: GraphProfile | None = None) -> BoundReport:
    """Bound with ``A = class_a``; the other orientation and the max go in ``details``."""
    prof = _profile(view, profile)
    value = lem10_c4_bip_lower(view.a, view.b, view.e)
    details = {"orientation_ab": float(value)}
    best = value
    if view.b >= 2 and view.a >= 1:
        other = lem10_c4_bip_lower(view.b, view.a, view.e)
        details["orientation_ba"] = float(other)
        best = max(best, other)
    details["max"] = float(best)
    return _judge("lem10_c4_bip", LOWER_ON_COUNT, value, prof.c4, details=details)


def lem11_value(d_values: Sequence[int], a: int | None = None) -> Fraction:
    """``sum(D**2) / (4(a-1)) - sum(D) / 4`` over the D-values of one class."""
    a = len(d_values) if a is None else a
    if a < 2:
        raise DomainError("lem11_c4_D needs a >= 2")
    return Fraction(sum(d * d for d in d_values), 4 * (a - 1)) - Fraction(sum(d_values), 4)


def lem11_c4_D_lower(view: BipartiteView, profile: GraphProfile | None = None) -> BoundReport:
    """Lower bound on 4-cycles from the D-values of ``class_a``.

    ``details`` records the lem10_c4_bip value for the same orientation and, when
    ``e(e-b) >= b a (a-1)``, whether this bound dominates it.
    """
    prof = _profile(view, profile)
    a, b, e = view.a, view.b, view.e
    if a < 2:
        raise DomainError("lem11_c4_D needs |class_a| >= 2")
    d_vals = [d_value(view.graph, x) for x in sorted(view.class_a)]
    value = lem11_value(d_vals, a)
    details: dict = {"sum_D": sum(d_vals), "sum_D2": sum(d * d for d in d_vals)}
    if b >= 1:
        lem10 = lem10_c4_bip_lower(a, b, e)
        details["lem10"] = float(lem10)
        if e * (e - b) >= b * a * (a - 1):
            details["dominates_lem10"] = value >= lem10
    return _judge("lem11_c4_D", LOWER_ON_COUNT, value, prof.c4, details=details)


# -- Q+ (uncertified leading terms) ---------------------------------------------------


def _asymptotic(value: float, observed: int | None, details: dict) -> BoundReport:
    slack = None if observed is None else value - observed
    return BoundReport(
        "qplus_leading", UPPER_ON_EDGES, value, observed, ASYMPTOTIC_ONLY, slack, False, False, None, details
    )


def qplus_leading(a: int, b: int, observed: int | None = None) -> BoundReport:
    """Leading term ``2**(3/5) (ab)**(4/5)``; the lower-order constant is unknown."""
    return _asymptotic(2 ** (3 / 5) * (a * b) ** (4 / 5), observed, {"a": a, "b": b})


def qplus_leading_n(n: int, observed: int | None = None) -> BoundReport:
    """Leading term ``n**(8/5)``; the lower-order constant is unknown."""
    return _asymptotic(n ** (8 / 5), observed, {"n": n})


# -- dispatch ---------------------------------------------------------------------------

_GRAPH_FORMS = {
    "thm1_w3": thm1_w3_bound,
    "eq5_ms": eq5_ms_bound,
    "ahl_p3": ahl_p3_report,
    "cor6_c6": cor6_c6_report,
    "eq11_cube": eq11_cube_report,
    "eq13_cube_sharp": eq13_cube_sharp_report,
    "lem9_c4": lem9_c4_report,
    "lem9_c4_weak": lem9_c4_weak_report,
}
_VIEW_FORMS = {
    "thm2_p3": thm2_p3_bound,
    "sidorenko_p3": sidorenko_p3_report,
    "thm3_girth8": thm3_girth8_report,
    "cor4_c6_bip": cor4_c6_bip_report,
    "eq8_c6_bip_sharp": eq8_c6_bip_sharp_report,
    "eq10_cube_bip": eq10_cube_bip_report,
    "eq12_cube_bip_sharp": eq12_cube_bip_sharp_report,
    "lem10_c4_bip": lem10_c4_bip_report,
    "lem11_c4_D": lem11_c4_D_lower,
}


def evaluate(
    bound_id: str,
    g: Graph,
    view: BipartiteView | None = None,
    *,
    profile: GraphProfile | None = None,
    walk_lengths: Sequence[int] = (1, 2, 3, 4, 5),
) -> list[BoundReport]:
    """All reports for one bound id on one graph (and bipartition, if relevant).

    Bipartite bounds use ``view`` when given, else the BFS bipartition of ``g``.

    Never raises for a graph that merely fails a precondition: non-bipartite
    inputs to bipartite bounds and the ``a < 2`` domain of lem10_c4_bip and lem11_c4_D come
    back as ``precondition_failed``.
    """
    prof = _profile(g, profile)
    if bound_id == "blakley_roy_k":
        return [blakley_roy_bound(g, k, prof) for k in walk_lengths]
    if bound_id in _GRAPH_FORMS:
        return [_GRAPH_FORMS[bound_id](g, prof)]
    if bound_id == "qplus_leading":
        if view is not None:
            return [qplus_leading(view.a, view.b, g.e)]
        return [qplus_leading_n(g.n, g.e)]
    if bound_id in _VIEW_FORMS:
        direction = UPPER_ON_EDGES if bound_id in _UPPER_VIEW else LOWER_ON_COUNT
        if view is None:
            view = bipartition(g)
        if view is None:
            return [_failed(bound_id, direction, None, "not bipartite")]
        if view.graph is not g and view.graph != g:
            raise DomainError("view belongs to a different graph")
        try:
            return [_VIEW_FORMS[bound_id](view, prof)]
        except DomainError as exc:
            return [_failed(bound_id, direction, None, str(exc))]
    raise DomainError(f"unknown bound id {bound_id!r}")


_UPPER_VIEW = {
    "thm3_girth8",
    "cor4_c6_bip",
    "eq8_c6_bip_sharp",
    "eq10_cube_bip",
    "eq12_cube_bip_sharp",
}
