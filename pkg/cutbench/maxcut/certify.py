"""Bound-meets-cut optimality certificates."""
from __future__ import annotations

import dataclasses
import logging
import math
from fractions import Fraction

from cutbench.core.errors import CertificationError
from cutbench.core.models import Graph, MaxCutResult, MaxCutStatus
from cutbench.graphs.queries import cut_value

logger = logging.getLogger("cutbench.maxcut")

CUT_TOL = 1e-6


def integral_bound(z: float | Fraction) -> Fraction:
    """
    Round a numerical upper bound down to an integer.

    Valid for integer-weight graphs, whose cuts are integers; the 1e-6
    slack absorbs solver error on bounds that are integral in exact arithmetic.
    """
    return Fraction(math.floor(z + CUT_TOL))


def _integral(x: Fraction | float) -> bool:
    if isinstance(x, Fraction):
        return x.denominator == 1
    return float(x).is_integer()


def _integer_weights(g: Graph) -> bool:
    return all(float(w).is_integer() for _, _, w in g.edges)


def certify(g: Graph, r: MaxCutResult, bound: Fraction | int | float) -> MaxCutResult:
    """
    Upgrade a cut to certified when it meets a Max-Cut upper bound.

    Args:
        g: The graph ``r`` was computed on.
        r: A solver result.
        bound: A valid upper bound on Max-Cut (SDP value or closed form).

    Returns:
        A copy of ``r`` carrying ``bound``. The status becomes certified
        only for integer-weight graphs with an integral bound equal to the
        cut value; otherwise it is unchanged and the gap is reported.

    Raises:
        CertificationError: If the cut exceeds the bound by more than 1e-6,
            or the reported value disagrees with the cut.
    """
    actual = cut_value(g, r.best_cut)
    if abs(actual - r.value) > CUT_TOL * max(1.0, abs(actual)):
        raise CertificationError(f"reported cut value {r.value} but the cut weighs {actual}")
    if r.value > float(bound) + CUT_TOL:
        raise CertificationError(f"cut value {r.value} exceeds upper bound {float(bound)}")

    status = r.status
    if (
        status is MaxCutStatus.HEURISTIC
        and _integer_weights(g)
        and _integral(bound)
        and round(r.value) == int(bound)
        and abs(r.value - round(r.value)) <= CUT_TOL
    ):
        status = MaxCutStatus.CERTIFIED
    elif status is MaxCutStatus.HEURISTIC:
        logger.info("cut %.6f not certified against bound %s", r.value, bound)
    return dataclasses.replace(r, status=status, upper_bound=bound)
