"""The numerical Grothendieck group N(E) = Z^2 of an elliptic curve.

Classes are (rank, degree) in the basis ([O_E], [O_x0]); the Euler form is
chi(v, w) = r_v d_w - d_v r_w. The growth check iterates the induced matrix
on the class of the split generator G = O(3x0) + O(6x0) and pairs the
result with G* = O(-3x0) + O(-6x0).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Mapping, Optional, Sequence

from .sl2z import S_MATRIX, T_MATRIX, Mat2Z, compose, power, spectral_radius
from .words import validate_type_m


@dataclass(frozen=True)
class KClass:
    r: int
    d: int

    def __neg__(self) -> "KClass":
        return KClass(-self.r, -self.d)

    def signs(self) -> str:
        return "".join("+" if x > 0 else "-" if x < 0 else "0" for x in (self.r, self.d))


GENERATOR = KClass(2, 9)
DUAL_GENERATOR = KClass(2, -9)


class DegenerateClassError(ValueError):
    def __init__(self, l: int):
        super().__init__(f"chi vanishes at l = {l}; choose classes in the positive regime")
        self.l = l


def euler_form(v: KClass, w: KClass) -> int:
    return v.r * w.d - v.d * w.r


def act(A: Mat2Z, v: KClass) -> KClass:
    return KClass(A.a * v.r + A.b * v.d, A.c * v.r + A.d * v.d)


@dataclass(frozen=True)
class GrowthRow:
    l: int
    chi_abs: int
    estimate: float
    gap: float
    ratio_estimate: Optional[float]

    def to_dict(self) -> dict:
        return {
            "l": self.l,
            "chi_abs": str(self.chi_abs),
            "estimate": self.estimate,
            "gap": self.gap,
            "ratio_estimate": self.ratio_estimate,
        }


@dataclass(frozen=True)
class GrowthReport:
    """Rows (l, |chi_l|, (1/l) log|chi_l|) against the target log rho.

    ``ratio_estimate`` is log|chi_l / chi_{l-1}|, which converges
    geometrically, while ``estimate`` carries an O(1/l) offset.
    """

    rows: tuple[GrowthRow, ...]
    target: float

    @property
    def gap(self) -> float:
        return self.rows[-1].gap

    def row(self, l: int) -> GrowthRow:
        return self.rows[l - 1]

    def to_dict(self) -> dict:
        return {
            "kind": "growth",
            "target": self.target,
            "gap": self.gap,
            "rows": [r.to_dict() for r in self.rows],
        }

    def to_csv(self) -> str:
        lines = ["l,chi_abs,estimate,gap,ratio_estimate"]
        for r in self.rows:
            ratio = "" if r.ratio_estimate is None else repr(r.ratio_estimate)
            lines.append(f"{r.l},{r.chi_abs},{r.estimate!r},{r.gap!r},{ratio}")
        return "\n".join(lines) + "\n"


def growth_sequence(
    A: Mat2Z,
    v: KClass = DUAL_GENERATOR,
    w: KClass = GENERATOR,
    L: int = 60,
) -> GrowthReport:
    """chi(v, A^l w) for l = 1..L, computed exactly."""
    if L < 1:
        raise ValueError(f"L must be >= 1, got {L}")
    target = spectral_radius(A).log_value
    rows = []
    cur = w
    prev_log = None
    for l in range(1, L + 1):
        cur = act(A, cur)
        chi = abs(euler_form(v, cur))
        if chi == 0:
            raise DegenerateClassError(l)
        log_chi = math.log(chi)
        estimate = log_chi / l
        ratio = None if prev_log is None else log_chi - prev_log
        rows.append(GrowthRow(l, chi, estimate, abs(estimate - target), ratio))
        prev_log = log_chi
    return GrowthReport(tuple(rows), target)


def asymptotic_offset(A: Mat2Z, v: KClass, w: KClass) -> float:
    """lim l * (estimate_l - log rho) = log|chi(v, P w)|, P the projection on the rho-eigenline.

    For A in SL(2, Z) with trace t > 2, P = (A - rho^-1 I) / (rho - rho^-1).
    """
    rad = spectral_radius(A)
    if rad.is_one:
        raise ValueError("offset is only defined for hyperbolic matrices")
    sign = 1 if A.trace > 0 else -1
    lam, mu = sign * rad.value, sign * rad.inverse_value
    aw = act(A, w)
    pr = (aw.r - mu * w.r) / (lam - mu)
    pd = (aw.d - mu * w.d) / (lam - mu)
    return math.log(abs(v.r * pd - v.d * pr))


class QuadrantError(AssertionError):
    pass


@dataclass(frozen=True)
class QuadrantStep:
    label: str
    cls: KClass

    @property
    def signs(self) -> str:
        return self.cls.signs()


_EXPECTED = ("++", "+-", "--", "-+")


def quadrant_trace(m: Sequence[int], v: KClass) -> list[QuadrantStep]:
    """Follow a positive class through the blocks of the type-m word.

    Blocks T^-m_odd S and T^m_even S are applied right to left; the sign
    pattern must run ++ -> +- -> -- -> -+ -> ++. For odd n the final S^2
    flips the class from -- back to ++.
    """
    m = validate_type_m(m)
    if v.r <= 0 or v.d <= 0:
        raise ValueError(f"class {v} must have positive rank and degree")
    asc = m[::-1]
    steps = [QuadrantStep("start", v)]
    cur = v
    for k, exp in enumerate(asc, start=1):
        if k % 2:
            block = compose(power(T_MATRIX, -exp), S_MATRIX)
            label = f"T^-{exp} S"
        else:
            block = compose(power(T_MATRIX, exp), S_MATRIX)
            label = f"T^{exp} S"
        cur = act(block, cur)
        step = QuadrantStep(label, cur)
        if step.signs != _EXPECTED[k % 4]:
            raise QuadrantError(
                f"block {k} ({label}) sent the class to {cur}, signs {step.signs}, "
                f"expected {_EXPECTED[k % 4]}"
            )
        steps.append(step)
    if (len(m) // 2) % 2:
        cur = -cur
        steps.append(QuadrantStep("S^2", cur))
    if cur.signs() != "++":
        raise QuadrantError(f"final class {cur} is not positive")
    return steps


def graded_complexity(dims: Mapping[int, int], t: float) -> float:
    """sum_l dims[l] * exp(-l t)."""
    return math.fsum(n * math.exp(-l * t) for l, n in dims.items() if n)
