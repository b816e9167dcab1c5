"""Closed forms and bounds for bal, ot, ex, z and the type-A/B clique threshold.

Exact formulas are evaluated in rationals and must come out integral.  A query
outside a formula's hypotheses still returns the formula value, flagged
``valid=False`` with the failed hypothesis in ``threshold``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb, gcd

from .graph import Graph, GraphError

EXACT = "exact"
UPPER = "upper_bound"


@dataclass(frozen=True)
class FormulaValue:
    value: int | Fraction | float
    valid: bool
    threshold: str = ""
    exactness: str = EXACT
    notes: str = ""

    def __post_init__(self):
        if not self.valid and not self.threshold:
            raise ValueError("an invalid value must name its failed threshold")

    def to_dict(self) -> dict:
        v = self.value
        if isinstance(v, Fraction):
            v = int(v) if v.denominator == 1 else str(v)
        out = {"value": v, "valid": self.valid, "threshold": self.threshold, "exactness": self.exactness}
        if self.notes:
            out["notes"] = self.notes
        return out


def _integral(x: Fraction, what: str) -> int:
    if x.denominator != 1:
        raise ArithmeticError(f"{what} evaluated to non-integer {x}")
    return int(x)


def _require_even_k(k: int):
    if k < 2 or k % 2:
        raise GraphError(f"only even k >= 2 is covered, got k={k}")


def bal_star(n: int, k: int) -> FormulaValue:
    """bal(n, K_{1,k}) = (k-2)/2 n - k^2/8 + k/4 for even k, n >= max(3, k^2/4 + 1)."""
    _require_even_k(k)
    value = Fraction(k - 2, 2) * n - Fraction(k * k, 8) + Fraction(k, 4)
    need = max(Fraction(3), Fraction(k * k, 4) + 1)
    valid = n >= need
    return FormulaValue(_integral(value, "bal_star"), valid, "" if valid else f"n >= {need}")


def bal_path(n: int, k: int) -> FormulaValue:
    _require_even_k(k)
    if k % 4 == 2:
        value = Fraction(k - 2, 4) * n - Fraction(k * k, 32) + Fraction(1, 8)
    else:
        value = Fraction(k - 4, 4) * n - Fraction(k * k, 32) + Fraction(k, 8) + 1
    need = Fraction(9, 32) * k * k + Fraction(k, 4) + 1
    valid = n >= need
    return FormulaValue(_integral(value, "bal_path"), valid, "" if valid else f"n >= {need}")


def bal_K4(n: int) -> FormulaValue:
    value = n if n % 4 == 0 else n - 1
    valid = n >= 5
    return FormulaValue(
        value,
        valid,
        "" if valid else "n >= 5",
        notes="threshold n >= 5 is assumed, not stated with the formula",
    )


def ot_star(n: int, k: int) -> FormulaValue:
    if k < 1:
        raise GraphError(f"k must be positive, got {k}")
    if k <= 3:
        value = (k - 1) * n // 2
    else:
        value = _integral(Fraction((k - 2) * n) - Fraction(k * k, 2) + Fraction(3 * k, 2) - 1, "ot_star")
    valid = n >= 4 * k
    return FormulaValue(value, valid, "" if valid else f"n >= {4 * k}")


def ot_tree_bound(n: int, k: int) -> FormulaValue:
    """(k-1) n, an upper bound on ot(n, T) and bal(n, T) for every tree with k edges."""
    valid = n >= 4 * k
    return FormulaValue((k - 1) * n, valid, "" if valid else f"n >= {4 * k}", UPPER)


def erdos_gallai_path_bound(n: int, k: int) -> FormulaValue:
    if k < 1:
        raise GraphError(f"k must be positive, got {k}")
    return FormulaValue(Fraction((k - 1) * n, 2), True, exactness=UPPER)


def kst_bound(n: int, t: int) -> FormulaValue:
    """Strict upper bound on ex(n, K_{t,t})."""
    if t < 1 or n < 1:
        raise GraphError("need t, n >= 1")
    value = 0.5 * ((t - 1) ** (1 / t) * n ** (2 - 1 / t) + 0.5 * (t - 1) * n)
    return FormulaValue(value, True, exactness=UPPER)


def zarankiewicz_bound(n: int, t: int) -> FormulaValue:
    """Strict upper bound on z(n, t)."""
    if t < 1 or n < 1:
        raise GraphError("need t, n >= 1")
    value = (t - 1) ** (1 / t) * n ** (2 - 1 / t) + 0.5 * (t - 1) * n
    return FormulaValue(value, True, exactness=UPPER)


def _rtz_holds(t: int, q: int) -> bool:
    # (t-1)^(1/t) (2q)^(2-1/t) + (t-1) q + 1 <= 2 q^2, raised to the t-th power
    # so the test runs in integers: (t-1) (2q)^(2t-1) <= (2q^2 - (t-1) q - 1)^t
    rest = 2 * q * q - (t - 1) * q - 1
    if rest < 0:
        return False
    return (t - 1) * (2 * q) ** (2 * t - 1) <= rest ** t


def rtz_q(t: int) -> int:
    """Least q >= t with (t-1)^(1/t) (2q)^(2-1/t) + (t-1) q + 1 <= 2 q^2."""
    if t < 1:
        raise GraphError("t must be positive")
    q = t
    while not _rtz_holds(t, q):
        q += 1
    return q


# Diagonal Ramsey numbers R(K_q, K_q).  Exact for q <= 4; larger entries are
# published upper bounds (Angeltveit-McKay 2024 for q = 5, Radziszowski's
# dynamic survey DS1.17 for q = 6..10).  Beyond the table the Erdos-Szekeres
# bound C(2q-2, q-1) is used.
RAMSEY_DIAGONAL: dict[int, tuple[int, bool]] = {
    1: (1, True),
    2: (2, True),
    3: (6, True),
    4: (18, True),
    5: (46, False),
    6: (165, False),
    7: (540, False),
    8: (1870, False),
    9: (6588, False),
    10: (23556, False),
}


def ramsey_diagonal(q: int) -> tuple[int, bool]:
    """(value, exact) for R(K_q, K_q), an upper bound when not exact."""
    if q in RAMSEY_DIAGONAL:
        return RAMSEY_DIAGONAL[q]
    return comb(2 * q - 2, q - 1), False


def rtz_phi(n: int, t: int) -> FormulaValue:
    """Edge quota per colour that forces a type-A or type-B coloured K_{2t}.

    ex(n, K_{m,m}) is replaced by its Kovari-Sos-Turan bound, with m the
    diagonal Ramsey number at q = rtz_q(t).
    """
    q = rtz_q(t)
    m, exact = ramsey_diagonal(q)
    value = kst_bound(n, m).value + m * (m - 1) + 2 * m * (n - 2 * m) + 1
    notes = f"q={q}, m=R({q},{q})={m}" + ("" if exact else " (upper bound)")
    return FormulaValue(value, True, exactness=UPPER, notes=notes)


def zero_sum_pattern(p: int, q: int, g: Graph | int) -> tuple[int, int]:
    """(r, b) = (p e / (p+q), q e / (p+q)): the tone giving a zero-sum copy when
    red edges weigh -p and blue edges weigh q."""
    e = g if isinstance(g, int) else g.e
    if p < 1 or q < 1 or gcd(p, q) != 1:
        raise GraphError(f"need positive coprime p, q; got {p}, {q}")
    if e % (p + q):
        raise GraphError(f"e(G) = {e} is {e % (p + q)} mod {p + q}, not divisible")
    r, b = p * e // (p + q), q * e // (p + q)
    assert -q * r + p * b == 0
    return r, b
