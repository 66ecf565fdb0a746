"""From correlation forms on the Lambert curve to Hurwitz numbers.

Each pole factor dz/(z-1)^a, divided by dx(z) = (1-z)/z dz and written in
the variable v with z = L(v) (the inverse of v = z e^(-z)), becomes the
power series (-1)^a * z/(1-z)^(a+1) at z = L(v).  A k-variable form then
expands into a symmetric multivariate series whose coefficients encode
H_{g,mu}; the character oracle provides the independent values the
expansion must reproduce.
"""

from __future__ import annotations

import json
from fractions import Fraction
from functools import lru_cache
from math import factorial

from .partitions import HurwitzOracle, aut_size, check_partition, partitions_of
from .poleform import PoleForm, format_rational
from .series import Series
from .toprec import LambertEngine, is_stable, required_order

_ZERO = Fraction(0)


def lambert_series(order: int) -> Series:
    """The series L(v) with L(v) e^(-L(v)) = v, by reversion.

    Coefficients are m^(m-1)/m!.
    """
    if order < 1:
        raise ValueError("order must be positive")
    z = Series.identity(order + 1)
    return (z * (-z).exp()).reversion().truncate(order)


def pole_factor_series(a: int, order: int) -> Series:
    """One variable's factor (-1)^a * z/(1-z)^(a+1) at z = L(v)."""
    if a < 1:
        raise ValueError("pole order must be >= 1")
    return PoleFactorTable(order).factor(a)


class PoleFactorTable:
    """Shared builder for the per-pole-order factors, as series in v."""

    _instances: dict[int, "PoleFactorTable"] = {}

    def __new__(cls, order: int):
        inst = cls._instances.get(order)
        if inst is None:
            inst = super().__new__(cls)
            inst.order = order
            u = lambert_series(order + 1)
            inst._u = u
            inst._inv1mu = (Series.constant(1) - u).invert_unit(order + 1)
            inst._factors = {}
            cls._instances[order] = inst
        return inst

    def factor(self, a: int) -> Series:
        out = self._factors.get(a)
        if out is None:
            if a == 0:
                out = (self._u * self._inv1mu).truncate(self.order + 1)
            else:
                out = (-self.factor(a - 1) * self._inv1mu).truncate(self.order + 1)
            self._factors[a] = out
        return out

    def coefficient(self, a: int, m: int) -> Fraction:
        return self.factor(a).coefficient(m)


class HSeries:
    """Truncated expansion of a k-variable Hurwitz generating function.

    Symmetric in its variables; stored on weakly-decreasing exponent tuples.
    Any tuple containing a zero exponent has coefficient zero.
    """

    def __init__(self, g: int, k: int, n_max: int, coeffs):
        self.g = g
        self.k = k
        self.n_max = n_max
        self.coeffs = {key: c for key, c in coeffs.items() if c}

    def coefficient(self, exponents) -> Fraction:
        exponents = tuple(sorted(exponents, reverse=True))
        if len(exponents) != self.k:
            raise ValueError(f"expected {self.k} exponents")
        if any(e < 0 for e in exponents):
            raise ValueError("exponents must be nonnegative")
        if sum(exponents) > self.n_max:
            raise ValueError(f"total degree beyond truncation {self.n_max}")
        return self.coeffs.get(exponents, _ZERO)


def _sym_tensor_sum(table: PoleFactorTable, pole_values, pole_counts, mu):
    """Sum over distinct orderings of the pole multiset of the product of
    per-position factor coefficients."""
    k = len(mu)

    @lru_cache(maxsize=None)
    def rec(pos, counts):
        if pos == k:
            return Fraction(1)
        total = _ZERO
        for i, c in enumerate(counts):
            if not c:
                continue
            f = table.coefficient(pole_values[i], mu[pos])
            if f:
                total += f * rec(pos + 1, counts[:i] + (c - 1,) + counts[i + 1 :])
        return total

    return rec(0, pole_counts)


def h_series(form: PoleForm, n_max: int) -> HSeries:
    """Expand a PoleForm into the v-variables through z_i = L(v_i)."""
    k = form.k
    table = PoleFactorTable(n_max)
    coeffs = {}
    for mu in _exponent_tuples(k, n_max):
        total = _ZERO
        for key, c in form.terms.items():
            values = tuple(sorted(set(key), reverse=True))
            counts = tuple(key.count(v) for v in values)
            s = _sym_tensor_sum(table, values, counts, mu)
            if s:
                total += c * s
        if total:
            coeffs[mu] = total
    return HSeries(form.g, k, n_max, coeffs)


def _exponent_tuples(k: int, n_max: int):
    """Weakly-decreasing positive tuples of length k with sum <= n_max."""
    for n in range(k, n_max + 1):
        for mu in partitions_of(n):
            if len(mu) == k:
                yield mu


def extract_hurwitz(hs: HSeries, g: int, mu) -> Fraction:
    """Read H_{g,mu} off the expansion.

    The coefficient of the sorted monomial carries prod(mu_i) from the
    derivative structure, 1/b! from the branch-point count, and the
    stabilizer |Aut mu| from summing over all orderings; dividing these out
    recovers the Hurwitz number.
    """
    mu = check_partition(mu)
    if g != hs.g:
        raise ValueError(f"series was built for g={hs.g}")
    if len(mu) != hs.k:
        raise ValueError(f"series has arity {hs.k}, mu has length {len(mu)}")
    b = 2 * g - 2 + sum(mu) + len(mu)
    coeff = hs.coefficient(mu)
    denom = aut_size(mu)
    for part in mu:
        denom *= part
    return coeff * Fraction(factorial(b), denom)


def hurwitz_by_recursion(engine: LambertEngine, g: int, mu) -> Fraction:
    """H_{g,mu} via the topological recursion route (stable range only)."""
    mu = check_partition(mu)
    hs = h_series(engine.w(g, len(mu)), sum(mu))
    return extract_hurwitz(hs, g, mu)


class BMReport:
    """Cross-method comparison of the two Hurwitz-number routes."""

    def __init__(self, g_max, n_max, records, complete):
        self.g_max = g_max
        self.n_max = n_max
        self.records = records
        self.complete = complete

    @property
    def ok(self):
        return all(r["equal"] for r in self.records)

    @property
    def first_mismatch(self):
        for r in self.records:
            if not r["equal"]:
                return r
        return None

    def to_json(self) -> str:
        return json.dumps(self.records, separators=(", ", ": "))

    def to_text(self) -> str:
        lines = [f"{'g':>2}  {'mu':<16} {'recursion':>14} {'oracle':>14}  equal"]
        for r in self.records:
            mu = ",".join(str(x) for x in r["mu"])
            lines.append(
                f"{r['g']:>2}  ({mu})"
                + " " * max(1, 15 - len(mu) - 2)
                + f"{r['recursion']:>14} {r['oracle']:>14}  {'yes' if r['equal'] else 'NO'}"
            )
        verdict = "all equal" if self.ok else f"MISMATCH at {self.first_mismatch}"
        lines.append(f"-- {len(self.records)} cases: {verdict}")
        return "\n".join(lines)


def verify_bm(
    g_max: int,
    n_max: int,
    engine: LambertEngine | None = None,
    oracle: HurwitzOracle | None = None,
    fail_fast: bool = True,
) -> BMReport:
    """Compare recursion vs oracle for every stable (g, mu) in range.

    Stops at the first mismatch when fail_fast is set; the report then ends
    with the offending record.
    """
    if engine is None:
        engine = LambertEngine(order=required_order(g_max, n_max))
    if oracle is None:
        oracle = HurwitzOracle(n_max, g_max)
    records = []
    complete = True
    hseries_cache = {}
    for g in range(g_max + 1):
        for n in range(1, n_max + 1):
            for mu in partitions_of(n):
                k = len(mu)
                if not is_stable(g, k):
                    continue
                hs = hseries_cache.get((g, k))
                if hs is None:
                    hs = h_series(engine.w(g, k), n_max)
                    hseries_cache[(g, k)] = hs
                rec = extract_hurwitz(hs, g, mu)
                orc = oracle.hurwitz(g, mu)
                records.append(
                    {
                        "g": g,
                        "mu": list(mu),
                        "recursion": format_rational(rec),
                        "oracle": format_rational(orc),
                        "equal": rec == orc,
                    }
                )
                if fail_fast and rec != orc:
                    complete = False
                    return BMReport(g_max, n_max, records, complete)
    return BMReport(g_max, n_max, records, complete)
