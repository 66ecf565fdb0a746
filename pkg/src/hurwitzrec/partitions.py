"""Partition combinatorics, symmetric-group characters, and the Burnside
count of branched covers.

Partitions are weakly-decreasing tuples of positive integers.  Characters are
evaluated by the Murnaghan-Nakayama rule on beta-sets (first-column hook
lengths), which makes border-strip removal a single subtraction.

The connected-cover oracle builds the full generating function of
disconnected cover counts, graded by the degree n, the monomial p_mu and the
Euler-characteristic exponent of the string coupling, then takes its formal
logarithm degree by degree.  Simple Hurwitz numbers are read off the
logarithm; this route never touches the spectral-curve machinery and serves
as the independent ground truth for it.
"""

from __future__ import annotations

from fractions import Fraction
from functools import cache, lru_cache
from math import comb, factorial

Partition = tuple[int, ...]

_ZERO = Fraction(0)


def check_partition(mu) -> Partition:
    """Coerce to a canonical partition tuple, validating shape."""
    mu = tuple(int(x) for x in mu)
    if any(x <= 0 for x in mu):
        raise ValueError(f"partition parts must be positive: {mu}")
    if any(mu[i] < mu[i + 1] for i in range(len(mu) - 1)):
        raise ValueError(f"partition parts must be weakly decreasing: {mu}")
    return mu


def multiplicities(mu: Partition) -> dict[int, int]:
    out: dict[int, int] = {}
    for part in mu:
        out[part] = out.get(part, 0) + 1
    return out


def aut_size(mu: Partition) -> int:
    """Order of the stabilizer of mu under permutations of its parts."""
    out = 1
    for m in multiplicities(mu).values():
        out *= factorial(m)
    return out


@cache
def partitions_of(n: int) -> tuple[Partition, ...]:
    """All partitions of n, in lexicographically descending order."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    return tuple(_partitions_bounded(n, n))


def _partitions_bounded(n, max_part):
    if n == 0:
        yield ()
        return
    for first in range(min(n, max_part), 0, -1):
        for rest in _partitions_bounded(n - first, first):
            yield (first,) + rest


def h_encoding(lam: Partition, N: int) -> tuple[int, ...]:
    """The strictly decreasing sequence h_i = lam_i - i + N, i = 1..N."""
    if N < len(lam):
        raise ValueError(f"need N >= {len(lam)} for this partition")
    padded = tuple(lam) + (0,) * (N - len(lam))
    return tuple(padded[i] - (i + 1) + N for i in range(N))


def _beta_to_partition(h) -> Partition:
    n = len(h)
    lam = tuple(h[i] - (n - 1 - i) for i in range(n))
    return tuple(x for x in lam if x > 0)


def class_size(mu: Partition) -> int:
    """Cardinality of the conjugacy class of cycle type mu in S_{|mu|}."""
    mu = check_partition(mu)
    denom = 1
    for r, m in multiplicities(mu).items():
        denom *= factorial(m) * r**m
    size, rem = divmod(factorial(sum(mu)), denom)
    assert rem == 0
    return size


def dim_irrep(lam: Partition, N: int | None = None) -> int:
    """Dimension of the irreducible S_{|lam|} representation indexed by lam.

    Evaluated as |lam|! * Vandermonde(h) / prod h_i! on the h-encoding; the
    value does not depend on the choice of N >= len(lam).
    """
    lam = check_partition(lam)
    if N is None:
        N = max(len(lam), 1)
    h = h_encoding(lam, N)
    num = factorial(sum(lam))
    for i in range(len(h)):
        for j in range(i + 1, len(h)):
            num *= h[i] - h[j]
    den = 1
    for hi in h:
        den *= factorial(hi)
    dim, rem = divmod(num, den)
    assert rem == 0 and dim > 0
    return dim


@cache
def character(lam: Partition, mu: Partition) -> int:
    """Irreducible character chi_lam evaluated on the class of cycle type mu.

    Murnaghan-Nakayama recursion, largest part of mu first: removing a
    border strip of size r from lam is subtracting r from one beta-set entry,
    with sign (-1)^(number of beta entries jumped over).
    """
    lam = check_partition(lam)
    mu = check_partition(mu)
    if sum(lam) != sum(mu):
        raise ValueError("character requires |lam| = |mu|")
    return _mn(lam, mu)


@cache
def _mn(lam: Partition, mu: Partition) -> int:
    if not mu:
        return 1
    r, rest = mu[0], mu[1:]
    N = len(lam)
    h = [lam[i] - (i + 1) + N for i in range(N)]
    hset = set(h)
    total = 0
    for i, hi in enumerate(h):
        lo = hi - r
        if lo < 0 or lo in hset:
            continue
        between = sum(1 for x in h if lo < x < hi)
        sub = sorted((x for x in h if x != hi), reverse=True)
        sub.append(lo)
        sub.sort(reverse=True)
        term = _mn(_beta_to_partition(sub), rest)
        total += -term if between % 2 else term
    return total


def f_central(lam: Partition, mu: Partition) -> Fraction:
    """The central character |C_mu| * chi_lam(C_mu) / dim(lam)."""
    return Fraction(class_size(mu) * character(lam, mu), dim_irrep(lam))


@cache
def f_c2(lam: Partition) -> Fraction:
    """Central character of the transposition class, as the content sum.

    Equals sum_i lam_i*(lam_i - 2i + 1)/2, which is f_central against the
    class (2, 1, ..., 1) whenever |lam| >= 2, and 0 for |lam| < 2.

    An equivalent quadratic form in the h-encoding is
    (1/2)*sum h_i^2 - (N - 1/2)*sum h_i + N(N-1)(2N-1)/6; a variant with
    constant term N(2N^2 - 3N + 4)/6 circulates but fails direct evaluation
    at lam=(2), N=2 and is not used here.
    """
    lam = check_partition(lam)
    total = sum(part * (part - 2 * i - 1) for i, part in enumerate(lam))
    value = Fraction(total, 2)
    assert value.denominator == 1
    return value


def cov_disconnected(mu: Partition, b: int) -> Fraction:
    """Weighted count of possibly-disconnected degree-|mu| covers of the
    sphere with monodromy mu over one point and b transpositions elsewhere.

    Burnside: sum over partitions lam of |mu| of
    (dim lam / n!)^2 * f_central(lam, mu) * f_c2(lam)^b.
    """
    mu = check_partition(mu)
    if b < 0:
        raise ValueError("b must be nonnegative")
    n = sum(mu)
    if n == 0:
        return Fraction(1) if b == 0 else _ZERO
    nfact = factorial(n)
    total = _ZERO
    for lam in partitions_of(n):
        w = Fraction(dim_irrep(lam), nfact) ** 2
        total += w * f_central(lam, mu) * f_c2(lam) ** b
    return total


# ---------------------------------------------------------------------------
# The generating function Z of disconnected counts and its formal logarithm.
# ---------------------------------------------------------------------------


class PSeriesZ:
    """Truncated generating function graded by degree n.

    ``data[n]`` maps ``(mu, e)`` to a Fraction, where ``mu`` is the partition
    labelling the monomial p_mu and ``e`` the exponent of the string
    coupling (e = b - |mu| - len(mu) termwise; exponents add under products).
    """

    def __init__(self, n_max: int, data=None):
        self.n_max = n_max
        self.data = {n: {} for n in range(n_max + 1)}
        if data:
            for n, terms in data.items():
                self.data[n].update(terms)

    def coefficient(self, n: int, mu: Partition, e: int) -> Fraction:
        if n > self.n_max:
            raise ValueError(f"degree {n} beyond truncation {self.n_max}")
        return self.data[n].get((tuple(mu), e), _ZERO)

    def __eq__(self, other):
        if not isinstance(other, PSeriesZ):
            return NotImplemented
        if self.n_max != other.n_max:
            return False
        for n in range(self.n_max + 1):
            a = {k: v for k, v in self.data[n].items() if v}
            b = {k: v for k, v in other.data[n].items() if v}
            if a != b:
                return False
        return True

    def _mul(self, other: "PSeriesZ") -> "PSeriesZ":
        out = PSeriesZ(self.n_max)
        for na, terms_a in self.data.items():
            if not terms_a:
                continue
            for nb, terms_b in other.data.items():
                n = na + nb
                if n > self.n_max or not terms_b:
                    continue
                dest = out.data[n]
                for (mua, ea), ca in terms_a.items():
                    for (mub, eb), cb in terms_b.items():
                        key = (_merge_partitions(mua, mub), ea + eb)
                        dest[key] = dest.get(key, _ZERO) + ca * cb
        return out

    def _scaled_add(self, other: "PSeriesZ", c: Fraction) -> None:
        for n, terms in other.data.items():
            dest = self.data[n]
            for key, v in terms.items():
                dest[key] = dest.get(key, _ZERO) + c * v

    def log(self) -> "PSeriesZ":
        """Formal logarithm; requires constant coefficient 1."""
        if self.data[0] != {((), 0): Fraction(1)}:
            raise ValueError("log requires a series with constant term 1")
        p = PSeriesZ(self.n_max, {n: t for n, t in self.data.items() if n > 0})
        out = PSeriesZ(self.n_max)
        power = p
        for m in range(1, self.n_max + 1):
            out._scaled_add(power, Fraction((-1) ** (m + 1), m))
            if m < self.n_max:
                power = power._mul(p)
        return out

    def exp(self) -> "PSeriesZ":
        """Formal exponential; requires zero constant coefficient."""
        if self.data[0]:
            raise ValueError("exp requires a series without constant term")
        out = PSeriesZ(self.n_max, {0: {((), 0): Fraction(1)}})
        power = self
        fact = 1
        for m in range(1, self.n_max + 1):
            fact *= m
            out._scaled_add(power, Fraction(1, fact))
            if m < self.n_max:
                power = power._mul(self)
        return out


def _merge_partitions(a: Partition, b: Partition) -> Partition:
    return tuple(sorted(a + b, reverse=True))


def build_z(n_max: int, b_max: int) -> PSeriesZ:
    """Assemble Z from the Burnside counts, up to degree n_max and b_max
    simple branch points."""
    z = PSeriesZ(n_max, {0: {((), 0): Fraction(1)}})
    for n in range(1, n_max + 1):
        dest = z.data[n]
        for mu in partitions_of(n):
            lmu = len(mu)
            for b in range(b_max + 1):
                if (b - n - lmu) % 2:
                    continue
                c = cov_disconnected(mu, b)
                if c:
                    dest[(mu, b - n - lmu)] = c / factorial(b)
    return z


class HurwitzOracle:
    """Connected simple Hurwitz numbers H_{g,mu} via the character route.

    Precomputes the logarithm of Z once for the configured bounds; queries
    are table lookups times b!.
    """

    def __init__(self, n_max: int, g_max: int):
        if n_max < 1 or g_max < 0:
            raise ValueError("need n_max >= 1 and g_max >= 0")
        self.n_max = n_max
        self.g_max = g_max
        self.b_max = 2 * g_max - 2 + 2 * n_max
        self._z = build_z(n_max, self.b_max)
        self._f = self._z.log()

    def hurwitz(self, g: int, mu) -> Fraction:
        """H_{g,mu}, exactly."""
        mu = check_partition(mu)
        n = sum(mu)
        if n == 0:
            raise ValueError("mu must be a nonempty partition")
        b = 2 * g - 2 + n + len(mu)
        if g < 0 or b < 0:
            raise ValueError(f"no covers with g={g}, mu={mu}")
        if n > self.n_max or g > self.g_max:
            raise ValueError(
                f"(g={g}, mu={mu}) outside configured bounds "
                f"(n_max={self.n_max}, g_max={self.g_max})"
            )
        return factorial(b) * self._f.coefficient(n, mu, 2 * g - 2)


@lru_cache(maxsize=None)
def get_oracle(n_max: int, g_max: int) -> HurwitzOracle:
    return HurwitzOracle(n_max, g_max)


def hurwitz_connected(g: int, mu, n_max: int | None = None, g_max: int | None = None) -> Fraction:
    """Convenience wrapper building (and caching) a big-enough oracle."""
    mu = check_partition(mu)
    oracle = get_oracle(max(sum(mu), n_max or 1), max(g, g_max or 0))
    return oracle.hurwitz(g, mu)
