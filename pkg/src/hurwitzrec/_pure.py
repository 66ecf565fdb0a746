"""Pure-Python reference kernels for the exact-rational inner loops.

`_speed.pyx` provides compiled twins with identical semantics; the active
implementation is chosen in `_kernels`.
"""

from fractions import Fraction

_ZERO = Fraction(0)


def conv(a, b, nout):
    """First ``nout`` coefficients of the Cauchy product of coefficient lists."""
    out = [_ZERO] * nout
    for i, ai in enumerate(a):
        if i >= nout:
            break
        if not ai:
            continue
        jmax = min(len(b), nout - i)
        for j in range(jmax):
            bj = b[j]
            if bj:
                out[i + j] += ai * bj
    return out


def unit_inverse(a, n):
    """First ``n`` coefficients of the reciprocal of a unit power series."""
    inv0 = 1 / Fraction(a[0])
    out = [inv0]
    for k in range(1, n):
        acc = _ZERO
        for i in range(1, min(k, len(a) - 1) + 1):
            ai = a[i]
            if ai:
                acc += ai * out[k - i]
        out.append(-inv0 * acc)
    return out


def merge_desc(u, v):
    """Merge two weakly-decreasing tuples into one weakly-decreasing tuple."""
    out = []
    i = j = 0
    nu, nv = len(u), len(v)
    while i < nu and j < nv:
        if u[i] >= v[j]:
            out.append(u[i])
            i += 1
        else:
            out.append(v[j])
            j += 1
    out.extend(u[i:])
    out.extend(v[j:])
    return tuple(out)


def count_ways(u, sub):
    """Product over values v of C(mult_u(v), mult_sub(v)) for sorted tuples."""
    from math import comb

    ways = 1
    i = 0
    j = 0
    nu, ns = len(u), len(sub)
    while j < ns:
        v = sub[j]
        rs = 0
        while j < ns and sub[j] == v:
            rs += 1
            j += 1
        while i < nu and u[i] > v:
            i += 1
        ru = 0
        while i < nu and u[i] == v:
            ru += 1
            i += 1
        if rs > ru:
            return 0
        ways *= comb(ru, rs)
    return ways


_FOLD_BITS = 4096


def acc_pair(bucket, p, num, den):
    """Add num/den into the [num, den] accumulator at key p.

    Accumulators are folded by a gcd only when the denominator grows past a
    threshold; values are exact either way.
    """
    from math import gcd

    cur = bucket.get(p)
    if cur is None:
        bucket[p] = [num, den]
        return
    n = cur[0] * den + num * cur[1]
    d = cur[1] * den
    if d.bit_length() > _FOLD_BITS:
        g = gcd(n, d)
        if g > 1:
            n //= g
            d //= g
    cur[0] = n
    cur[1] = d


def pair_sweep(out, terms_a, terms_b, rows):
    """Accumulate residue-table contributions of all (A-term, B-term) pairs.

    ``terms_a``/``terms_b`` are lists of ``(a, num, den, rest)`` with ``a``
    the pole order evaluated at the branch (negative ``a`` encodes a Bergman
    power ``z**(-a)``), ``num/den`` the exact weight, and ``rest`` the
    weakly-decreasing tuple of pole orders left on symbolic variables.
    ``rows(a, b)`` yields ``(p, num, den)`` kernel-residue triples.  ``out``
    maps a merged rest-tuple to {p: [num, den] accumulator}.
    """
    for a, can, cad, ra in terms_a:
        for b, cbn, cbd, rb in terms_b:
            row = rows(a, b)
            if not row:
                continue
            u = merge_desc(ra, rb)
            n = count_ways(u, ra)
            if not n:
                continue
            cn = can * cbn * n
            cd = cad * cbd
            bucket = out.get(u)
            if bucket is None:
                bucket = {}
                out[u] = bucket
            for p, vn, vd in row:
                acc_pair(bucket, p, cn * vn, cd * vd)
