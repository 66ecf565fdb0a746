# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled twins of the pure-Python kernels in `_pure`.

Semantics are identical; results are exact Fractions either way.  The
convolution clears denominators once and convolves integers, which is where
the big win over per-coefficient Fraction arithmetic comes from.
"""

from fractions import Fraction
from math import comb, gcd

_ZERO = Fraction(0)


def conv(a, b, Py_ssize_t nout):
    """First ``nout`` coefficients of the Cauchy product of coefficient lists."""
    cdef Py_ssize_t la = len(a), lb = len(b)
    cdef Py_ssize_t i, j, jmax
    if nout <= 0:
        return []
    if la == 0 or lb == 0:
        return [_ZERO] * nout
    da = 1
    for f in a:
        d = f.denominator
        da = da // gcd(da, d) * d
    db = 1
    for f in b:
        d = f.denominator
        db = db // gcd(db, d) * d
    cdef list anum = [f.numerator * (da // f.denominator) for f in a]
    cdef list bnum = [f.numerator * (db // f.denominator) for f in b]
    cdef list acc = [0] * nout
    for i in range(min(la, nout)):
        ai = anum[i]
        if not ai:
            continue
        jmax = lb
        if jmax > nout - i:
            jmax = nout - i
        for j in range(jmax):
            bj = bnum[j]
            if bj:
                acc[i + j] = acc[i + j] + ai * bj
    den = da * db
    return [Fraction(c, den) for c in acc]


def unit_inverse(a, Py_ssize_t n):
    """First ``n`` coefficients of the reciprocal of a unit power series.

    Runs an all-integer recurrence scaled by powers of the leading scaled
    numerator; falls back to the Fraction recurrence when that scaling would
    make the integers excessively wide.
    """
    cdef Py_ssize_t k, i, top
    cdef Py_ssize_t la = len(a)
    da = 1
    for f in a:
        d = f.denominator
        da = da // gcd(da, d) * d
    cdef list anum = [f.numerator * (da // f.denominator) for f in a]
    a0 = anum[0]
    if a0.bit_length() * n <= 50000:
        powers = [1]
        for k in range(1, n + 1):
            powers.append(powers[k - 1] * a0)
        scaled = [1]
        for k in range(1, n):
            acc = 0
            top = k if k < la - 1 else la - 1
            for i in range(1, top + 1):
                ai = anum[i]
                if ai:
                    acc = acc + ai * powers[i - 1] * scaled[k - i]
            scaled.append(-acc)
        return [Fraction(da * scaled[k], powers[k + 1]) for k in range(n)]
    inv0 = 1 / Fraction(a[0])
    cdef list out = [inv0]
    for k in range(1, n):
        facc = _ZERO
        top = k if k < la - 1 else la - 1
        for i in range(1, top + 1):
            fai = a[i]
            if fai:
                facc = facc + fai * out[k - i]
        out.append(-inv0 * facc)
    return out


cdef tuple _merge_desc(tuple u, tuple v):
    cdef Py_ssize_t i = 0, j = 0, nu = len(u), nv = len(v), w = 0
    cdef list out = [None] * (nu + nv)
    while i < nu and j < nv:
        if u[i] >= v[j]:
            out[w] = u[i]
            i += 1
        else:
            out[w] = v[j]
            j += 1
        w += 1
    while i < nu:
        out[w] = u[i]
        i += 1
        w += 1
    while j < nv:
        out[w] = v[j]
        j += 1
        w += 1
    return tuple(out)


cdef long _count_ways(tuple u, tuple sub) except -1:
    cdef Py_ssize_t i = 0, j = 0, nu = len(u), ns = len(sub)
    cdef long ways = 1
    cdef long ru, rs
    cdef object v
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


def merge_desc(u, v):
    return _merge_desc(u, v)


def count_ways(u, sub):
    return _count_ways(u, sub)


DEF FOLD_BITS = 4096


cdef inline void _acc(dict bucket, object p, object num, object den):
    cdef list cur = bucket.get(p)
    if cur is None:
        bucket[p] = [num, den]
        return
    n = cur[0] * den + num * cur[1]
    d = cur[1] * den
    if d.bit_length() > FOLD_BITS:
        g = gcd(n, d)
        if g > 1:
            n //= g
            d //= g
    cur[0] = n
    cur[1] = d


def acc_pair(dict bucket, p, num, den):
    _acc(bucket, p, num, den)


def pair_sweep(dict out, list terms_a, list terms_b, rows):
    """Accumulate residue-table contributions of all (A-term, B-term) pairs.

    Same contract as `_pure.pair_sweep`: terms are (a, num, den, rest),
    ``rows(a, b)`` yields (p, num, den) triples, ``out`` maps merged rest
    tuples to {p: [num, den] accumulator}.
    """
    cdef tuple ta, tb, ra, rb, u, row, pv
    cdef dict bucket
    cdef long n
    for ta in terms_a:
        a = ta[0]
        can = ta[1]
        cad = ta[2]
        ra = ta[3]
        for tb in terms_b:
            row = rows(a, tb[0])
            if not row:
                continue
            rb = tb[3]
            u = _merge_desc(ra, rb)
            n = _count_ways(u, ra)
            if not n:
                continue
            cn = can * tb[1] * n
            cd = cad * tb[2]
            bucket = out.get(u)
            if bucket is None:
                bucket = {}
                out[u] = bucket
            for pv in row:
                _acc(bucket, pv[0], cn * pv[1], cd * pv[2])
