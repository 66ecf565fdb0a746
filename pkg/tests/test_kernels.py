"""Parity between the pure-Python kernels and the compiled extension."""

import random
from fractions import Fraction

import pytest

from hurwitzrec import _kernels, _pure

try:
    from hurwitzrec import _speed
except ImportError:
    _speed = None

needs_speed = pytest.mark.skipif(_speed is None, reason="compiled kernels not built")

F = Fraction


def random_fractions(rng, n):
    return [F(rng.randint(-9, 9), rng.randint(1, 12)) for _ in range(n)]


@needs_speed
class TestKernelParity:
    def test_conv(self):
        rng = random.Random(1)
        for _ in range(25):
            a = random_fractions(rng, rng.randint(0, 25))
            b = random_fractions(rng, rng.randint(0, 25))
            nout = rng.randint(1, 40)
            assert _speed.conv(a, b, nout) == _pure.conv(a, b, nout)

    def test_unit_inverse(self):
        rng = random.Random(2)
        for _ in range(20):
            a = random_fractions(rng, 20)
            if not a[0]:
                a[0] = F(3, 7)
            assert _speed.unit_inverse(a, 18) == _pure.unit_inverse(a, 18)

    def test_merge_and_count(self):
        rng = random.Random(3)
        for _ in range(200):
            u = tuple(sorted((rng.randint(1, 6) for _ in range(rng.randint(0, 6))), reverse=True))
            v = tuple(sorted((rng.randint(1, 6) for _ in range(rng.randint(0, 6))), reverse=True))
            m1, m2 = _speed.merge_desc(u, v), _pure.merge_desc(u, v)
            assert m1 == m2 == tuple(sorted(u + v, reverse=True))
            assert _speed.count_ways(m1, u) == _pure.count_ways(m1, u)

    def test_acc_pair(self):
        rng = random.Random(4)
        b1, b2 = {}, {}
        for _ in range(300):
            p = rng.randint(2, 5)
            num = rng.randint(-10**6, 10**6)
            den = rng.randint(1, 10**6)
            _speed.acc_pair(b1, p, num, den)
            _pure.acc_pair(b2, p, num, den)
        for p in b1:
            assert F(*b1[p]) == F(*b2[p])

    def test_pair_sweep(self):
        rng = random.Random(5)

        def mk_terms(n):
            out = []
            for _ in range(n):
                a = rng.randint(-3, 6)
                rest = tuple(
                    sorted((rng.randint(2, 6) for _ in range(rng.randint(0, 3))), reverse=True)
                )
                out.append((a, rng.randint(-5, 5), rng.randint(1, 5), rest))
            return out

        table = {}

        def rows(a, b):
            key = (a, b)
            if key not in table:
                if rng.random() < 0.3:
                    table[key] = ()
                else:
                    table[key] = tuple(
                        (p, rng.randint(-7, 7), rng.randint(1, 7))
                        for p in range(2, rng.randint(3, 6))
                    )
            return table[key]

        ta, tb = mk_terms(30), mk_terms(30)
        out_fast, out_pure = {}, {}
        _speed.pair_sweep(out_fast, ta, tb, rows)
        _pure.pair_sweep(out_pure, ta, tb, rows)
        assert set(out_fast) == set(out_pure)
        for u in out_fast:
            fast = {p: F(*v) for p, v in out_fast[u].items()}
            pure = {p: F(*v) for p, v in out_pure[u].items()}
            assert fast == pure


@needs_speed
def test_engine_agrees_across_backends(monkeypatch):
    from hurwitzrec.toprec import LambertEngine, required_order

    compiled = LambertEngine(order=required_order(2, 2)).w(2, 2)
    monkeypatch.setattr(_kernels, "conv", _pure.conv)
    monkeypatch.setattr(_kernels, "unit_inverse", _pure.unit_inverse)
    monkeypatch.setattr(_kernels, "pair_sweep", _pure.pair_sweep)
    monkeypatch.setattr(_kernels, "acc_pair", _pure.acc_pair)
    pure = LambertEngine(order=required_order(2, 2)).w(2, 2)
    assert compiled == pure
    assert compiled.canonical_json() == pure.canonical_json()


def test_backend_reported():
    import hurwitzrec

    assert hurwitzrec.KERNEL_BACKEND in ("pure", "compiled")
