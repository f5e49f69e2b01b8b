"""Regenerates tests/data/bounds_golden.txt.

Each line: kind n r k p_num p_den q_num q_den d, meaning p + q*sqrt(d)
(q = 0 and d = 0 for rational values), or "kind n r k na" when the bound
does not apply.
"""

import sys
from fractions import Fraction
from math import comb, isqrt

import sympy


def value(kind, n, r, k):
    c = comb(n, r - 1)
    if kind == "trivial":
        return Fraction((k - 1) * c)
    if kind == "kalai":
        return Fraction(k - 1, r) * c
    if kind == "tight_path":
        if r % 2 == 0:
            return Fraction(k - 1, 2) * c
        return Fraction(k + (k - 1) // r, 2) * c
    if kind == "perles":
        return None if r != 2 else Fraction((k - 1) * n, 2)
    if kind == "zigzag":
        return None if r % 2 else Fraction((k - 1) * (r - 1), r) * c
    if kind == "stack_leading":
        return None if r % 2 else Fraction((k - 1) * (r - 1)) * c
    if kind == "small_k":
        return None if k > r + 1 else Fraction(k * k, 2 * r) * c
    if kind == "odd_improved":
        if r % 2 == 0:
            return None
        a = (k - 1) // r
        b = sympy.Rational((r - 1) * (k - 1 - a), 2)
        return sympy.nsimplify((sympy.sqrt(a) + sympy.sqrt(b)) ** 2 / r * c)
    raise ValueError(kind)


def split(v):
    if isinstance(v, Fraction):
        return v, Fraction(0), 0
    v = sympy.expand(v)
    p, q, d = sympy.Rational(0), sympy.Rational(0), 0
    for term in sympy.Add.make_args(v):
        if term.is_Rational:
            p += term
        else:
            coeff, root = term.as_coeff_Mul()
            assert root.is_Pow and root.exp == sympy.Rational(1, 2), term
            q += coeff
            d = int(root.base)
    return Fraction(int(p.p), int(p.q)), Fraction(int(q.p), int(q.q)), d


KINDS = ["trivial", "kalai", "tight_path", "perles", "zigzag", "stack_leading",
         "small_k", "odd_improved"]


def main(out):
    for n in range(4, 11):
        for r in (2, 3, 4):
            for k in range(1, 7):
                for kind in KINDS:
                    v = value(kind, n, r, k)
                    if v is None:
                        out.write(f"{kind} {n} {r} {k} na\n")
                        continue
                    p, q, d = split(v)
                    assert d == 0 or isqrt(d) ** 2 != d
                    out.write(f"{kind} {n} {r} {k} {p.numerator} {p.denominator} "
                              f"{q.numerator} {q.denominator} {d}\n")


if __name__ == "__main__":
    main(sys.stdout)
