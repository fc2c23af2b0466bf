"""Independent oracles used to pin expected values before trusting the
engine.  Nothing here imports the normal-form machinery under test: Weyl
elements are checked through their faithful action on polynomials, and
limits through a standalone integer-polynomial leading-form comparison.
"""

from __future__ import annotations

from fractions import Fraction

from drasp4.scalars import GaussRat


# -- differential-operator action on C[x1, x2] ------------------------------
#
# A polynomial is a dict {(m, n): GaussRat} for x1^m x2^n.  A basis monomial
# (a, b, c, d) acts as: multiply by x1^d, multiply by x2^c, then apply the
# second derivative b times and the first derivative a times.

def poly_mono(m: int, n: int, coeff=1) -> dict:
    return {(m, n): GaussRat(coeff) if not isinstance(coeff, GaussRat) else coeff}


def _diff(poly: dict, var: int) -> dict:
    out = {}
    for (m, n), c in poly.items():
        if var == 0 and m > 0:
            out[(m - 1, n)] = c * m
        elif var == 1 and n > 0:
            out[(m, n - 1)] = c * n
    return {k: v for k, v in out.items() if v}


def apply_weyl(terms: dict, poly: dict) -> dict:
    """Action of a normal-ordered element {(a,b,c,d): coeff} on poly."""
    total = {}
    for (a, b, c, d), coeff in terms.items():
        cur = {(m + d, n + c): v for (m, n), v in poly.items()}
        for _ in range(b):
            cur = _diff(cur, 1)
        for _ in range(a):
            cur = _diff(cur, 0)
        for k, v in cur.items():
            s = total.get(k)
            val = coeff * v
            if s is None:
                total[k] = val
            else:
                s = s + val
                if s:
                    total[k] = s
                else:
                    del total[k]
    return {k: v for k, v in total.items() if v}


def compose_actions(u: dict, v: dict, max_arg_degree: int) -> dict:
    """Matrix of u then v acting on all monomials up to a degree, keyed by
    argument monomial; used to compare products against composed actions."""
    out = {}
    for m in range(max_arg_degree + 1):
        for n in range(max_arg_degree + 1 - m):
            out[(m, n)] = apply_weyl(u, apply_weyl(v, poly_mono(m, n)))
    return out


def action_table(u: dict, max_arg_degree: int) -> dict:
    out = {}
    for m in range(max_arg_degree + 1):
        for n in range(max_arg_degree + 1 - m):
            out[(m, n)] = apply_weyl(u, poly_mono(m, n))
    return out


# -- leading-form limits on standalone integer polynomials ------------------
#
# Polynomials are dicts {(ea, eb): Fraction}; nothing shared with the
# canonical-form engine.

def ipoly_mul(p: dict, q: dict) -> dict:
    out = {}
    for (a1, b1), c1 in p.items():
        for (a2, b2), c2 in q.items():
            k = (a1 + a2, b1 + b2)
            out[k] = out.get(k, Fraction(0)) + c1 * c2
    return {k: v for k, v in out.items() if v}


def ipoly_add(p: dict, q: dict) -> dict:
    out = dict(p)
    for k, v in q.items():
        s = out.get(k, Fraction(0)) + v
        if s:
            out[k] = s
        else:
            out.pop(k, None)
    return out


def ipoly_scale(p: dict, c) -> dict:
    return {k: v * c for k, v in p.items()} if c else {}


def ipoly_affine(ca, cb, c0) -> dict:
    out = {}
    for k, v in (((1, 0), ca), ((0, 1), cb), ((0, 0), c0)):
        if v:
            out[k] = Fraction(v)
    return out


def leading_form(p: dict) -> dict:
    d = max(a + b for a, b in p)
    return {k: v for k, v in p.items() if k[0] + k[1] == d}


def limit_by_leading_forms(num: dict, den: dict):
    """Returns a Fraction limit, 'divergent', or 'undefined'."""
    if not num:
        return Fraction(0)
    dn = max(a + b for a, b in num)
    dd = max(a + b for a, b in den)
    if dn < dd:
        return Fraction(0)
    if dn > dd:
        return "divergent"
    fn, fd = leading_form(num), leading_form(den)
    key = max(fd)
    ratio = fn.get(key, Fraction(0)) / fd[key]
    if ipoly_add(fn, ipoly_scale(fd, -ratio)):
        return "undefined"
    return ratio


def relation_coefficient_table() -> dict:
    """The four named affine scalars and the coefficient table realized as
    standalone integer polynomials (num, den), for limit oracles."""
    a = ipoly_affine(1, 0, 1)
    b = ipoly_affine(1, 1, 2)
    c = ipoly_affine(1, 2, 3)
    d = ipoly_affine(0, 1, 1)
    one = {(0, 0): Fraction(1)}

    def shifted(p, k):
        return ipoly_add(p, {(0, 0): Fraction(k)})

    f11 = (ipoly_mul(ipoly_mul(shifted(a, 1), shifted(a, -1)), shifted(b, 1)),
           ipoly_mul(ipoly_mul(a, a), b))
    f12 = (ipoly_scale(shifted(d, 1), -2), ipoly_mul(a, c))
    f21 = (ipoly_add(ipoly_mul(a, shifted(d, -1)), ipoly_mul(c, shifted(d, 1))),
           ipoly_mul(ipoly_mul(a, c), d))
    f22 = (shifted(d, 1), d)
    swap_ba = (shifted(c, 1), c)
    swap_a = (shifted(a, 1), a)
    return {"f11": f11, "f12": f12, "f21": f21, "f22": f22,
            "swap_ba": swap_ba, "swap_a": swap_a, "one": (one, one)}


def eval_ipoly(p: dict, va, vb) -> Fraction:
    total = Fraction(0)
    for (ea, eb), c in p.items():
        total += c * Fraction(va) ** ea * Fraction(vb) ** eb
    return total
