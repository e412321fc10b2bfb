"""Exact univariate polynomial arithmetic over the rationals.

Polynomials are dense little-endian tuples of Fraction; the empty tuple
is the zero polynomial.  Everything here is exact: no floating point.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Iterable, Sequence

Poly = tuple[Fraction, ...]


def poly(coeffs: Iterable) -> Poly:
    """Build a polynomial, trimming trailing zero coefficients."""
    cs = [Fraction(c) for c in coeffs]
    while cs and cs[-1] == 0:
        cs.pop()
    return tuple(cs)


def degree(p: Poly) -> int:
    """Degree of p; -1 for the zero polynomial."""
    return len(p) - 1


def add(p: Poly, q: Poly) -> Poly:
    n = max(len(p), len(q))
    return poly((p[i] if i < len(p) else 0) + (q[i] if i < len(q) else 0) for i in range(n))


def neg(p: Poly) -> Poly:
    return tuple(-c for c in p)


def sub(p: Poly, q: Poly) -> Poly:
    return add(p, neg(q))


def scale(p: Poly, s) -> Poly:
    return poly(c * Fraction(s) for c in p)


def mul(p: Poly, q: Poly) -> Poly:
    if not p or not q:
        return ()
    out = [Fraction(0)] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a:
            for j, b in enumerate(q):
                out[i + j] += a * b
    return poly(out)


def divmod_poly(p: Poly, q: Poly) -> tuple[Poly, Poly]:
    if not q:
        raise ZeroDivisionError("polynomial division by zero")
    r = list(p)
    quo = [Fraction(0)] * max(0, len(p) - len(q) + 1)
    dq = degree(q)
    lead = q[-1]
    for i in range(len(r) - 1, dq - 1, -1):
        if r[i] == 0:
            continue
        c = r[i] / lead
        quo[i - dq] = c
        for j, b in enumerate(q):
            r[i - dq + j] -= c * b
    return poly(quo), poly(r)


def rem(p: Poly, q: Poly) -> Poly:
    return divmod_poly(p, q)[1]


def monic(p: Poly) -> Poly:
    if not p:
        return p
    return scale(p, Fraction(1, 1) / p[-1])


def gcd(p: Poly, q: Poly) -> Poly:
    """Monic gcd by the Euclidean algorithm."""
    a, b = p, q
    while b:
        a, b = b, rem(a, b)
    return monic(a)


def derivative(p: Poly) -> Poly:
    return poly(i * c for i, c in enumerate(p) if i > 0)


def eval_at(p: Poly, x) -> Fraction:
    x = Fraction(x)
    acc = Fraction(0)
    for c in reversed(p):
        acc = acc * x + c
    return acc


def eval_interval(p: Poly, lo: Fraction, hi: Fraction) -> tuple[Fraction, Fraction]:
    """Enclosure of p([lo, hi]) by interval Horner evaluation."""
    vlo = vhi = p[-1] if p else Fraction(0)
    for c in reversed(p[:-1]):
        prods = (vlo * lo, vlo * hi, vhi * lo, vhi * hi)
        vlo, vhi = min(prods) + c, max(prods) + c
    return vlo, vhi


def reverse(p: Poly) -> Poly:
    """The reciprocal polynomial z^deg(p) * p(1/z)."""
    return poly(reversed(p))


def is_squarefree(p: Poly) -> bool:
    return degree(gcd(p, derivative(p))) <= 0


def sturm_chain(p: Poly) -> list[Poly]:
    """Sturm sequence p, p', -rem(...), ... of a squarefree polynomial."""
    chain = [p, derivative(p)]
    while chain[-1]:
        r = rem(chain[-2], chain[-1])
        if not r:
            break
        chain.append(neg(r))
    return [c for c in chain if c]


def _variations(values: Sequence[Fraction]) -> int:
    signs = [v for v in values if v != 0]
    return sum(1 for a, b in zip(signs, signs[1:]) if (a > 0) != (b > 0))


def count_real_roots(p: Poly, lo, hi) -> int:
    """Number of distinct real roots of squarefree p in (lo, hi].

    Requires p(lo) != 0 and p(hi) != 0 (callers arrange this).
    """
    lo, hi = Fraction(lo), Fraction(hi)
    if eval_at(p, lo) == 0 or eval_at(p, hi) == 0:
        raise ValueError("Sturm endpoints must not be roots")
    chain = sturm_chain(p)
    va = _variations([eval_at(c, lo) for c in chain])
    vb = _variations([eval_at(c, hi) for c in chain])
    return va - vb


def integer_roots(p: Poly) -> list[int]:
    """Integer roots of an integer polynomial (rational roots of a monic one)."""
    if not p:
        return []
    const = p[0]
    if const == 0:
        roots = integer_roots(poly(p[1:]))
        return sorted(set(roots) | {0})
    n = abs(int(const))
    cands: set[int] = set()
    for a in range(1, int(math.isqrt(n)) + 1):
        if n % a == 0:
            cands.update({a, -a, n // a, -(n // a)})
    return sorted(r for r in cands if eval_at(p, r) == 0)


def irreducible_over_q(int_coeffs: Sequence[int]) -> tuple[bool, bool]:
    """(irreducible, fully_verified) for a monic integer polynomial.

    Exact for degree <= 4 (rational roots, then quadratic*quadratic
    splittings for quartics).  Degree >= 5 only gets the rational-root
    and squarefree tests, flagged as not fully verified.
    """
    p = poly(int_coeffs)
    d = degree(p)
    if d <= 0:
        return False, True
    if d == 1:
        return True, True
    if p[0] == 0:
        return False, True
    if not is_squarefree(p):
        return False, True
    if integer_roots(p):
        return False, True
    if d <= 3:
        return True, True
    if d == 4:
        # monic quartic without linear factors: only (x^2+ux+v)(x^2+sx+w)
        p0, p1, p2, p3 = (int(p[i]) for i in range(4))
        n = abs(p0)
        divisors: set[int] = set()
        for a in range(1, int(math.isqrt(n)) + 1):
            if n % a == 0:
                divisors.update({a, n // a})
        for v in sorted(divisors | {-dv for dv in divisors}):
            if v == 0 or p0 % v != 0:
                continue
            w = p0 // v
            # u + s = p3 and u*s = p2 - v - w; integer u, s need a square disc
            disc = p3 * p3 - 4 * (p2 - v - w)
            if disc < 0:
                continue
            r = math.isqrt(disc)
            if r * r != disc:
                continue
            for u in {(p3 + r) // 2, (p3 - r) // 2}:
                if 2 * u not in (p3 + r, p3 - r):
                    continue
                s = p3 - u
                if u * w + v * s == p1:
                    return False, True
        return True, True
    return True, False


# ---------------------------------------------------------------------------
# Root counting relative to the unit circle (exact Schur-Cohn form)
# ---------------------------------------------------------------------------


def schur_cohn_matrix(p: Poly) -> list[list[Fraction]]:
    """The symmetric Schur-Cohn form of p.

    H[j][k] = sum_m (a_{j-m} a_{k-m} - a_{n-j+m} a_{n-k+m});  its signature
    is (#roots outside unit circle) - (#roots inside) when p and its
    reciprocal are coprime, and it is singular otherwise.
    """
    n = degree(p)
    a = list(p) + [Fraction(0)]

    def coef(i: int) -> Fraction:
        return a[i] if 0 <= i <= n else Fraction(0)

    H = [[Fraction(0)] * n for _ in range(n)]
    for j in range(n):
        for k in range(n):
            s = Fraction(0)
            for m in range(min(j, k) + 1):
                s += coef(j - m) * coef(k - m) - coef(n - j + m) * coef(n - k + m)
            H[j][k] = s
    return H


def charpoly(M: list[list[Fraction]]) -> Poly:
    """Characteristic polynomial det(xI - M) by Faddeev-LeVerrier."""
    n = len(M)
    cs = [Fraction(0)] * (n + 1)
    cs[n] = Fraction(1)
    Mk = [[Fraction(1) if i == j else Fraction(0) for j in range(n)] for i in range(n)]
    for k in range(1, n + 1):
        Mk = _mat_mul(M, Mk)
        t = sum(Mk[i][i] for i in range(n))
        cs[n - k] = -t / k
        for i in range(n):
            Mk[i][i] += cs[n - k]
    return poly(cs)


def _mat_mul(A: list[list[Fraction]], B: list[list[Fraction]]) -> list[list[Fraction]]:
    n = len(A)
    out = [[Fraction(0)] * n for _ in range(n)]
    for i in range(n):
        for k in range(n):
            if A[i][k]:
                aik = A[i][k]
                for j in range(n):
                    out[i][j] += aik * B[k][j]
    return out


def symmetric_sign_counts(M: list[list[Fraction]]) -> tuple[int, int, int]:
    """(positive, negative, zero) eigenvalue counts of a symmetric matrix.

    Descartes' rule of signs is exact on the characteristic polynomial
    because a symmetric matrix has a real spectrum.
    """
    cp = charpoly(M)
    zeros = 0
    cs = list(cp)
    while cs and cs[0] == 0:
        cs.pop(0)
        zeros += 1
    pos = _variations(cs)
    neg_cs = [c if i % 2 == 0 else -c for i, c in enumerate(cs)]
    neg = _variations(neg_cs)
    return pos, neg, zeros


def _strip_root(p: Poly, r: int) -> tuple[Poly, int]:
    count = 0
    q = poly((-r, 1))
    while p and eval_at(p, r) == 0:
        p = divmod_poly(p, q)[0]
        count += 1
    return p, count


def palindromic_u_transform(g: Poly) -> Poly:
    """Write a palindromic even-degree g as x^m * h(x + 1/x); return h.

    Uses the recursion C_0 = 2, C_1 = u, C_{k+1} = u C_k - C_{k-1} for
    x^k + x^{-k} = C_k(x + 1/x).
    """
    n = degree(g)
    if n % 2 != 0 or any(g[i] != g[n - i] for i in range(n + 1)):
        raise ValueError("not a palindromic polynomial of even degree")
    m = n // 2
    C: list[Poly] = [poly((2,)), poly((0, 1))]
    for _ in range(2, m + 1):
        C.append(sub(mul(poly((0, 1)), C[-1]), C[-2]))
    h = poly((g[m],))
    for k in range(1, m + 1):
        h = add(h, scale(C[k], g[m + k]))
    return h


def unit_disk_root_profile(p: Poly) -> tuple[int, int, int]:
    """(inside, on, outside) root counts of squarefree p w.r.t. |z| = 1.

    The reciprocal-pair part gcd(p, reverse(p)) is handled by locating
    circle roots through the x + 1/x substitution; the coprime part goes
    through the Schur-Cohn form.
    """
    p = monic(p)
    n = degree(p)
    if n <= 0:
        return 0, 0, 0
    if not is_squarefree(p):
        raise ValueError("unit_disk_root_profile requires a squarefree polynomial")
    g = gcd(p, reverse(p))
    q = divmod_poly(p, g)[0] if degree(g) > 0 else p

    on = 0
    inside_g = 0
    if degree(g) > 0:
        g0, e1 = _strip_root(g, 1)
        g0, e2 = _strip_root(g0, -1)
        on += e1 + e2
        if degree(g0) > 0:
            h = palindromic_u_transform(monic(g0))
            if eval_at(h, 2) == 0 or eval_at(h, -2) == 0:
                # u = +-2 corresponds to x = +-1, stripped above
                raise ValueError("unexpected root of u-transform at +-2")
            circle_pairs = count_real_roots(h, -2, 2)
            on += 2 * circle_pairs
            inside_g = (degree(g0) - 2 * circle_pairs) // 2

    inside_q = outside_q = 0
    if degree(q) > 0:
        H = schur_cohn_matrix(q)
        pos, negk, zeros = symmetric_sign_counts(H)
        if zeros != 0:
            raise ValueError("singular Schur-Cohn form on the coprime part")
        dq = degree(q)
        # signature = outside - inside and pos + neg = dq here
        outside_q = (dq + (pos - negk)) // 2
        inside_q = dq - outside_q

    inside = inside_g + inside_q
    outside = n - inside - on
    return inside, on, outside
