#!/usr/bin/env python3
"""Brute-force oracle for the golden values frozen into the C++ tests.

Independent of the C++ code: its own GF(p^n) arithmetic, its own Mumford
enumeration, and a second route to |J| through point counts over F_q and
F_{q^2}: #J = (N1^2 + N2)/2 - q for genus 2.
"""
import itertools
import math
from fractions import Fraction


class GF:
    def __init__(self, p, modulus):
        # modulus: monic, low-degree-first, length n+1
        self.p = p
        self.mod = modulus
        self.n = len(modulus) - 1
        self.q = p ** self.n

    def elems(self):
        for idx in range(self.q):
            yield self.from_index(idx)

    def from_index(self, idx):
        c = []
        for _ in range(self.n):
            c.append(idx % self.p)
            idx //= self.p
        return tuple(c)

    def index(self, a):
        return sum(c * self.p ** i for i, c in enumerate(a))

    def zero(self):
        return (0,) * self.n

    def one(self):
        return (1,) + (0,) * (self.n - 1)

    def const(self, c):
        return ((c % self.p),) + (0,) * (self.n - 1)

    def add(self, a, b):
        return tuple((x + y) % self.p for x, y in zip(a, b))

    def sub(self, a, b):
        return tuple((x - y) % self.p for x, y in zip(a, b))

    def neg(self, a):
        return tuple((-x) % self.p for x in a)

    def mul(self, a, b):
        p, n = self.p, self.n
        prod = [0] * (2 * n - 1)
        for i, x in enumerate(a):
            for j, y in enumerate(b):
                prod[i + j] = (prod[i + j] + x * y) % p
        for d in range(2 * n - 2, n - 1, -1):
            c = prod[d]
            if c:
                for i in range(n + 1):
                    prod[d - n + i] = (prod[d - n + i] - c * self.mod[i]) % p
        return tuple(prod[:n])

    def pow(self, a, e):
        r = self.one()
        while e:
            if e & 1:
                r = self.mul(r, a)
            a = self.mul(a, a)
            e >>= 1
        return r

    def inv(self, a):
        return self.pow(a, self.q - 2)

    def is_zero(self, a):
        return not any(a)


def poly_trim(F, a):
    a = list(a)
    while a and F.is_zero(a[-1]):
        a.pop()
    return a


def poly_mul(F, a, b):
    if not a or not b:
        return []
    r = [F.zero()] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            r[i + j] = F.add(r[i + j], F.mul(x, y))
    return poly_trim(F, r)


def poly_sub(F, a, b):
    m = max(len(a), len(b))
    a = list(a) + [F.zero()] * (m - len(a))
    b = list(b) + [F.zero()] * (m - len(b))
    return poly_trim(F, [F.sub(x, y) for x, y in zip(a, b)])


def poly_rem(F, a, b):
    a = list(a)
    inv_lc = F.inv(b[-1])
    while len(a) >= len(b):
        c = F.mul(a[-1], inv_lc)
        shift = len(a) - len(b)
        for i, y in enumerate(b):
            a[shift + i] = F.sub(a[shift + i], F.mul(c, y))
        a = poly_trim(F, a)
    return a


def is_irreducible_bruteforce(p, coeffs):
    # no monic factor of degree 1..n/2 (exhaustive)
    F1 = GF(p, [0, 1])
    n = len(coeffs) - 1
    poly = [F1.const(c) for c in coeffs]
    for d in range(1, n // 2 + 1):
        for low in itertools.product(range(p), repeat=d):
            g = [F1.const(c) for c in low] + [F1.one()]
            if not poly_rem(F1, poly, g):
                return False
    return True


def smallest_irreducible(p, n):
    # low-degree-first lexicographic: c0 most significant
    for tup in itertools.product(range(p), repeat=n):
        cand = list(tup) + [1]
        if is_irreducible_bruteforce(p, cand):
            return cand


def points(F, f):
    pts = []
    for x in F.elems():
        fx = [F.zero()]
        fx = F.zero()
        for c in reversed(f):
            fx = F.add(F.mul(fx, x), c)
        for y in F.elems():
            if F.mul(y, y) == fx:
                pts.append((x, y))
    return pts


def enumerate_jacobian(F, f):
    divs = [((F.one(),), ())]
    for (x, y) in sorted(points(F, f), key=lambda pt: (F.index(pt[0]), F.index(pt[1]))):
        divs.append(((F.neg(x), F.one()), tuple(poly_trim(F, [y]))))
    w2 = []
    for u0, u1 in itertools.product(list(F.elems()), repeat=2):
        u = [u0, u1, F.one()]
        for v0, v1 in itertools.product(list(F.elems()), repeat=2):
            v = poly_trim(F, [v0, v1])
            r = poly_rem(F, poly_sub(F, poly_mul(F, v, v), f), u)
            if not r:
                w2.append(((u0, u1, F.one()), tuple(v)))
    return divs + w2


def jacobian_order_by_point_counts(p, f_int):
    # prime field only: count over F_p and F_{p^2}
    F1 = GF(p, [0, 1])
    n1 = len(points(F1, [F1.const(c) for c in f_int])) + 1
    F2 = GF(p, smallest_irreducible(p, 2))
    n2 = len(points(F2, [F2.const(c) for c in f_int])) + 1
    return (n1 * n1 + n2) // 2 - p


def weil(q):
    return ((math.sqrt(q) - 1) ** 4, (math.sqrt(q) + 1) ** 4)


def tally(F, divs, kind, k):
    counts = {}
    p = F.p
    for u, v in divs:
        deg = len(u) - 1
        if deg == 0:
            val = 0
        else:
            if kind in ("sum", "sk"):
                pre = F.neg(u[1]) if deg == 2 else F.neg(u[0])
            else:
                pre = u[0] if deg == 2 else F.neg(u[0])
            if kind in ("sum", "prod"):
                val = sum(pre[i] * p ** i for i in range(k))
            else:
                val = pre[0] % (2 ** k)
        counts[val] = counts.get(val, 0) + 1
    m = p ** k if kind in ("sum", "prod") else 2 ** k
    return m, counts


def sd_col(m, counts):
    N = sum(counts.values())
    sd = Fraction(0)
    col = Fraction(0)
    for x in range(m):
        c = counts.get(x, 0)
        sd += abs(Fraction(c, N) - Fraction(1, m))
        col += Fraction(c, N) ** 2
    return sd / 2, col


def main():
    import cmath
    print("irreducible(3,2) =", smallest_irreducible(3, 2))
    print("irreducible(7,2) =", smallest_irreducible(7, 2))
    print("irreducible(3,3) =", smallest_irreducible(3, 3))
    print("irreducible(5,2) =", smallest_irreducible(5, 2))
    print("irreducible(5,3) =", smallest_irreducible(5, 3))
    print("irreducible(3,4) =", smallest_irreducible(3, 4))
    curves = [(7, [1, 0, 0, 0, 0, 1]), (11, [1, 1, 0, 0, 0, 1]), (13, [1, 2, 0, 0, 0, 1])]
    for p, f_int in curves:
        F = GF(p, [0, 1])
        f = [F.const(c) for c in f_int]
        pts = points(F, f)
        divs = enumerate_jacobian(F, f)
        print(f"p={p} f={f_int} points={len(pts)} |J|={len(divs)} "
              f"|J|(point counts)={jacobian_order_by_point_counts(p, f_int)} weil={weil(p)}")
        if p == 7:
            print("  points:", [(x[0], y[0]) for x, y in pts])
        for kind in ("sum", "prod", "sk", "pk"):
            m, counts = tally(F, divs, kind, 1)
            sd, col = sd_col(m, counts)
            print(f"  {kind} k=1 m={m} counts={[counts.get(i, 0) for i in range(m)]} "
                  f"sd={sd} ({float(sd):.12g}) col={col} ({float(col):.12g})")
    # extension case
    mod = smallest_irreducible(3, 3)
    F = GF(3, mod)
    found = None
    for tup in itertools.product(range(F.q), repeat=5):
        f = [F.from_index(i) for i in tup] + [F.one()]
        # squarefree via brute force: no repeated root over F_q and gcd test by
        # checking f has no square factor of degree 1 or 2 over F_q
        ok = True
        for d in (1, 2):
            for low in itertools.product(list(F.elems()), repeat=d):
                g = list(low) + [F.one()]
                if not poly_rem(F, f, poly_mul(F, g, g)):
                    ok = False
                    break
            if not ok:
                break
        if ok:
            found = tup
            break
    f = [F.from_index(i) for i in found] + [F.one()]
    divs = enumerate_jacobian(F, f)
    print(f"p=3 n=3 modulus={mod} f(indices)={list(found) + [1]} points={len(points(F, f))} |J|={len(divs)} weil={weil(27)}")
    for kind in ("sum", "prod"):
        m, counts = tally(F, divs, kind, 1)
        sd, col = sd_col(m, counts)
        print(f"  {kind} k=1 m={m} counts={[counts.get(i, 0) for i in range(m)]} sd={float(sd):.12g} col={float(col):.12g}")
    # charsum values
    def e(p, t):
        return cmath.exp(2j * cmath.pi * t / p)
    g = sum(e(7, x * x % 7) for x in range(7))
    print("gauss7 |sum| =", abs(g), "mordell", 2 * 7 ** 0.75, "ratio", abs(g) / (2 * 7 ** 0.75))
    for p in (7, 31, 101):
        worst = 0
        for L in range(1, p + 1):
            s = sum(abs(sum(e(p, x * s_ % p) for s_ in range(L))) for x in range(p))
            worst = max(worst, s / (p * math.log2(p)))
            if p == 31 and L == 16:
                print("interval(31,16) =", repr(s), "bound", 31 * math.log2(31))
        print(f"interval p={p} max ratio {worst}")
    print("bound_lemma_sk(7,1) =", math.sqrt(2 / 7) * (1 + math.sqrt(math.log2(7)) / 8))
    print("bound_lemma_sk(127,1) =", math.sqrt(2 / 127) * (1 + math.sqrt(math.log2(127)) / 128))
    print("bound_thm1(3,2,1) =", math.sqrt(3) / (2 * 3 * 10))


if __name__ == "__main__":
    main()
