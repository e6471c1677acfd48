"""Exact arithmetic in finite fields F_{p^k} represented as F_p[x]/(modulus).

A field element is an immutable coefficient tuple ``(c0, ..., c_{k-1})`` of
residues mod p.  All tie-breaking (modulus generation, square roots, roots of
unity, embeddings) is lexicographic on coefficient tuples, so identical inputs
always produce identical outputs.
"""

from __future__ import annotations

import itertools
import math
import random

from .numtheory import factorize, inv_mod, is_prime, subseed

# ---------------------------------------------------------------------------
# polynomials over F_p as int tuples (c0, c1, ..., cd); () is the zero poly
# ---------------------------------------------------------------------------


def _ptrim(c: list[int]) -> tuple[int, ...]:
    i = len(c)
    while i > 0 and c[i - 1] == 0:
        i -= 1
    return tuple(c[:i])


def _pmul(a, b, p):
    if not a or not b:
        return ()
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] = (out[i + j] + ai * bj) % p
    return _ptrim(out)


def _psub(a, b, p):
    n = max(len(a), len(b))
    return _ptrim([((a[i] if i < len(a) else 0) - (b[i] if i < len(b) else 0)) % p
                   for i in range(n)])


def _pmod(a, f, p):
    """Remainder of a modulo a monic polynomial f."""
    r = list(a)
    df = len(f) - 1
    for i in range(len(r) - 1, df - 1, -1):
        c = r[i] % p
        if c:
            for j in range(df + 1):
                r[i - df + j] = (r[i - df + j] - c * f[j]) % p
    return _ptrim(r[:df])


def _pgcd(a, b, p):
    while b:
        inv = inv_mod(b[-1], p)
        bm = tuple(c * inv % p for c in b)
        a, b = b, _pmod(a, bm, p)
    if a:
        inv = inv_mod(a[-1], p)
        a = tuple(c * inv % p for c in a)
    return a


def _ppowmod(a, e, f, p):
    """a^e modulo the monic polynomial f."""
    result = (1,)
    base = _pmod(a, f, p)
    while e:
        if e & 1:
            result = _pmod(_pmul(result, base, p), f, p)
        base = _pmod(_pmul(base, base, p), f, p)
        e >>= 1
    return result


def _is_irreducible(f: tuple[int, ...], p: int) -> bool:
    """Rabin's test for a monic polynomial f over F_p: f is irreducible iff
    x^(p^k) = x mod f and gcd(x^(p^(k/r)) - x, f) = 1 for every prime r | k."""
    k = len(f) - 1
    if k < 1:
        return False
    if f[0] == 0 and k > 1:
        return False  # divisible by x
    if k == 1:
        return True
    x = (0, 1)
    if _psub(_ppowmod(x, p**k, f, p), x, p):
        return False
    for r in factorize(k):
        d = _psub(_ppowmod(x, p ** (k // r), f, p), x, p)
        if _pgcd(d, f, p) != (1,):
            return False
    return True


def _min_irreducible(p: int, k: int) -> tuple[int, ...]:
    """Least monic irreducible of degree k over F_p, ordering tails
    (c0, .., c_{k-1}) by the integer value c0 + c1*p + ... (so x^4+x+1 for
    F_16, x^2+1 for F_121)."""
    if k == 1:
        return (0, 1)
    for v in range(p**k):
        tail = []
        w = v
        for _ in range(k):
            tail.append(w % p)
            w //= p
        f = tuple(tail) + (1,)
        if _is_irreducible(f, p):
            return f
    raise RuntimeError("no irreducible polynomial found")  # unreachable


# ---------------------------------------------------------------------------
# field descriptors and elements
# ---------------------------------------------------------------------------

_FIELD_CACHE: dict[tuple, "FieldDesc"] = {}


def field(p: int, k: int = 1, modulus=None) -> "FieldDesc":
    """Descriptor for F_{p^k}.

    When ``modulus`` is omitted the lexicographically least monic irreducible
    of degree k is used, so repeated calls agree.  A supplied modulus must be
    monic of degree k and irreducible.
    """
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    if k < 1:
        raise ValueError("extension degree must be >= 1")
    if modulus is not None:
        f = tuple(int(c) % p for c in modulus)
        if len(f) != k + 1 or f[-1] != 1:
            raise ValueError("modulus must be monic of degree k")
        if not _is_irreducible(f, p):
            raise ValueError("modulus is reducible over F_p")
    else:
        f = _min_irreducible(p, k)
    key = (p, k, f)
    desc = _FIELD_CACHE.get(key)
    if desc is None:
        desc = FieldDesc(p, k, f)
        _FIELD_CACHE[key] = desc
    return desc


class FieldDesc:
    """Immutable description of F_{p^k} = F_p[x]/(modulus)."""

    __slots__ = ("p", "k", "modulus", "q", "_tails", "_embeddings", "_proj",
                 "_nonresidue", "_roots_cache", "_hashv")

    def __init__(self, p: int, k: int, modulus: tuple[int, ...]):
        self.p = p
        self.k = k
        self.modulus = modulus
        self.q = p**k
        # x^(k+i) mod modulus for i = 0..k-2, used to fold products
        tails = []
        cur = _pmod(tuple([0] * k + [1]), modulus, p)
        for _ in range(max(k - 1, 0)):
            tails.append(tuple(cur[i] if i < len(cur) else 0 for i in range(k)))
            cur = _pmod(_pmul(cur, (0, 1), p), modulus, p)
        self._tails = tails
        self._embeddings: dict = {}
        self._proj: dict = {}
        self._nonresidue = None
        self._roots_cache: dict = {}
        self._hashv = hash((p, k, modulus))

    # -- identity ----------------------------------------------------------
    def __eq__(self, other):
        return self is other or (
            isinstance(other, FieldDesc)
            and (self.p, self.k, self.modulus) == (other.p, other.k, other.modulus)
        )

    def __hash__(self):
        return self._hashv

    def __repr__(self):
        if self.k == 1:
            return f"GF({self.p})"
        return f"GF({self.p}^{self.k})"

    # -- element constructors ----------------------------------------------
    def __call__(self, value) -> "FieldElem":
        if isinstance(value, FieldElem):
            if value.field == self:
                return value
            raise ValueError("element belongs to a different field")
        if isinstance(value, int):
            c = [value % self.p] + [0] * (self.k - 1)
            return FieldElem(self, tuple(c))
        c = [int(v) % self.p for v in value]
        if len(c) > self.k:
            c = list(_pmod(tuple(c), self.modulus, self.p))
        c += [0] * (self.k - len(c))
        return FieldElem(self, tuple(c))

    def zero(self) -> "FieldElem":
        return FieldElem(self, (0,) * self.k)

    def one(self) -> "FieldElem":
        return FieldElem(self, (1,) + (0,) * (self.k - 1))

    def gen(self) -> "FieldElem":
        if self.k == 1:
            return self.one()
        return FieldElem(self, (0, 1) + (0,) * (self.k - 2))

    def elements(self):
        """All elements in lexicographic coefficient order (small fields only)."""
        if self.q > 2**22:
            raise ValueError("field too large to enumerate")
        for c in itertools.product(range(self.p), repeat=self.k):
            yield FieldElem(self, c)

    def random_element(self, rng: random.Random) -> "FieldElem":
        return FieldElem(self, tuple(rng.randrange(self.p) for _ in range(self.k)))

    # -- raw tuple arithmetic ------------------------------------------------
    def _mul(self, a, b):
        p, k = self.p, self.k
        if k == 1:
            return (a[0] * b[0] % p,)
        prod = [0] * (2 * k - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    prod[i + j] += ai * bj
        res = [c % p for c in prod[:k]]
        for i in range(k - 1):
            c = prod[k + i] % p
            if c:
                t = self._tails[i]
                for j in range(k):
                    if t[j]:
                        res[j] = (res[j] + c * t[j]) % p
        return tuple(res)

    def _inv(self, a):
        if not any(a):
            raise ZeroDivisionError("inversion of zero field element")
        p = self.p
        if self.k == 1:
            return (inv_mod(a[0], p),)
        # extended Euclid on (a, modulus)
        r0, r1 = self.modulus, _ptrim(list(a))
        s0, s1 = (), (1,)
        while len(r1) > 1:
            inv = inv_mod(r1[-1], p)
            r1m = tuple(c * inv % p for c in r1)
            q_rem = _pmod(r0, r1m, p)
            # quotient q with r0 = q*r1 + rem; compute via long division
            q = self._pdiv(r0, r1)
            r0, r1 = r1, q_rem
            s0, s1 = s1, _ptrim([(x - y) % p for x, y in
                                 itertools.zip_longest(s0, _pmul(q, s1, p), fillvalue=0)])
        c = inv_mod(r1[0], p)
        out = tuple(v * c % p for v in s1)
        return tuple(out[i] if i < len(out) else 0 for i in range(self.k))

    def _pdiv(self, a, b):
        """Quotient of a by b over F_p (b nonzero)."""
        p = self.p
        inv = inv_mod(b[-1], p)
        r = list(a)
        q = [0] * max(len(a) - len(b) + 1, 0)
        for i in range(len(a) - len(b), -1, -1):
            c = r[i + len(b) - 1] * inv % p
            if c:
                q[i] = c
                for j, bj in enumerate(b):
                    r[i + j] = (r[i + j] - c * bj) % p
        return _ptrim(q)


class FieldElem:
    """Immutable element of a FieldDesc; supports +, -, *, /, **, ==."""

    __slots__ = ("field", "c")

    def __init__(self, field_: FieldDesc, coeffs: tuple[int, ...]):
        self.field = field_
        self.c = coeffs

    # -- helpers -------------------------------------------------------------
    def _coerce(self, other):
        if isinstance(other, FieldElem):
            if other.field != self.field:
                raise ValueError("field mismatch")
            return other
        if isinstance(other, int):
            return self.field(other)
        return NotImplemented

    def is_zero(self) -> bool:
        return not any(self.c)

    def __bool__(self):
        return any(self.c)

    # -- arithmetic ------------------------------------------------------------
    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        p = self.field.p
        return FieldElem(self.field, tuple((x + y) % p for x, y in zip(self.c, o.c)))

    __radd__ = __add__

    def __neg__(self):
        p = self.field.p
        return FieldElem(self.field, tuple(-x % p for x in self.c))

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        p = self.field.p
        return FieldElem(self.field, tuple((x - y) % p for x, y in zip(self.c, o.c)))

    def __rsub__(self, other):
        return -(self - other)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return FieldElem(self.field, self.field._mul(self.c, o.c))

    __rmul__ = __mul__

    def inv(self) -> "FieldElem":
        return FieldElem(self.field, self.field._inv(self.c))

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return self * o.inv()

    def __rtruediv__(self, other):
        return self.field(other) / self

    def __pow__(self, e: int):
        if e < 0:
            return self.inv() ** (-e)
        result = self.field.one()
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, int):
            return self == self.field(other)
        return (
            isinstance(other, FieldElem)
            and self.field == other.field
            and self.c == other.c
        )

    def __hash__(self):
        return hash((self.field._hashv, self.c))

    def __repr__(self):
        if self.field.k == 1:
            return str(self.c[0])
        terms = []
        for i, v in enumerate(self.c):
            if v == 0:
                continue
            if i == 0:
                terms.append(str(v))
            elif i == 1:
                terms.append("x" if v == 1 else f"{v}*x")
            else:
                terms.append(f"x^{i}" if v == 1 else f"{v}*x^{i}")
        return " + ".join(terms) if terms else "0"

    # -- field-specific operations ---------------------------------------------
    def frobenius(self, m: int = 1) -> "FieldElem":
        """The p^m-power Frobenius image of the element."""
        F = self.field
        if F.k == 1 or self.is_zero() or m % F.k == 0:
            return self
        return self ** (F.p ** (m % F.k))

    def sqrt(self):
        """A square root with deterministic (lexicographically least) sign,
        or None when the element is not a square."""
        F = self.field
        if self.is_zero():
            return self
        if F.p == 2:
            # squaring is a bijection in characteristic 2
            return self ** (F.q // 2)
        if self ** ((F.q - 1) // 2) != F.one():
            return None
        r = _tonelli(self)
        return min(r, -r, key=lambda e: e.c)


# ---------------------------------------------------------------------------
# square roots, n-th roots, roots of unity
# ---------------------------------------------------------------------------


def _lex_nonresidue(F: FieldDesc) -> FieldElem:
    if F._nonresidue is not None:
        return F._nonresidue
    e = (F.q - 1) // 2
    one = F.one()
    # scan in lexicographic order; cheap F_p constants come first
    count = 0
    for c in itertools.product(range(F.p), repeat=F.k):
        a = FieldElem(F, c)
        if a.is_zero():
            continue
        if a**e != one:
            F._nonresidue = a
            return a
        count += 1
        if count > 10**6:
            break
    raise RuntimeError("no quadratic non-residue found")  # unreachable for q odd


def _tonelli(a: FieldElem) -> FieldElem:
    """Tonelli-Shanks in F_q, q odd; a must be a nonzero square."""
    F = a.field
    q = F.q
    s, t = 0, q - 1
    while t % 2 == 0:
        s += 1
        t //= 2
    z = _lex_nonresidue(F)
    m = s
    c = z**t
    r = a ** ((t + 1) // 2)
    x = a**t
    one = F.one()
    while x != one:
        i = 0
        xx = x
        while xx != one:
            xx = xx * xx
            i += 1
        b = c ** (1 << (m - i - 1))
        m = i
        c = b * b
        x = x * c
        r = r * b
    return r


def _rth_root(a: FieldElem, r: int):
    """One r-th root (r prime) of a, or None; deterministic."""
    F = a.field
    q = F.q
    if a.is_zero():
        return a
    if (q - 1) % r != 0:
        return a ** inv_mod(r, q - 1)
    if a ** ((q - 1) // r) != F.one():
        return None
    if r == 2:
        return _tonelli(a)
    # Adleman-Manders-Miller
    s, t = 0, q - 1
    while t % r == 0:
        s += 1
        t //= r
    eta = None
    count = 0
    for c in itertools.product(range(F.p), repeat=F.k):
        cand = FieldElem(F, c)
        if cand.is_zero():
            continue
        if cand ** ((q - 1) // r) != F.one():
            eta = cand
            break
        count += 1
        if count > 10**6:
            raise RuntimeError("no r-th power non-residue found")
    g = eta**t  # order r^s
    # alpha: r*alpha = 1 mod t
    alpha = inv_mod(r, t)
    m = (r * alpha - 1) // t
    x0 = a**alpha  # x0^r = a * (a^t)^m
    # discrete log of a^t in <g> by base-r digits
    b = a**t
    mu = g ** (r ** (s - 1))  # primitive r-th root of unity
    mu_pows = {}
    acc = F.one()
    for i in range(r):
        mu_pows[acc.c] = i
        acc = acc * mu
    e = 0
    for i in range(s):
        w = (b * g ** (-e % (q - 1))) ** (r ** (s - 1 - i))
        d = mu_pows[w.c]
        e += d * r**i
    if e % r != 0:
        return None
    x = x0 * g ** ((-(e // r) * m) % (r**s))
    assert x**r == a
    return x


def nth_root(a: FieldElem, n: int):
    """One n-th root of a (deterministic), or None if a is not an n-th power."""
    x = a
    for r, e in factorize(n).items():
        for _ in range(e):
            x = _rth_root(x, r)
            if x is None:
                return None
    return x


def all_nth_roots(a: FieldElem, n: int) -> list[FieldElem]:
    """All n-th roots of a, sorted lexicographically."""
    F = a.field
    x = nth_root(a, n)
    if x is None:
        return []
    if a.is_zero():
        return [a]
    g = math.gcd(n, F.q - 1)
    if g == 1:
        return [x]
    zeta = primitive_root_of_unity(F, g)
    out = set()
    acc = F.one()
    for _ in range(g):
        out.add((x * acc).c)
        acc = acc * zeta
    return [FieldElem(F, c) for c in sorted(out)]


def primitive_root_of_unity(F: FieldDesc, n: int) -> FieldElem:
    """The lexicographically least element of multiplicative order exactly n."""
    if n == 1:
        return F.one()
    if (F.q - 1) % n != 0:
        raise ValueError(f"{n} does not divide q - 1 = {F.q - 1}")
    cached = F._roots_cache.get(("zeta", n))
    if cached is not None:
        return cached
    primes = list(factorize(n))
    b = None
    count = 0
    for c in itertools.product(range(F.p), repeat=F.k):
        a = FieldElem(F, c)
        if a.is_zero():
            continue
        cand = a ** ((F.q - 1) // n)
        if all(cand ** (n // r) != F.one() for r in primes):
            b = cand
            break
        count += 1
        if count > 10**6:
            raise RuntimeError("no primitive root of unity found")
    # the full set of primitive n-th roots is {b^j : gcd(j, n) = 1}
    best = b
    acc = b
    for j in range(2, n):
        acc = acc * b
        if math.gcd(j, n) == 1 and acc.c < best.c:
            best = acc
    F._roots_cache[("zeta", n)] = best
    return best


# ---------------------------------------------------------------------------
# polynomials with FieldElem coefficients (for root finding)
# ---------------------------------------------------------------------------


def _gtrim(f):
    i = len(f)
    while i > 0 and f[i - 1].is_zero():
        i -= 1
    return f[:i]


def _gmulmod(a, b, f):
    if not a or not b:
        return []
    F = f[0].field
    out = [F.zero()] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if not ai.is_zero():
            for j, bj in enumerate(b):
                out[i + j] = out[i + j] + ai * bj
    return _gmod(out, f)


def _gmod(a, f):
    """a mod f, f monic."""
    r = list(a)
    df = len(f) - 1
    for i in range(len(r) - 1, df - 1, -1):
        c = r[i]
        if not c.is_zero():
            for j in range(df + 1):
                r[i - df + j] = r[i - df + j] - c * f[j]
    return _gtrim(r[:df])


def _ggcd(a, b):
    a, b = _gtrim(list(a)), _gtrim(list(b))
    while b:
        lead = b[-1].inv()
        bm = [c * lead for c in b]
        a, b = b, _gmod(a, bm)
    if a:
        lead = a[-1].inv()
        a = [c * lead for c in a]
    return a


def _gpowmod_x(e: int, f):
    """x^e mod f (f monic over FieldElem)."""
    F = f[0].field
    result = [F.one()]
    base = _gmod([F.zero(), F.one()], f)
    while e:
        if e & 1:
            result = _gmulmod(result, base, f)
        base = _gmulmod(base, base, f)
        e >>= 1
    return result


def _groots(f, rng: random.Random) -> list[FieldElem]:
    """All roots in the coefficient field of a monic squarefree polynomial
    that splits completely (Cantor-Zassenhaus splitting, odd characteristic;
    exhaustive scan for small fields)."""
    f = _gtrim(list(f))
    F = f[0].field
    lead = f[-1].inv()
    f = [c * lead for c in f]
    if len(f) == 1:
        return []
    if F.q <= 2**16:
        out = []
        for a in F.elements():
            acc = F.zero()
            for c in reversed(f):
                acc = acc * a + c
            if acc.is_zero():
                out.append(a)
        return out
    if len(f) == 2:
        return [-f[0]]
    if len(f) == 3 and F.p != 2:
        b, c = f[1], f[0]
        disc = b * b - 4 * c
        s = disc.sqrt()
        if s is None:
            return []
        half = F(2).inv()
        return [(-b + s) * half, (-b - s) * half]
    if F.p == 2:
        raise NotImplementedError("root splitting in large characteristic-2 fields")
    # Cantor-Zassenhaus equal-degree (degree 1) splitting
    e = (F.q - 1) // 2
    for _ in range(64):
        a = F.random_element(rng)
        h = _gpow_shifted(a, e, f)
        h = [c for c in h]
        if h:
            h[0] = h[0] - F.one()
        else:
            h = [-F.one()]
        g = _ggcd(h, f)
        if 0 < len(g) - 1 < len(f) - 1:
            q2 = _gquot(f, g)
            return _groots(g, rng) + _groots(q2, rng)
    raise RuntimeError("root splitting failed to converge")


def _gpow_shifted(a: FieldElem, e: int, f):
    """(x + a)^e mod f."""
    F = a.field
    result = [F.one()]
    base = _gmod([a, F.one()], f)
    while e:
        if e & 1:
            result = _gmulmod(result, base, f)
        base = _gmulmod(base, base, f)
        e >>= 1
    return result


def _gquot(a, b):
    """Quotient a / b for monic b dividing a."""
    F = b[0].field
    r = list(a)
    db = len(b) - 1
    q = [F.zero()] * (len(a) - db)
    for i in range(len(a) - db - 1, -1, -1):
        c = r[i + db]
        q[i] = c
        if not c.is_zero():
            for j in range(db + 1):
                r[i + j] = r[i + j] - c * b[j]
    return _gtrim(q)


# ---------------------------------------------------------------------------
# embeddings between fields of the same characteristic
# ---------------------------------------------------------------------------


def embedding(F1: FieldDesc, F2: FieldDesc):
    """The canonical ring embedding F_{p^k} -> F_{p^k'}, k | k'.

    Canonical means: the generator of F1 maps to the lexicographically least
    root of F1's modulus in F2.  Chains through an intermediate field are only
    guaranteed to agree with the direct embedding when the bottom field is
    F_p itself (constants embed canonically).
    """
    if F1 == F2:
        return lambda a: a
    if F1.p != F2.p:
        raise ValueError("different characteristics")
    if F2.k % F1.k != 0:
        raise ValueError(f"degree {F1.k} does not divide {F2.k}")
    cached = F2._embeddings.get(F1)
    if cached is not None:
        return cached

    if F1.k == 1:
        def emb_const(a, _F2=F2):
            return _F2(a.c[0])

        F2._embeddings[F1] = emb_const
        return emb_const

    # find the lexicographically least root of F1.modulus in F2
    fpoly = [F2(c) for c in F1.modulus]
    rng = random.Random(subseed(0, "embed", F1.p, F1.k, F1.modulus, F2.k, F2.modulus))
    if F2.q <= 2**16:
        roots = _groots(fpoly, rng)
    else:
        # one root suffices: the full root set is its Frobenius orbit
        r = _groots_any(fpoly, rng)
        roots = []
        for _ in range(F1.k):
            roots.append(r)
            r = r.frobenius(1)
    root = min(roots, key=lambda e: e.c)
    powers = [F2.one()]
    for _ in range(F1.k - 1):
        powers.append(powers[-1] * root)

    def emb(a, _powers=powers, _F2=F2):
        acc = _F2.zero()
        for coeff, pw in zip(a.c, _powers):
            if coeff:
                acc = acc + pw * coeff
        return acc

    F2._embeddings[F1] = emb
    return emb


def _groots_any(f, rng) -> FieldElem:
    """One root of f (monic over F2, splits completely); large fields."""
    F = f[0].field
    if len(f) == 3 and F.p != 2:
        b, c = f[1] / f[2], f[0] / f[2]
        disc = b * b - 4 * c
        s = disc.sqrt()
        if s is None:
            raise ValueError("polynomial does not split in the target field")
        return (-b + s) * F(2).inv()
    roots = _groots(f, rng)
    if not roots:
        raise ValueError("polynomial has no roots in the target field")
    return min(roots, key=lambda e: e.c)


def embed(a: FieldElem, F2: FieldDesc) -> FieldElem:
    """Image of a under the canonical embedding of its field into F2."""
    return embedding(a.field, F2)(a)


def project(a: FieldElem, F1: FieldDesc) -> FieldElem:
    """Preimage of a under the canonical embedding F1 -> field(a).

    Raises ValueError when a does not lie in the embedded copy of F1.
    """
    F2 = a.field
    if F1 == F2:
        return a
    emb = embedding(F1, F2)  # ensures the power basis is cached
    key = F1
    solver = F2._proj.get(key)
    if solver is None:
        solver = _build_projector(F1, F2)
        F2._proj[key] = solver
    return solver(a)


def _build_projector(F1: FieldDesc, F2: FieldDesc):
    emb = embedding(F1, F2)
    p = F1.p
    cols = []
    for i in range(F1.k):
        e = [0] * F1.k
        e[i] = 1
        cols.append(emb(FieldElem(F1, tuple(e))).c)
    # solve the k2 x k1 system M c = a over F_p by precomputed elimination
    k1, k2 = F1.k, F2.k
    M = [[cols[j][i] for j in range(k1)] for i in range(k2)]

    def solve(a: FieldElem) -> FieldElem:
        rows = [list(r) + [v] for r, v in zip(M, a.c)]
        piv = []
        rix = 0
        for col in range(k1):
            sel = None
            for r in range(rix, k2):
                if rows[r][col] % p:
                    sel = r
                    break
            if sel is None:
                continue
            rows[rix], rows[sel] = rows[sel], rows[rix]
            inv = inv_mod(rows[rix][col], p)
            rows[rix] = [v * inv % p for v in rows[rix]]
            for r in range(k2):
                if r != rix and rows[r][col] % p:
                    f = rows[r][col]
                    rows[r] = [(v - f * w) % p for v, w in zip(rows[r], rows[rix])]
            piv.append(col)
            rix += 1
        sol = [0] * k1
        for i, col in enumerate(piv):
            sol[col] = rows[i][k1] % p
        for r in range(rix, k2):
            if rows[r][k1] % p:
                raise ValueError("element does not lie in the embedded subfield")
        # verify (guards the no-pivot columns)
        if emb(FieldElem(F1, tuple(sol))) != a:
            raise ValueError("element does not lie in the embedded subfield")
        return FieldElem(F1, tuple(sol))

    return solve
