"""Open subgroups of GL2(Zhat) at finite level.

A subgroup of level N is represented by its image in GL2(Z/NZ); matrices are
flat tuples (a, b, c, d) of residues meaning [[a, b], [c, d]].  The module
provides the standard subgroups (Borel, diagonal, Cartan and its normalizer,
the quadratic twists of the level-2 nonsplit Cartan), exact membership and
index computations, CRT decomposition, independence tests, and double-coset
spaces A\\GL2(Z/NZ)/G used to classify level structures up to automorphisms.

Element sets are enumerated explicitly; operations requiring enumeration are
refused beyond ELEMENT_BUDGET elements (the classical levels of interest,
N <= 48, all fit).
"""

from __future__ import annotations

import ast
import math
from array import array

from .numtheory import factorize, inv_mod, kronecker, unit_group

Mat = tuple[int, int, int, int]

ELEMENT_BUDGET = 10**7
IDENT: Mat = (1, 0, 0, 1)


# ---------------------------------------------------------------------------
# matrices mod N as flat tuples
# ---------------------------------------------------------------------------


def mat_reduce(A: Mat, n: int) -> Mat:
    return (A[0] % n, A[1] % n, A[2] % n, A[3] % n)


def mat_mul(A: Mat, B: Mat, n: int) -> Mat:
    a, b, c, d = A
    e, f, g, h = B
    return ((a * e + b * g) % n, (a * f + b * h) % n,
            (c * e + d * g) % n, (c * f + d * h) % n)


def mat_det(A: Mat, n: int) -> int:
    return (A[0] * A[3] - A[1] * A[2]) % n


def mat_inv(A: Mat, n: int) -> Mat:
    di = inv_mod(mat_det(A, n), n)
    a, b, c, d = A
    return (d * di % n, -b * di % n, -c * di % n, a * di % n)


def mat_scalar(c: int, n: int) -> Mat:
    return (c % n, 0, 0, c % n)


def mat_enc(A: Mat, n: int) -> int:
    return ((A[0] * n + A[1]) * n + A[2]) * n + A[3]


def gl2_order(n: int) -> int:
    out = 1
    for p, e in factorize(n).items() if n > 1 else []:
        out *= p ** (4 * (e - 1)) * (p * p - 1) * (p * p - p)
    return out


def sl2_order(n: int) -> int:
    return gl2_order(n) // len(unit_group(n)) if n > 1 else 1


def _unit_gens(n: int) -> list[int]:
    """A small generating set for (Z/nZ)^* by greedy closure."""
    if n <= 2:
        return []
    units = unit_group(n)
    target = len(units)
    have = {1}
    gens: list[int] = []
    for u in units:
        if u in have:
            continue
        gens.append(u)
        frontier = [u]
        while frontier:
            x = frontier.pop()
            for g in list(have):
                y = x * g % n
                if y not in have:
                    have.add(y)
                    frontier.append(y)
            if x not in have:
                have.add(x)
                frontier.append(x)
        if len(have) == target:
            break
    return gens


def gl2_gens(n: int) -> list[Mat]:
    """Generators of GL2(Z/nZ): S and T generate SL2, diagonals fix det."""
    if n == 1:
        return []
    gens = [(0, n - 1, 1, 0), (1, 1, 0, 1)]
    gens += [(1, 0, 0, u) for u in _unit_gens(n)]
    return gens


# ---------------------------------------------------------------------------
# subgroups
# ---------------------------------------------------------------------------


class OpenSubgroup:
    """Image in GL2(Z/NZ) of an open subgroup of GL2(Zhat).

    The group is stored at a declared modulus which the true level divides.
    """

    def __init__(self, modulus: int, gens=None, elements=None, full=False, name=None):
        if modulus < 1:
            raise ValueError("modulus must be >= 1")
        self.modulus = modulus
        self.full = full or modulus == 1
        self.name = name
        self._elements: frozenset[Mat] | None = None
        self._level: int | None = 1 if self.full else None
        if self.full:
            self.gens = gl2_gens(modulus)
            self._order = gl2_order(modulus)
            return
        gens = [mat_reduce(tuple(int(x) for x in g), modulus) for g in (gens or [])]
        for g in gens:
            if math.gcd(mat_det(g, modulus), modulus) != 1:
                raise ValueError(f"generator {g} is not invertible mod {modulus}")
        self.gens = gens
        if elements is not None:
            self._elements = frozenset(mat_reduce(e, modulus) for e in elements)
            self._order = len(self._elements)
        else:
            self._elements = _closure(gens, modulus)
            self._order = len(self._elements)
        if self._order == gl2_order(modulus):
            self.full = True
            self._level = 1

    # -- bulk data -----------------------------------------------------------
    @property
    def order(self) -> int:
        return self._order

    @property
    def index(self) -> int:
        return gl2_order(self.modulus) // self._order

    @property
    def elements(self) -> frozenset[Mat]:
        if self._elements is None:
            if self._order > ELEMENT_BUDGET:
                raise ValueError(
                    f"group of order {self._order} exceeds the enumeration budget")
            self._elements = _closure(self.gens, self.modulus)
        return self._elements

    def contains(self, M: Mat) -> bool:
        M = mat_reduce(M, self.modulus)
        if self.full:
            return math.gcd(mat_det(M, self.modulus), self.modulus) == 1
        return M in self.elements

    def __contains__(self, M):
        return self.contains(M)

    def __eq__(self, other):
        return (
            isinstance(other, OpenSubgroup)
            and self.modulus == other.modulus
            and self.order == other.order
            and (self.full and other.full or self.elements == other.elements)
        )

    def __hash__(self):
        return hash((self.modulus, self._order))

    def __repr__(self):
        tag = self.name or ("full" if self.full else f"{len(self.gens)} gens")
        return f"OpenSubgroup(mod {self.modulus}, order {self._order}, {tag})"

    # -- structure -----------------------------------------------------------
    @property
    def level(self) -> int:
        """The smallest M with G equal to the preimage of its reduction mod M."""
        if self._level is None:
            n = self.modulus
            for m in sorted(_divisors(n)):
                red = {mat_reduce(g, m) for g in self.elements} if m > 1 else {(0, 0, 0, 0)}
                ker = gl2_order(n) // gl2_order(m)
                if len(red) * ker == self._order:
                    self._level = m
                    break
        return self._level

    def det_image(self) -> list[int]:
        """Generators of det(G) inside (Z/NZ)^*."""
        if self.modulus == 1:
            return []
        if self.full:
            return _unit_gens(self.modulus)
        dets = {mat_det(g, self.modulus) for g in self.elements}
        have = {1}
        gens = []
        for d in sorted(dets):
            if d in have:
                continue
            gens.append(d)
            have = _cyclic_extend(have, d, self.modulus)
        return gens

    def det_values(self) -> set[int]:
        if self.full:
            return set(unit_group(self.modulus)) if self.modulus > 1 else {0}
        return {mat_det(g, self.modulus) for g in self.elements}

    def contains_scalars(self) -> bool:
        n = self.modulus
        return all(self.contains(mat_scalar(u, n)) for u in unit_group(n)) if n > 1 else True

    def reduce(self, m: int) -> "OpenSubgroup":
        """Image of the group in GL2(Z/mZ) for m | modulus."""
        if self.modulus % m != 0:
            raise ValueError("reduction modulus must divide the group modulus")
        if m == self.modulus:
            return self
        if self.full:
            return OpenSubgroup(m, full=True)
        return OpenSubgroup(m, elements={mat_reduce(e, m) for e in self.elements})

    def lift(self, m: int) -> "OpenSubgroup":
        """Preimage of the group in GL2(Z/mZ) for modulus | m."""
        if m % self.modulus != 0:
            raise ValueError("lift modulus must be a multiple of the group modulus")
        if m == self.modulus:
            return self
        if self.full:
            return OpenSubgroup(m, full=True)
        gens = [_crt_lift(g, self.modulus, m) for g in self.gens]
        gens += _kernel_gens(m, self.modulus)
        out = OpenSubgroup(m, gens=gens, name=self.name)
        expect = self._order * (gl2_order(m) // gl2_order(self.modulus))
        assert out.order == expect, "congruence-kernel generators incomplete"
        return out

    def fingerprint(self) -> str:
        """Order-independent identifier of the element set (for caching)."""
        import hashlib

        h = hashlib.sha256()
        h.update(f"mod={self.modulus};".encode())
        if self.full:
            h.update(b"full")
        else:
            n = self.modulus
            for e in sorted(mat_enc(g, n) for g in self.elements):
                h.update(e.to_bytes(8, "big"))
        return h.hexdigest()[:24]


def _cyclic_extend(have: set[int], d: int, n: int) -> set[int]:
    out = set(have)
    frontier = [d]
    while frontier:
        x = frontier.pop()
        if x in out:
            continue
        out.add(x)
        for g in list(out):
            y = x * g % n
            if y not in out:
                frontier.append(y)
    return out


def _closure(gens: list[Mat], n: int) -> frozenset[Mat]:
    """BFS closure of a generator list inside GL2(Z/nZ)."""
    if n == 1:
        return frozenset({(0, 0, 0, 0)})
    ident = mat_reduce(IDENT, n)
    gset = []
    for g in gens:
        gset.append(g)
        gset.append(mat_inv(g, n))
    gset = list(dict.fromkeys(gset))
    seen = {ident}
    frontier = [ident]
    while frontier:
        x = frontier.pop()
        for g in gset:
            y = mat_mul(x, g, n)
            if y not in seen:
                if len(seen) >= ELEMENT_BUDGET:
                    raise ValueError("generated group exceeds the enumeration budget")
                seen.add(y)
                frontier.append(y)
    return frozenset(seen)


def _divisors(n: int) -> list[int]:
    out = [1]
    for p, e in factorize(n).items():
        out = [d * p**i for d in out for i in range(e + 1)]
    return sorted(out)


def _crt_entries(a: Mat, b: Mat, m1: int, m2: int) -> Mat:
    """Entrywise CRT combination mod m1*m2 (m1, m2 coprime)."""
    m = m1 * m2
    u = inv_mod(m1 % m2, m2) if m2 > 1 else 0
    out = []
    for x, y in zip(a, b):
        t = (x + m1 * ((y - x) * u % m2)) % m
        out.append(t)
    return tuple(out)


def _crt_lift(g: Mat, n: int, m: int) -> Mat:
    """A preimage of g in GL2(Z/mZ), identity at primes not dividing n."""
    fac_m = factorize(m)
    parts = []
    for p, e in fac_m.items():
        q = p**e
        if n % p == 0:
            parts.append((mat_reduce(g, q), q))
        else:
            parts.append((mat_reduce(IDENT, q), q))
    acc, mod = parts[0]
    for mat, q in parts[1:]:
        acc = _crt_entries(acc, mat, mod, q)
        mod *= q
    return acc


def _kernel_gens(m: int, n: int) -> list[Mat]:
    """Generators of ker(GL2(Z/mZ) -> GL2(Z/nZ)) for n | m."""
    gens: list[Mat] = []
    fac_m = factorize(m)
    for p, e in fac_m.items():
        q = p**e
        f = 0
        nn = n
        while nn % p == 0:
            f += 1
            nn //= p
        if f == e:
            continue
        if f == 0:
            local = gl2_gens(q)
        else:
            s = p**f
            local = [
                (1 + s, 0, 0, 1), (1, s, 0, 1), (1, 0, s, 1), (1, 0, 0, 1 + s),
            ]
            local += [(u, 0, 0, 1) for u in unit_group(q) if u % s == 1]
        other = m // q
        for loc in local:
            if other == 1:
                gens.append(loc)
            else:
                gens.append(_crt_entries(mat_reduce(IDENT, other), loc, other, q))
    return gens


def subgroup(modulus: int, gens) -> OpenSubgroup:
    """The subgroup of GL2(Z/NZ) generated by the given matrices."""
    return OpenSubgroup(modulus, gens=gens)


# ---------------------------------------------------------------------------
# standard subgroups
# ---------------------------------------------------------------------------


def _nonsplit_params(n: int) -> tuple[int, int]:
    """Deterministic (t, c) with x^2 - t x - c inert at every prime of n."""
    odd_primes = [p for p in factorize(n) if p != 2]
    if n % 2 == 0:
        # x^2 - x - c, c odd; discriminant 1 + 4c is 5 mod 8, inert at 2
        for c in range(1, 4 * n, 2):
            if all(kronecker(1 + 4 * c, p) == -1 for p in odd_primes):
                return (1, c)
    else:
        for c in range(1, 4 * n):
            if all(kronecker(c, p) == -1 for p in odd_primes):
                return (0, c)
    raise ValueError(f"no nonsplit parameters found for modulus {n}")


def cartan(n: int, t: int, c: int) -> OpenSubgroup:
    """Unit group of Z[x]/(x^2 - t x - c) embedded in GL2(Z/nZ) via the
    companion matrix [[0, c], [1, t]]."""
    if n == 1:
        return OpenSubgroup(1, full=True)
    elems = set()
    for x in range(n):
        for y in range(n):
            M = ((x) % n, (y * c) % n, y % n, (x + y * t) % n)
            if math.gcd(mat_det(M, n), n) == 1:
                elems.add(M)
    return OpenSubgroup(n, elements=elems, name=f"cartan:{n},{t},{c}")


def _cns2_eps(M: Mat) -> int:
    """The quadratic character of GL2(F_2) whose kernel is the nonsplit Cartan."""
    m2 = mat_reduce(M, 2)
    return 1 if m2 in _CNS2 else -1


_CNS2 = frozenset({(1, 0, 0, 1), (0, 1, 1, 1), (1, 1, 1, 0)})


def cns_twist2(d: int) -> OpenSubgroup:
    """Twist of the level-2 nonsplit Cartan by the quadratic character of
    Q(sqrt(d)): all matrices with chi_D(det) * eps = 1."""
    if d == 0:
        raise ValueError("d must be a nonzero squarefree integer")
    for p, e in factorize(abs(d)).items():
        if e >= 2:
            raise ValueError("d must be squarefree")
    D = d if d % 4 == 1 else 4 * d
    if d == 1:
        return OpenSubgroup(2, elements=_CNS2, name="CnsTwist2:1")
    m = abs(D) if D % 2 == 0 else 2 * abs(D)
    elems = set()
    for a in range(m):
        for b in range(m):
            for c in range(m):
                for e in range(m):
                    M = (a, b, c, e)
                    det = mat_det(M, m)
                    if math.gcd(det, m) != 1:
                        continue
                    if kronecker(D, det) * _cns2_eps(M) == 1:
                        elems.add(M)
    return OpenSubgroup(m, elements=elems, name=f"CnsTwist2:{d}")


def standard(name: str, n: int = 1, param=None) -> OpenSubgroup:
    """Named subgroups: full, G, B1, B0, Cs, Cns, Cns+, CnsTwist2, cartan."""
    if name == "full":
        return OpenSubgroup(max(n, 1), full=True, name="full")
    if name == "CnsTwist2":
        return cns_twist2(int(param if param is not None else n))
    if name == "cartan":
        t, c = param
        return cartan(n, t, c)
    if n < 1:
        raise ValueError("level must be >= 1")
    if n == 1:
        return OpenSubgroup(1, full=True, name=name)
    ugens = _unit_gens(n)
    if name == "G":
        gens = [(n - 1, 0, 0, 1)] + [(1, 0, 0, u) for u in ugens]
    elif name == "B1":
        gens = [(n - 1, 0, 0, 1), (1, 1, 0, 1)] + [(1, 0, 0, u) for u in ugens]
    elif name == "B0":
        gens = [(1, 1, 0, 1)] + [(1, 0, 0, u) for u in ugens] + [(u, 0, 0, 1) for u in ugens]
    elif name == "Cs":
        gens = [(1, 0, 0, u) for u in ugens] + [(u, 0, 0, 1) for u in ugens]
    elif name in ("Cns", "Cns+"):
        t, c = _nonsplit_params(n)
        grp = cartan(n, t, c)
        if name == "Cns":
            grp.name = f"Cns:{n}"
            return grp
        gens = list(grp.elements) + [(1, t, 0, n - 1)]
        out = OpenSubgroup(n, gens=gens, name=f"Cns+:{n}")
        return out
    else:
        raise ValueError(f"unknown subgroup name {name!r}")
    return OpenSubgroup(n, gens=gens, name=f"{name}:{n}")


# ---------------------------------------------------------------------------
# lattice operations and independence
# ---------------------------------------------------------------------------


def common_modulus(H1: OpenSubgroup, H2: OpenSubgroup) -> tuple[OpenSubgroup, OpenSubgroup, int]:
    m = (H1.modulus * H2.modulus) // math.gcd(H1.modulus, H2.modulus)
    return H1.lift(m), H2.lift(m), m


def intersect(H1: OpenSubgroup, H2: OpenSubgroup) -> OpenSubgroup:
    A, B, m = common_modulus(H1, H2)
    if A.full:
        return B
    if B.full:
        return A
    small, big = (A, B) if A.order <= B.order else (B, A)
    elems = {e for e in small.elements if big.contains(e)}
    return OpenSubgroup(m, elements=elems)


def join(H1: OpenSubgroup, H2: OpenSubgroup) -> OpenSubgroup:
    A, B, m = common_modulus(H1, H2)
    if A.full or B.full:
        return OpenSubgroup(m, full=True)
    return OpenSubgroup(m, gens=list(A.gens) + list(B.gens))


def _sl_part(G: OpenSubgroup) -> OpenSubgroup:
    n = G.modulus
    if n == 1:
        return G
    elems = {e for e in G.elements if mat_det(e, n) == 1}
    return OpenSubgroup(n, elements=elems)


def is_independent(H1: OpenSubgroup, H2: OpenSubgroup) -> bool:
    """[G:H] = [G:H1][G:H2] for G the join and H the intersection."""
    A, B, m = common_modulus(H1, H2)
    G = join(A, B)
    H = intersect(A, B)
    return A.order * B.order == G.order * H.order


def is_geometrically_independent(H1: OpenSubgroup, H2: OpenSubgroup) -> bool:
    """Independence of the SL2-parts inside the SL2-part of the join."""
    A, B, m = common_modulus(H1, H2)
    G = join(A, B)
    H = intersect(A, B)
    a, b = _sl_part(A), _sl_part(B)
    g, h = _sl_part(G), _sl_part(H)
    return a.order * b.order == g.order * h.order


def det_independent(H1: OpenSubgroup, H2: OpenSubgroup) -> bool:
    """Independence of the determinant images inside det of the join."""
    A, B, m = common_modulus(H1, H2)
    dG = _group_closure_units(A.det_values() | B.det_values(), m)
    dA, dB = A.det_values(), B.det_values()
    dH = dA & dB
    # dH need not be det of the intersection; the proposition uses subgroup
    # independence of det images, which for abelian groups is the index test
    dHgrp = _group_closure_units(set(), m) if not dH else dH
    return len(dA) * len(dB) == len(dG) * len(dA & dB)


def _group_closure_units(vals: set[int], n: int) -> set[int]:
    out = {1}
    for v in vals:
        out = _cyclic_extend(out, v, n)
    return out


def crt_split(G: OpenSubgroup) -> list[OpenSubgroup]:
    """Prime-power components: the reductions of G at each maximal prime
    power of its modulus.  Orbit counts at the full modulus factor through
    the product exactly when is_crt_product(G) holds."""
    n = G.modulus
    if n == 1:
        return [G]
    fac = factorize(n)
    if len(fac) == 1:
        return [G]
    return [G.reduce(p**e) for p, e in sorted(fac.items())]


def is_crt_product(G: OpenSubgroup) -> bool:
    parts = crt_split(G)
    prod = 1
    for part in parts:
        prod *= part.order
    return prod == G.order


# ---------------------------------------------------------------------------
# coset and double-coset spaces
# ---------------------------------------------------------------------------


class CosetSpace:
    """Left cosets x*G of a subgroup in GL2(Z/NZ) with O(1) lookup."""

    def __init__(self, G: OpenSubgroup):
        self.group = G
        n = G.modulus
        self.n = n
        if n == 1 or G.full:
            self.reps = [mat_reduce(IDENT, n)]
            self.table = None
            return
        if gl2_order(n) > ELEMENT_BUDGET:
            raise ValueError("coset enumeration exceeds the element budget")
        elements = sorted(G.elements, key=lambda e: mat_enc(e, n))
        table = array("i", [-1]) * 1
        table = array("i", bytes(0))
        table = array("i", [-1]) * (n**4) if False else array("i", [-1] * (n**4))
        reps: list[Mat] = []
        gens = gl2_gens(n)
        frontier = [mat_reduce(IDENT, n)]
        first = _fill_coset(table, frontier[0], elements, n, 0)
        reps.append(first)
        head = 0
        queue = [first]
        while head < len(queue):
            x = queue[head]
            head += 1
            for g in gens:
                y = mat_mul(g, x, n)
                if table[mat_enc(y, n)] == -1:
                    rep = _fill_coset(table, y, elements, n, len(reps))
                    reps.append(rep)
                    queue.append(y)
        self.reps = reps
        self.table = table

    @property
    def size(self) -> int:
        return len(self.reps)

    def coset_of(self, M: Mat) -> int:
        if self.table is None:
            return 0
        return self.table[mat_enc(mat_reduce(M, self.n), self.n)]


def _fill_coset(table, x: Mat, elements, n: int, idx: int) -> Mat:
    best = None
    best_enc = None
    for h in elements:
        y = mat_mul(x, h, n)
        e = mat_enc(y, n)
        table[e] = idx
        if best_enc is None or e < best_enc:
            best_enc = e
            best = y
    return best


class DoubleCosetSpace:
    """Orbits of a finite matrix set A acting on the left of GL2(Z/N)/G.

    Each orbit is a double coset A x G; orbits carry the lexicographically
    least member as canonical representative and the stabilizer pair count
    |{(alpha, g) : alpha x g = x}| = |A| / orbit size.
    """

    def __init__(self, A: list[Mat], cosets: CosetSpace):
        self.cosets = cosets
        n = cosets.n
        A = [mat_reduce(a, n) for a in A]
        A = list(dict.fromkeys(A))
        self.left = A
        size = cosets.size
        orbit_of = [-1] * size
        orbits: list[list[int]] = []
        for start in range(size):
            if orbit_of[start] != -1:
                continue
            idx = len(orbits)
            members = [start]
            orbit_of[start] = idx
            queue = [start]
            while queue:
                ci = queue.pop()
                rep = cosets.reps[ci]
                for a in A:
                    cj = cosets.coset_of(mat_mul(a, rep, n))
                    if orbit_of[cj] == -1:
                        orbit_of[cj] = idx
                        members.append(cj)
                        queue.append(cj)
            orbits.append(sorted(members))
        self.orbit_of_coset = orbit_of
        self.orbit_members = orbits
        self.reps = [
            min((cosets.reps[ci] for ci in mem), key=lambda M: mat_enc(M, max(n, 2)))
            for mem in orbits
        ]
        self.stab_pairs = [len(A) // len(mem) for mem in orbits]

    @property
    def size(self) -> int:
        return len(self.reps)

    def orbit_of(self, M: Mat) -> int:
        return self.orbit_of_coset[self.cosets.coset_of(M)]

    def canonicalize(self, M: Mat) -> Mat:
        return self.reps[self.orbit_of(M)]

    def coset_sizes(self) -> list[int]:
        g = self.cosets.group.order
        return [len(mem) * g for mem in self.orbit_members]


def double_cosets(A: list[Mat], G: OpenSubgroup) -> DoubleCosetSpace:
    return DoubleCosetSpace(A, CosetSpace(G))


# ---------------------------------------------------------------------------
# textual subgroup specifications
# ---------------------------------------------------------------------------

_GRAMMAR = """Subgroup specification grammar:
  full          the full group (level 1)
  full:N        the full group represented at modulus N
  G:N           matrices (+-1, 0; 0, *)
  B1:N          matrices (+-1, *; 0, *)
  B0:N          upper-triangular matrices (Borel)
  Cs:N          split Cartan (diagonal)
  Cns:N         nonsplit Cartan
  Cns+:N        normalizer of the nonsplit Cartan
  CnsTwist2:d   quadratic twist of the level-2 nonsplit Cartan by Q(sqrt(d))
  cartan:N,t,c  units of Z[x]/(x^2 - t*x - c) mod N
  gens:N=5;[[1,0],[0,2]],[[4,0],[0,4]]   explicit generators mod N
"""


def parse_subgroup(spec: str) -> OpenSubgroup:
    """Parse the textual subgroup grammar (see _GRAMMAR)."""
    spec = spec.strip()
    if spec == "full":
        return standard("full", 1)
    if spec.startswith("gens:"):
        body = spec[len("gens:"):]
        try:
            npart, matpart = body.split(";", 1)
            assert npart.startswith("N=")
            n = int(npart[2:])
            mats = ast.literal_eval(f"[{matpart}]")
            gens = [tuple(int(x) for row in m for x in row) for m in mats]
        except Exception as exc:
            raise ValueError(f"bad generator specification {spec!r}: {exc}") from exc
        out = subgroup(n, gens)
        out.name = spec
        return out
    name, _, arg = spec.partition(":")
    if name == "full":
        return standard("full", int(arg))
    if name == "CnsTwist2":
        return cns_twist2(int(arg))
    if name == "cartan":
        n, t, c = (int(x) for x in arg.split(","))
        return cartan(n, t, c)
    if name in ("G", "B1", "B0", "Cs", "Cns", "Cns+"):
        if not arg:
            raise ValueError(f"subgroup {name} requires a level, e.g. {name}:7")
        return standard(name, int(arg))
    raise ValueError(f"unknown subgroup specification {spec!r}\n{_GRAMMAR}")
