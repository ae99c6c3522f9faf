"""Exact arithmetic in a two-step field extension F_p < F_q < F_{q^m}.

Elements are plain Python integers in a positional encoding:

    an element sum_i c_i y^i of the top field (c_i in F_q) is the integer
    sum_i enc(c_i) * q^i, where enc maps a base-field residue
    sum_j d_j x^j (d_j in [0, p)) to the integer sum_j d_j p^j.

The encoding is bit-exact and reproducible: a field is fully described by
(p, e, m, base_modulus, top_modulus), all moduli given low-to-high as digit
tuples.  When moduli are not supplied they are chosen as the
lexicographically smallest monic candidates (ordering the coefficient
vector as base-q digits), which makes construction deterministic.

The top modulus is always chosen (and, if supplied, required) to have a
primitive root, so ``gamma`` (the residue of y) generates the whole
multiplicative group.
"""

from __future__ import annotations

from functools import lru_cache

import numpy as np

# Tables of gamma-powers are kept for fields up to this order; they make
# scalar multiplication O(1) and feed the vectorized numpy paths.
_SCALAR_TABLE_MAX = 1 << 16
# Full order x order numpy add/mul tables, used by brute-force enumeration.
_NUMPY_TABLE_MAX = 512
# Exhaustive conjugacy-class enumeration guard.
_CLASS_ENUM_MAX = 1 << 20


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    for sp in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % sp == 0:
            return n == sp
    # deterministic Miller-Rabin for 64-bit range
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def prime_power(n: int):
    """Return (p, e) with n = p**e, or None if n is not a prime power."""
    if n < 2:
        return None
    for p in range(2, n + 1):
        if p * p > n:
            break
        if n % p:
            continue
        e, rest = 0, n
        while rest % p == 0:
            rest //= p
            e += 1
        return (p, e) if rest == 1 else None
    return (n, 1)


def factorize(n: int) -> dict:
    """Prime factorization by trial division (fine for the sizes used here)."""
    factors = {}
    for p in (2, 3):
        while n % p == 0:
            factors[p] = factors.get(p, 0) + 1
            n //= p
    f = 5
    while f * f <= n:
        if is_prime(n):
            break
        for p in (f, f + 2):
            while n % p == 0:
                factors[p] = factors.get(p, 0) + 1
                n //= p
        f += 6
    if n > 1:
        factors[n] = factors.get(n, 0) + 1
    return factors


class FieldTower:
    """F_p < F_q < F_{q^m} with q = p^e, Frobenius a -> a^q, primitive gamma.

    All operations take and return integer encodings.  Instances are
    immutable after construction and safe to share between workers.
    """

    def __init__(self, p: int, e: int, m: int, base_modulus=None, top_modulus=None):
        if not is_prime(p):
            raise ValueError(f"p = {p} is not prime")
        if e < 1 or m < 1:
            raise ValueError("extension degrees must be >= 1")
        self.p = p
        self.e = e
        self.m = m
        self.q = p ** e
        self.order = self.q ** m

        if base_modulus is not None:
            base_modulus = tuple(int(c) % p for c in base_modulus)
            self._check_base_modulus(base_modulus)
            self.base_modulus = base_modulus
        else:
            self.base_modulus = self._find_base_modulus()

        self._init_base_tables()

        self._order_factors = factorize(self.order - 1) if self.order > 2 else {}
        if top_modulus is not None:
            top_modulus = tuple(int(c) % self.q for c in top_modulus)
            self._check_top_modulus(top_modulus)
            self.top_modulus = top_modulus
        else:
            self.top_modulus = self._find_top_modulus()

        # reduction row: y^m = -(low part of modulus)
        self._red = tuple(self._base_neg(c) for c in self.top_modulus[:m])
        self.gamma = self.q if m >= 2 else self._red[0]
        self._p2 = (p == 2)
        if self._p2 and e == 1:
            self._mod_int = sum(c << i for i, c in enumerate(self.top_modulus))
        else:
            self._mod_int = None

        self._exp = None
        self._log = None
        if self.order <= _SCALAR_TABLE_MAX:
            self._build_scalar_tables()
        self._np_tables = None
        self._ordered_basis = tuple(self.q ** i for i in range(m)) if m >= 2 else (1,)

    # ------------------------------------------------------------------
    # base field F_q = F_p[x]/(g)

    def _check_base_modulus(self, g):
        p = self.p
        if len(g) != self.e + 1 or g[-1] != 1:
            raise ValueError("base modulus must be monic of degree e")
        if self.e >= 2 and not _fp_poly_irreducible(g, p):
            raise ValueError("base modulus is reducible over F_p")

    def _find_base_modulus(self):
        p, e = self.p, self.e
        if e == 1:
            return (0, 1)  # residues mod x are the constants
        for low in range(p ** e):
            g = tuple(_int_digits(low, p, e)) + (1,)
            if _fp_poly_irreducible(g, p):
                return g
        raise AssertionError("no irreducible base modulus found")

    def _init_base_tables(self):
        p, e, q = self.p, self.e, self.q
        if e == 1:
            self._base_mul_tab = None
            self._base_inv_tab = None
            return
        if q > _NUMPY_TABLE_MAX:
            raise ValueError(f"base field size q = {q} beyond supported table range")
        mul = [[0] * q for _ in range(q)]
        for a in range(q):
            da = _int_digits(a, p, e)
            for b in range(a, q):
                db = _int_digits(b, p, e)
                prod = _fp_poly_mulmod(da, db, self.base_modulus, p)
                v = _digits_int(prod, p)
                mul[a][b] = v
                mul[b][a] = v
        inv = [0] * q
        for a in range(1, q):
            row = mul[a]
            inv[a] = row.index(1)
        self._base_mul_tab = mul
        self._base_inv_tab = inv

    def base_add(self, a: int, b: int) -> int:
        if self.p == 2:
            return a ^ b
        if self.e == 1:
            return (a + b) % self.p
        return _digitwise_mod_add(a, b, self.p, self.e)

    def base_neg(self, a: int) -> int:
        return self._base_neg(a)

    def _base_neg(self, a):
        if self.p == 2:
            return a
        if self.e == 1:
            return (-a) % self.p
        p = self.p
        return _digits_int([(-d) % p for d in _int_digits(a, p, self.e)], p)

    def base_sub(self, a: int, b: int) -> int:
        return self.base_add(a, self._base_neg(b))

    def base_mul(self, a: int, b: int) -> int:
        if self.e == 1:
            return (a * b) % self.p
        return self._base_mul_tab[a][b]

    def base_inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("inverse of 0 in F_q")
        if self.e == 1:
            return pow(a, self.p - 2, self.p)
        return self._base_inv_tab[a]

    # ------------------------------------------------------------------
    # top field F_{q^m} = F_q[y]/(f)

    def _check_top_modulus(self, f):
        if len(f) != self.m + 1 or f[-1] != 1:
            raise ValueError("top modulus must be monic of degree m")
        if self.m >= 2 and not self._qpoly_irreducible(f):
            raise ValueError("top modulus is reducible over F_q")
        if not self._root_is_primitive(f):
            raise ValueError("top modulus root is not primitive")

    def _find_top_modulus(self):
        q, m = self.q, self.m
        for low in range(q ** m):
            f = tuple(_int_digits(low, q, m)) + (1,)
            if m >= 2 and not self._qpoly_irreducible(f):
                continue
            if self._root_is_primitive(f):
                return f
        raise AssertionError("no primitive top modulus found")

    def _qpoly_irreducible(self, f) -> bool:
        # x^(q^m) == x mod f, and x^(q^(m/r)) - x coprime to f for prime r | m
        m, q = self.m, self.q
        x = (0, 1)
        xq = self._qpoly_powq(x, f)  # x^q mod f
        frob = [x, xq]
        for _ in range(m - 1):
            frob.append(self._qpoly_powq(frob[-1], f))
        if _qpoly_trim(self._qpoly_sub(frob[m], x)) != ():
            return False
        for r in factorize(m):
            g = self._qpoly_sub(frob[m // r], x)
            if _qpoly_trim(self._qpoly_gcd(g, f)) != (1,):
                return False
        return True

    def _root_is_primitive(self, f) -> bool:
        if self.m == 1:
            g = self._neg_const_root(f)
            if g == 0:
                return False
            for r in self._order_factors:
                if self._base_pow(g, (self.order - 1) // r) == 1:
                    return False
            return True
        y = (0, 1)
        for r in self._order_factors:
            if _qpoly_trim(self._qpoly_powmod(y, (self.order - 1) // r, f)) == (1,):
                return False
        return True

    def _neg_const_root(self, f):
        return self._base_neg(f[0])

    def _base_pow(self, a, n):
        r = 1
        while n:
            if n & 1:
                r = self.base_mul(r, a)
            a = self.base_mul(a, a)
            n >>= 1
        return r

    # polynomial helpers over F_q (dense low-to-high tuples)

    def _qpoly_sub(self, a, b):
        n = max(len(a), len(b))
        a = tuple(a) + (0,) * (n - len(a))
        b = tuple(b) + (0,) * (n - len(b))
        return tuple(self.base_sub(x, y) for x, y in zip(a, b))

    def _qpoly_mulmod(self, a, b, f):
        res = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x == 0:
                continue
            for j, y in enumerate(b):
                if y:
                    res[i + j] = self.base_add(res[i + j], self.base_mul(x, y))
        return tuple(self._qpoly_reduce(res, f))

    def _qpoly_reduce(self, res, f):
        d = len(f) - 1
        for i in range(len(res) - 1, d - 1, -1):
            c = res[i]
            if c:
                res[i] = 0
                for j in range(d):
                    if f[j]:
                        res[i - d + j] = self.base_sub(res[i - d + j], self.base_mul(c, f[j]))
        return res[:d] + [0] * max(0, d - len(res))

    def _qpoly_powq(self, a, f):
        # a^q by square-and-multiply on polynomials mod f
        n = self.q
        out = (1,)
        base = a
        while n:
            if n & 1:
                out = self._qpoly_mulmod(out, base, f)
            base = self._qpoly_mulmod(base, base, f)
            n >>= 1
        return out

    def _qpoly_powmod(self, a, n, f):
        out = (1,)
        base = a
        while n:
            if n & 1:
                out = self._qpoly_mulmod(out, base, f)
            base = self._qpoly_mulmod(base, base, f)
            n >>= 1
        return out

    def _qpoly_divmod(self, a, b):
        a = list(_qpoly_trim(a))
        b = _qpoly_trim(b)
        if not b:
            raise ZeroDivisionError
        inv_lead = self.base_inv(b[-1])
        q = [0] * max(0, len(a) - len(b) + 1)
        while len(a) >= len(b) and a:
            c = self.base_mul(a[-1], inv_lead)
            k = len(a) - len(b)
            q[k] = c
            for j, y in enumerate(b):
                a[k + j] = self.base_sub(a[k + j], self.base_mul(c, y))
            while a and a[-1] == 0:
                a.pop()
        return tuple(q), tuple(a)

    def _qpoly_gcd(self, a, b):
        a, b = _qpoly_trim(a), _qpoly_trim(b)
        while b:
            a, b = b, self._qpoly_divmod(a, b)[1]
            b = _qpoly_trim(b)
        if a:
            inv = self.base_inv(a[-1])
            a = tuple(self.base_mul(c, inv) for c in a)
        return a

    # ------------------------------------------------------------------
    # element arithmetic

    def digits(self, a: int):
        """Base-q digit vector (length m) of an element encoding."""
        return _int_digits(a, self.q, self.m)

    def from_digits(self, digits) -> int:
        return _digits_int(digits, self.q)

    def add(self, a: int, b: int) -> int:
        if self._p2:
            return a ^ b
        if self.e == 1:
            return _digitwise_mod_add(a, b, self.p, self.m)
        q = self.q
        out = 0
        shift = 1
        for _ in range(self.m):
            out += self.base_add(a % q, b % q) * shift
            a //= q
            b //= q
            shift *= q
        return out

    def neg(self, a: int) -> int:
        if self._p2:
            return a
        if self.e == 1:
            p = self.p
            return _digits_int([(-d) % p for d in _int_digits(a, p, self.m)], p)
        q = self.q
        return _digits_int([self._base_neg(d) for d in _int_digits(a, q, self.m)], q)

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        if self._exp is not None:
            return self._exp[(self._log[a] + self._log[b]) % (self.order - 1)]
        if self._mod_int is not None:
            return _clmul_mod(a, b, self._mod_int, self.m)
        da = _int_digits(a, self.q, self.m)
        db = _int_digits(b, self.q, self.m)
        res = [0] * (2 * self.m - 1)
        for i, x in enumerate(da):
            if x == 0:
                continue
            for j, y in enumerate(db):
                if y:
                    res[i + j] = self.base_add(res[i + j], self.base_mul(x, y))
        # reduce by y^m = red
        for i in range(2 * self.m - 2, self.m - 1, -1):
            c = res[i]
            if c:
                res[i] = 0
                for j, rc in enumerate(self._red):
                    if rc:
                        res[i - self.m + j] = self.base_add(res[i - self.m + j], self.base_mul(c, rc))
        return _digits_int(res[: self.m], self.q)

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("inverse of 0")
        if self._exp is not None:
            return self._exp[(self.order - 1 - self._log[a]) % (self.order - 1)]
        return self.pow(a, self.order - 2)

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def pow(self, a: int, n: int) -> int:
        if a == 0:
            return 1 if n == 0 else 0
        n %= self.order - 1
        if self._exp is not None:
            return self._exp[(self._log[a] * n) % (self.order - 1)]
        out = 1
        base = a
        while n:
            if n & 1:
                out = self.mul(out, base)
            base = self.mul(base, base)
            n >>= 1
        return out

    def frobenius(self, a: int, i: int = 1) -> int:
        """a^(q^(i mod m)), the i-th power of the Frobenius x -> x^q."""
        i %= self.m
        return self.pow(a, self.q ** i)

    def _build_scalar_tables(self):
        n = self.order
        exp = [1] * (n - 1)
        g = self.gamma
        acc = 1
        for i in range(1, n - 1):
            acc = self.mul(acc, g)
            exp[i] = acc
        log = [0] * n
        for i, v in enumerate(exp):
            log[v] = i
        self._exp = exp
        self._log = log

    # ------------------------------------------------------------------
    # expansion over the ordered basis and base-field linear algebra

    def expand(self, vec) -> np.ndarray:
        """m x n matrix over F_q whose column j holds the coordinates of vec[j]."""
        cols = [self.digits(v) for v in vec]
        return np.array(cols, dtype=np.int64).T.reshape(self.m, len(cols))

    def rank_over_base(self, vec) -> int:
        return self.base_matrix_rank(self.expand(vec))

    def linearly_independent_over_base(self, elems) -> bool:
        elems = list(elems)
        return self.rank_over_base(elems) == len(elems)

    def base_matrix_rank(self, mat) -> int:
        """Rank over F_q of a matrix of base-field encodings."""
        rows = [list(map(int, r)) for r in mat]
        if not rows:
            return 0
        ncols = len(rows[0])
        rank = 0
        for col in range(ncols):
            piv = next((r for r in range(rank, len(rows)) if rows[r][col] != 0), None)
            if piv is None:
                continue
            rows[rank], rows[piv] = rows[piv], rows[rank]
            inv = self.base_inv(rows[rank][col])
            rows[rank] = [self.base_mul(inv, x) for x in rows[rank]]
            for r in range(len(rows)):
                if r != rank and rows[r][col] != 0:
                    c = rows[r][col]
                    rows[r] = [self.base_sub(x, self.base_mul(c, y)) for x, y in zip(rows[r], rows[rank])]
            rank += 1
            if rank == len(rows):
                break
        return rank

    def base_mat_mul(self, A, B) -> np.ndarray:
        """Product of two F_q matrices; modular matmul for prime q, table
        lookups per inner index otherwise."""
        A = np.asarray(A, dtype=np.int64)
        B = np.asarray(B, dtype=np.int64)
        if self.e == 1:
            return (A @ B) % self.p
        add_t, mul_t = self._base_numpy_tables()
        out = np.zeros((A.shape[0], B.shape[1]), dtype=np.int64)
        for t in range(A.shape[1]):
            out = add_t[out, mul_t[A[:, t][:, None], B[t, :][None, :]]]
        return out

    def _base_numpy_tables(self):
        if not hasattr(self, "_base_np"):
            q = self.q
            add = np.zeros((q, q), dtype=np.int64)
            for x in range(q):
                for y in range(q):
                    add[x, y] = self.base_add(x, y)
            mul = np.array(self._base_mul_tab, dtype=np.int64)
            self._base_np = (add, mul)
        return self._base_np

    # ------------------------------------------------------------------
    # conjugacy structure

    def conjugate_to(self, a: int, b: int) -> bool:
        """True iff b lies in the sigma-conjugacy class of a."""
        if a == 0 or b == 0:
            return a == b
        # b = sigma(c) a c^-1 = c^(q-1) a for some c != 0
        x = self.mul(b, self.inv(a))
        return self.pow(x, (self.order - 1) // (self.q - 1)) == 1

    def conjugacy_classes(self):
        """Partition of the field: [{0}, C(gamma^0), ..., C(gamma^(q-2))]."""
        if self.order > _CLASS_ENUM_MAX:
            raise ValueError(f"field order {self.order} exceeds enumeration guard")
        # sigma(c) a c^-1 = c^(q-1) a; enumerate the (q-1)-power subgroup once
        kernel = set()
        c = 1
        g = self.gamma
        step = self.pow(g, self.q - 1)
        for _ in range(self.order - 1):
            kernel.add(c)
            c = self.mul(c, step)
        classes = [frozenset({0})]
        rep = 1
        for _ in range(self.q - 1):
            classes.append(frozenset(self.mul(rep, h) for h in kernel))
            rep = self.mul(rep, g)
        return classes

    # ------------------------------------------------------------------
    # iteration, randomness, serialization, numpy tables

    def all_elements(self):
        return range(self.order)

    def random_element(self, rng) -> int:
        return rng.randrange(self.order)

    def random_nonzero(self, rng) -> int:
        return rng.randrange(1, self.order)

    def spec(self) -> dict:
        return {
            "p": self.p,
            "e": self.e,
            "m": self.m,
            "base_modulus": list(self.base_modulus),
            "top_modulus": list(self.top_modulus),
        }

    @classmethod
    def from_spec(cls, spec: dict) -> "FieldTower":
        return cls(spec["p"], spec["e"], spec["m"],
                   base_modulus=spec["base_modulus"], top_modulus=spec["top_modulus"])

    def numpy_tables(self):
        """(add_table, mul_table) as order x order arrays; small fields only."""
        if self.order > _NUMPY_TABLE_MAX:
            raise ValueError(f"field order {self.order} beyond numpy-table guard")
        if self._np_tables is None:
            n = self.order
            if self._p2:
                add = np.bitwise_xor.outer(np.arange(n), np.arange(n)).astype(np.int64)
            else:
                ar = np.arange(n)
                da = np.stack([(ar // self.q ** i) % self.q for i in range(self.m)])
                base_add = np.zeros((self.q, self.q), dtype=np.int64)
                for x in range(self.q):
                    for y in range(self.q):
                        base_add[x, y] = self.base_add(x, y)
                # add[a, b] = sum_i base_add[d_i(a), d_i(b)] q^i
                add = sum(
                    base_add[da[i][:, None], da[i][None, :]] * self.q ** i
                    for i in range(self.m)
                )
            exp = np.array(self._exp, dtype=np.int64)
            log = np.array(self._log, dtype=np.int64)
            mul = np.zeros((n, n), dtype=np.int64)
            nz = np.arange(1, n)
            mul[1:, 1:] = exp[(log[nz][:, None] + log[nz][None, :]) % (n - 1)]
            self._np_tables = (np.asarray(add, dtype=np.int64), mul)
        return self._np_tables

    def __repr__(self):
        return f"FieldTower(p={self.p}, e={self.e}, m={self.m})"

    def __eq__(self, other):
        return (isinstance(other, FieldTower)
                and (self.p, self.e, self.m, self.base_modulus, self.top_modulus)
                == (other.p, other.e, other.m, other.base_modulus, other.top_modulus))

    def __hash__(self):
        return hash((self.p, self.e, self.m, self.base_modulus, self.top_modulus))


@lru_cache(maxsize=None)
def _cached_field(p, e, m):
    return FieldTower(p, e, m)


def make_field(p: int, e: int = 1, m: int = 1, base_modulus=None, top_modulus=None) -> FieldTower:
    """Build (or fetch the cached default) tower F_p < F_{p^e} < F_{(p^e)^m}."""
    if base_modulus is None and top_modulus is None:
        return _cached_field(p, e, m)
    return FieldTower(p, e, m, base_modulus=base_modulus, top_modulus=top_modulus)


# ----------------------------------------------------------------------
# matrices over the top field (lists of lists of encodings)

def mat_mul(tower: FieldTower, A, B):
    n, k = len(A), len(B)
    cols = len(B[0]) if k else 0
    out = [[0] * cols for _ in range(n)]
    for i in range(n):
        Ai = A[i]
        for t in range(k):
            a = Ai[t]
            if a == 0:
                continue
            Bt = B[t]
            Oi = out[i]
            for j in range(cols):
                if Bt[j]:
                    Oi[j] = tower.add(Oi[j], tower.mul(a, Bt[j]))
    return out


def _dot(tower, row, v):
    acc = 0
    for a, b in zip(row, v):
        if a and b:
            acc = tower.add(acc, tower.mul(a, b))
    return acc


def vec_mat(tower: FieldTower, v, A):
    cols = len(A[0])
    return [_dot(tower, [A[i][j] for i in range(len(A))], v) for j in range(cols)]


def mat_rank(tower: FieldTower, A) -> int:
    rows = [list(r) for r in A]
    if not rows:
        return 0
    ncols = len(rows[0])
    rank = 0
    for col in range(ncols):
        piv = next((r for r in range(rank, len(rows)) if rows[r][col] != 0), None)
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        inv = tower.inv(rows[rank][col])
        rows[rank] = [tower.mul(inv, x) for x in rows[rank]]
        for r in range(len(rows)):
            if r != rank and rows[r][col] != 0:
                c = rows[r][col]
                rows[r] = [tower.sub(x, tower.mul(c, y)) for x, y in zip(rows[r], rows[rank])]
        rank += 1
        if rank == len(rows):
            break
    return rank


def mat_det(tower: FieldTower, A) -> int:
    n = len(A)
    rows = [list(r) for r in A]
    det = 1
    for col in range(n):
        piv = next((r for r in range(col, n) if rows[r][col] != 0), None)
        if piv is None:
            return 0
        if piv != col:
            rows[col], rows[piv] = rows[piv], rows[col]
            det = tower.neg(det)
        det = tower.mul(det, rows[col][col])
        inv = tower.inv(rows[col][col])
        for r in range(col + 1, n):
            if rows[r][col]:
                c = tower.mul(rows[r][col], inv)
                rows[r] = [tower.sub(x, tower.mul(c, y)) for x, y in zip(rows[r], rows[col])]
    return det


def mat_inv(tower: FieldTower, A):
    n = len(A)
    rows = [list(r) + [1 if i == j else 0 for j in range(n)] for i, r in enumerate(A)]
    for col in range(n):
        piv = next((r for r in range(col, n) if rows[r][col] != 0), None)
        if piv is None:
            raise ValueError("matrix is singular")
        rows[col], rows[piv] = rows[piv], rows[col]
        inv = tower.inv(rows[col][col])
        rows[col] = [tower.mul(inv, x) for x in rows[col]]
        for r in range(n):
            if r != col and rows[r][col]:
                c = rows[r][col]
                rows[r] = [tower.sub(x, tower.mul(c, y)) for x, y in zip(rows[r], rows[col])]
    return [r[n:] for r in rows]


def mat_identity(n: int):
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


# ----------------------------------------------------------------------
# low-level helpers

def _int_digits(v: int, base: int, length: int):
    out = []
    for _ in range(length):
        out.append(v % base)
        v //= base
    return out


def _digits_int(digits, base: int) -> int:
    out = 0
    for d in reversed(list(digits)):
        out = out * base + d
    return out


def _digitwise_mod_add(a: int, b: int, p: int, length: int) -> int:
    out = 0
    shift = 1
    for _ in range(length):
        out += ((a + b) % p) * shift
        a //= p
        b //= p
        shift *= p
    return out


def _clmul_mod(a: int, b: int, mod: int, m: int) -> int:
    # carry-less multiply then reduce; F_2 coefficient vectors as ints
    acc = 0
    while b:
        if b & 1:
            acc ^= a
        a <<= 1
        b >>= 1
    top = acc.bit_length() - 1
    while top >= m:
        acc ^= mod << (top - m)
        top = acc.bit_length() - 1
    return acc


def _fp_poly_mulmod(a, b, mod, p):
    res = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                if y:
                    res[i + j] = (res[i + j] + x * y) % p
    d = len(mod) - 1
    for i in range(len(res) - 1, d - 1, -1):
        c = res[i]
        if c:
            res[i] = 0
            for j in range(d):
                if mod[j]:
                    res[i - d + j] = (res[i - d + j] - c * mod[j]) % p
    res = res[:d] + [0] * max(0, d - len(res))
    return res


def _fp_poly_irreducible(g, p: int) -> bool:
    d = len(g) - 1
    if d == 1:
        return True
    # x^(p^d) == x mod g and gcd checks for proper divisors
    def mulmod(a, b):
        return tuple(_fp_poly_mulmod(a, b, g, p))

    def powp(a):
        out, base, n = (1,), a, p
        while n:
            if n & 1:
                out = mulmod(out, base)
            base = mulmod(base, base)
            n >>= 1
        return out

    x = (0, 1)
    frob = [x]
    for _ in range(d):
        frob.append(powp(frob[-1]))
    if _qpoly_trim(tuple((u - v) % p for u, v in _zip_pad(frob[d], x))) != ():
        return False
    for r in factorize(d):
        diff = tuple((u - v) % p for u, v in _zip_pad(frob[d // r], x))
        if _qpoly_trim(_fp_poly_gcd(diff, g, p)) != (1,):
            return False
    return True


def _fp_poly_gcd(a, b, p):
    a, b = list(_qpoly_trim(a)), list(_qpoly_trim(b))
    while b:
        # a mod b
        inv = pow(b[-1], p - 2, p)
        while len(a) >= len(b) and a:
            c = a[-1] * inv % p
            k = len(a) - len(b)
            for j, y in enumerate(b):
                a[k + j] = (a[k + j] - c * y) % p
            while a and a[-1] == 0:
                a.pop()
        a, b = b, a
    if a:
        inv = pow(a[-1], p - 2, p)
        a = [c * inv % p for c in a]
    return tuple(a)


def _zip_pad(a, b):
    n = max(len(a), len(b))
    return zip(tuple(a) + (0,) * (n - len(a)), tuple(b) + (0,) * (n - len(b)))


def _qpoly_trim(a):
    a = tuple(a)
    while a and a[-1] == 0:
        a = a[:-1]
    return a
