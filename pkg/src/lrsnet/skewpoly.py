"""Skew polynomials over F_{q^m} twisted by the Frobenius a -> a^q.

Multiplication follows X * a = sigma(a) * X, so the product of f and g has
coefficients sum_{i,j} f_i sigma^i(g_j) X^(i+j).  Evaluation is remainder
evaluation: f(a) = sum_i f_i N_i(a) with the truncated norm
N_i(a) = a^((q^i - 1)/(q - 1)), which equals the remainder of f on right
division by (X - a).
"""

from __future__ import annotations

from .gf import FieldTower

NEG_INF = float("-inf")  # degree of the zero polynomial


class SkewPoly:
    """Immutable skew polynomial; ``coeffs[i]`` is the coefficient of X^i."""

    __slots__ = ("tower", "coeffs")

    def __init__(self, tower: FieldTower, coeffs=()):
        cs = tuple(int(c) for c in coeffs)
        while cs and cs[-1] == 0:
            cs = cs[:-1]
        object.__setattr__(self, "tower", tower)
        object.__setattr__(self, "coeffs", cs)

    def __setattr__(self, *a):
        raise AttributeError("SkewPoly is immutable")

    # constructors ------------------------------------------------------

    @classmethod
    def zero(cls, tower):
        return cls(tower, ())

    @classmethod
    def one(cls, tower):
        return cls(tower, (1,))

    @classmethod
    def constant(cls, tower, c):
        return cls(tower, (c,))

    @classmethod
    def x(cls, tower):
        return cls(tower, (0, 1))

    @classmethod
    def x_power(cls, tower, t: int):
        return cls(tower, (0,) * t + (1,))

    @classmethod
    def x_minus(cls, tower, alpha):
        return cls(tower, (tower.neg(alpha), 1))

    # basic queries -----------------------------------------------------

    @property
    def degree(self):
        return len(self.coeffs) - 1 if self.coeffs else NEG_INF

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == 1

    def monic(self) -> "SkewPoly":
        if self.is_zero() or self.is_monic():
            return self
        inv = self.tower.inv(self.coeffs[-1])
        return SkewPoly(self.tower, tuple(self.tower.mul(inv, c) for c in self.coeffs))

    def __eq__(self, other):
        return (isinstance(other, SkewPoly) and other.tower == self.tower
                and other.coeffs == self.coeffs)

    def __hash__(self):
        return hash((self.tower, self.coeffs))

    def __repr__(self):
        return f"SkewPoly({self.to_text()})"

    def to_text(self) -> str:
        """Canonical textual form `c0 + c1*X + ...` over integer encodings."""
        if not self.coeffs:
            return "0"
        parts = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if i == 0:
                parts.append(str(c))
            elif i == 1:
                parts.append(f"{c}*X")
            else:
                parts.append(f"{c}*X^{i}")
        return " + ".join(parts)

    # ring operations ---------------------------------------------------

    def __add__(self, other):
        t = self.tower
        n = max(len(self.coeffs), len(other.coeffs))
        a = self.coeffs + (0,) * (n - len(self.coeffs))
        b = other.coeffs + (0,) * (n - len(other.coeffs))
        return SkewPoly(t, tuple(t.add(x, y) for x, y in zip(a, b)))

    def __neg__(self):
        t = self.tower
        return SkewPoly(t, tuple(t.neg(c) for c in self.coeffs))

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        return skew_mul(self, other)

    def scale_left(self, c) -> "SkewPoly":
        t = self.tower
        return SkewPoly(t, tuple(t.mul(c, x) for x in self.coeffs))


def skew_mul(f: SkewPoly, g: SkewPoly) -> SkewPoly:
    """Product with the twist X*a = sigma(a)*X."""
    t = f.tower
    if f.is_zero() or g.is_zero():
        return SkewPoly.zero(t)
    res = [0] * (len(f.coeffs) + len(g.coeffs) - 1)
    # sigma^i applied to all of g, computed incrementally over i
    gi = list(g.coeffs)
    for i, fc in enumerate(f.coeffs):
        if i > 0:
            gi = [t.frobenius(c) for c in gi]
        if fc == 0:
            continue
        for j, gc in enumerate(gi):
            if gc:
                res[i + j] = t.add(res[i + j], t.mul(fc, gc))
    return SkewPoly(t, res)


def right_div(f: SkewPoly, g: SkewPoly):
    """Quotient and remainder with f = quo * g + rem, deg rem < deg g."""
    if g.is_zero():
        raise ZeroDivisionError("right division by the zero polynomial")
    t = f.tower
    rem = list(f.coeffs)
    dg = len(g.coeffs) - 1
    if len(rem) - 1 < dg:
        return SkewPoly.zero(t), f
    quo = [0] * (len(rem) - dg)
    for d in range(len(rem) - 1 - dg, -1, -1):
        lead = rem[d + dg]
        if lead == 0:
            continue
        # c * sigma^d(g_lead) = lead
        c = t.mul(lead, t.inv(t.frobenius(g.coeffs[-1], d)))
        quo[d] = c
        # rem -= (c X^d) * g
        sg = [t.frobenius(gc, d) for gc in g.coeffs]
        for j, gc in enumerate(sg):
            if gc:
                rem[d + j] = t.sub(rem[d + j], t.mul(c, gc))
    return SkewPoly(t, quo), SkewPoly(t, rem)


def truncated_norm(tower: FieldTower, alpha: int, i: int):
    """N_i(alpha) = prod_{j<i} sigma^j(alpha) = alpha^((q^i-1)/(q-1))."""
    if i < 0:
        raise ValueError("norm index must be >= 0")
    if i == 0:
        return 1
    return tower.pow(alpha, (tower.q ** i - 1) // (tower.q - 1))


def evaluate(f: SkewPoly, alpha: int):
    """Remainder evaluation f(alpha) = sum_i f_i N_i(alpha)."""
    t = f.tower
    acc = 0
    norm = 1
    sig = alpha  # sigma^i(alpha) while processing coefficient i+1
    for i, c in enumerate(f.coeffs):
        if i > 0:
            norm = t.mul(norm, sig)
            sig = t.frobenius(sig)
        if c:
            acc = t.add(acc, t.mul(c, norm))
    return acc


def evaluate_by_division(f: SkewPoly, alpha: int):
    """f(alpha) as the remainder of right division by (X - alpha)."""
    if f.is_zero():
        return 0
    _, rem = right_div(f, SkewPoly.x_minus(f.tower, alpha))
    return rem.coeffs[0] if rem.coeffs else 0


def gcrd(f: SkewPoly, g: SkewPoly) -> SkewPoly:
    """Monic greatest common right divisor via the right Euclidean algorithm."""
    if f.is_zero() and g.is_zero():
        raise ValueError("gcrd(0, 0) is undefined")
    a, b = f, g
    while not b.is_zero():
        _, r = right_div(a, b)
        a, b = b, r
    return a.monic()


def lclm(f: SkewPoly, g: SkewPoly) -> SkewPoly:
    """Monic least common left multiple via the extended Euclidean scheme."""
    if f.is_zero() or g.is_zero():
        raise ValueError("lclm of the zero polynomial is undefined")
    t = f.tower
    r_prev, r_cur = f, g
    u_prev, u_cur = SkewPoly.one(t), SkewPoly.zero(t)
    while not r_cur.is_zero():
        q, r_next = right_div(r_prev, r_cur)
        u_next = u_prev - q * u_cur
        r_prev, r_cur = r_cur, r_next
        u_prev, u_cur = u_cur, u_next
    # u_cur * f = +-lclm once the remainder hits zero
    return (u_cur * f).monic()


def lclm_all(polys) -> SkewPoly:
    """lclm of a sequence, folded pairwise in input order."""
    polys = list(polys)
    if not polys:
        raise ValueError("lclm of an empty sequence")
    acc = polys[0].monic()
    for p in polys[1:]:
        acc = lclm(acc, p)
    return acc


def minimal_polynomial(tower: FieldTower, points) -> SkewPoly:
    """Monic minimal polynomial of a point set, by Newton interpolation.

    Points already annihilated by the running polynomial are skipped, so the
    result has degree |points| exactly when the set is P-independent.
    """
    pts = list(points)
    if not pts:
        raise ValueError("minimal polynomial of an empty set")
    g = SkewPoly.x_minus(tower, pts[0])
    for alpha in pts[1:]:
        v = evaluate(g, alpha)
        if v == 0:
            continue
        # conjugate of alpha with respect to v: sigma(v) * alpha * v^-1
        conj = tower.mul(tower.mul(tower.frobenius(v), alpha), tower.inv(v))
        g = SkewPoly.x_minus(tower, conj) * g
    return g


def is_p_independent(tower: FieldTower, points) -> bool:
    """True iff the minimal polynomial degree equals the number of points."""
    pts = list(dict.fromkeys(points))
    if not pts:
        return True
    return minimal_polynomial(tower, pts).degree == len(pts)


def vandermonde(tower: FieldTower, points, rows: int):
    """Twisted Vandermonde matrix: entry (i, j) = N_i(points[j])."""
    if rows < 1:
        raise ValueError("need at least one row")
    pts = list(points)
    mat = [[1] * len(pts)]
    sigs = list(pts)  # sigma^(i-1) of each point while filling row i
    norms = [1] * len(pts)
    for _ in range(1, rows):
        norms = [tower.mul(n, s) for n, s in zip(norms, sigs)]
        sigs = [tower.frobenius(s) for s in sigs]
        mat.append(list(norms))
    return mat


_ROOT_ENUM_MAX = 1 << 16


def roots_in_field(f: SkewPoly):
    """All field elements annihilated by f, by exhaustive evaluation."""
    t = f.tower
    if t.order > _ROOT_ENUM_MAX:
        raise ValueError(f"field order {t.order} exceeds root-enumeration guard")
    return {a for a in t.all_elements() if evaluate(f, a) == 0}


def divisible_by_x_power_right(f: SkewPoly, t_exp: int) -> bool:
    """X^t | f on the right, decided by the division algorithm."""
    if f.is_zero():
        return True
    _, rem = right_div(f, SkewPoly.x_power(f.tower, t_exp))
    return rem.is_zero()


def divisible_by_x_power_left(f: SkewPoly, t_exp: int) -> bool:
    """X^t | f on the left, decided constructively: f = X^t * g with
    g = sigma^(-t) applied to the upshifted coefficients."""
    if f.is_zero():
        return True
    if len(f.coeffs) <= t_exp:
        return False
    tower = f.tower
    g = SkewPoly(tower, tuple(tower.frobenius(c, -t_exp) for c in f.coeffs[t_exp:]))
    if any(c != 0 for c in f.coeffs[:t_exp]):
        return False
    return SkewPoly.x_power(tower, t_exp) * g == f
