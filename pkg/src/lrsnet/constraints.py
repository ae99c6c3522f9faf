"""Zero-pattern combinatorics for support-constrained generator matrices.

A constraint prescribes zero sets Z_1..Z_k of column indices.  A full-support
MSRD code compatible with them exists exactly when every nonempty row subset
satisfies |intersection of its zero sets| + |subset| <= k; the maximum of
that expression over all subsets is the smallest dimension of a covering
code whose subcode meets infeasible patterns optimally.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

from .gf import prime_power

_SUBSET_SCAN_MAX_K = 24


@dataclass(frozen=True)
class SupportConstraint:
    n: int
    k: int
    zero_sets: tuple  # k frozensets of 1-based column indices

    def __post_init__(self):
        object.__setattr__(self, "zero_sets",
                           tuple(frozenset(z) for z in self.zero_sets))
        if self.k < 1 or len(self.zero_sets) != self.k:
            raise ValueError("need one zero set per row, k >= 1")
        for i, z in enumerate(self.zero_sets):
            if any(not (1 <= j <= self.n) for j in z):
                raise ValueError(f"zero set {i + 1} leaves the column range [1, {self.n}]")

    def masks(self):
        return [sum(1 << (j - 1) for j in z) for z in self.zero_sets]


@dataclass(frozen=True)
class ConditionReport:
    holds: bool
    witness: tuple | None   # lexicographically least violating row subset
    equality_system: bool   # every subset meets the bound with equality


def _guard(sc: SupportConstraint):
    if sc.k > _SUBSET_SCAN_MAX_K:
        raise ValueError(f"k = {sc.k} exceeds the subset-scan guard {_SUBSET_SCAN_MAX_K}")


def check_condition(sc: SupportConstraint) -> ConditionReport:
    """Exhaustive scan of all nonempty row subsets (include-first DFS, so the
    first violation found is the lexicographically least one)."""
    _guard(sc)
    masks = sc.masks()
    k = sc.k
    full = (1 << sc.n) - 1
    equality = True
    # iterative DFS stack: (next row index, chosen count, running intersection)
    violation = None

    def dfs(i, count, inter, chosen):
        nonlocal equality, violation
        for j in range(i, k):
            new_inter = inter & masks[j]
            new_count = count + 1
            value = new_inter.bit_count() + new_count
            chosen.append(j + 1)
            if value > k:
                violation = tuple(chosen)
                chosen.pop()
                return True
            if value != k:
                equality = False
            # supersets only shrink the intersection; with an empty one the
            # value is the subset size, at most k, and below k until full
            if new_inter == 0:
                if new_count < k:
                    equality = False
            elif dfs(j + 1, new_count, new_inter, chosen):
                chosen.pop()
                return True
            chosen.pop()
        return False

    found = dfs(0, 0, full, [])
    if found:
        return ConditionReport(False, violation, False)
    return ConditionReport(True, None, equality)


def cover_dimension(sc: SupportConstraint) -> int:
    """max over nonempty subsets of |intersection| + |subset| (always >= k)."""
    _guard(sc)
    masks = sc.masks()
    k = sc.k
    full = (1 << sc.n) - 1
    best = 0

    def dfs(i, count, inter):
        nonlocal best
        for j in range(i, k):
            new_inter = inter & masks[j]
            new_count = count + 1
            value = new_inter.bit_count() + new_count
            if value > best:
                best = value
            if new_inter == 0:
                # deeper subsets only grow by cardinality
                best = max(best, new_count + (k - j - 1))
            elif new_inter.bit_count() + new_count + (k - j - 1) > best:
                dfs(j + 1, new_count, new_inter)

    dfs(0, 0, full)
    return best


def complete_zero_sets(sc: SupportConstraint) -> SupportConstraint:
    """Grow every zero set to size k-1, greedily, preserving the condition.

    Rows are processed in index order and candidate columns in increasing
    order; a candidate is kept only if the condition still holds.
    """
    report = check_condition(sc)
    if not report.holds:
        raise ValueError(f"condition violated by rows {report.witness}; cannot complete")
    if sc.k - 1 > sc.n:
        raise ValueError(f"rows need {sc.k - 1} zeros but only {sc.n} columns exist")
    zero_sets = [set(z) for z in sc.zero_sets]
    for i in range(sc.k):
        if len(zero_sets[i]) > sc.k - 1:
            raise AssertionError("condition held with an oversized zero set")
        for j in range(1, sc.n + 1):
            if len(zero_sets[i]) == sc.k - 1:
                break
            if j in zero_sets[i]:
                continue
            zero_sets[i].add(j)
            trial = SupportConstraint(sc.n, sc.k, tuple(zero_sets))
            if not check_condition(trial).holds:
                zero_sets[i].remove(j)
        if len(zero_sets[i]) < sc.k - 1:
            raise RuntimeError(
                f"greedy completion stuck at row {i + 1} with {sorted(zero_sets[i])}; "
                "this contradicts the completion guarantee and indicates a bug")
    return SupportConstraint(sc.n, sc.k, tuple(zero_sets))


def derive_zero_sets(access, message_lengths, source_lengths) -> SupportConstraint:
    """Zero pattern of the distributed encoding matrix.

    Rows are grouped by message; a row of message g must vanish on the column
    range of every source that has no access to g.
    """
    access = [frozenset(a) for a in access]
    h = len(message_lengths)
    if len(access) != len(source_lengths):
        raise ValueError("need one encoded length per source")
    for g in range(1, h + 1):
        if not any(g in a for a in access):
            raise ValueError(f"message {g} is not accessible from any source")
    n = sum(source_lengths)
    k = sum(message_lengths)
    ranges = []
    start = 1
    for ln in source_lengths:
        ranges.append(range(start, start + ln))
        start += ln
    zero_sets = []
    for g in range(1, h + 1):
        cols = frozenset(
            j for a, rng in zip(access, ranges) if g not in a for j in rng)
        zero_sets.extend([cols] * message_lengths[g - 1])
    return SupportConstraint(n, k, tuple(zero_sets))


class FieldParams(NamedTuple):
    q: int
    m: int
    m_sharp: int  # smaller extension degree certified by the exact degree bound


def _ceil_log(q: int, k: int) -> int:
    c, v = 0, 1
    while v < k:
        v *= q
        c += 1
    return c


def smallest_prime_power_at_least(x: int) -> int:
    c = max(2, x)
    while prime_power(c) is None:
        c += 1
    return c


def sufficient_extension_degrees(q: int, k: int, parts):
    """(m, m_sharp) sufficient at base size q: the closed-form bound
    max(k-1+log_q(k), max block length) with the log rounded up exactly, and
    the exact polynomial-degree threshold q^m > (k-1)(q-1)q^(k-2) + q^(n_l-1)."""
    parts = list(parts)
    m = max(k - 1 + _ceil_log(q, k), max(parts))
    bound = max((k - 1) * (q - 1) * q ** max(k - 2, 0) + q ** (nl - 1) for nl in parts)
    m_sharp = 1
    while q ** m_sharp <= bound:
        m_sharp += 1
    return m, m_sharp


def suggest_field_params(k: int, ell: int, parts) -> FieldParams:
    """Smallest admissible base size q >= ell+1 and sufficient degrees."""
    parts = list(parts)
    if k < 1 or ell < 1 or len(parts) != ell:
        raise ValueError("need k >= 1 and one part per block")
    q = smallest_prime_power_at_least(ell + 1)
    m, m_sharp = sufficient_extension_degrees(q, k, parts)
    return FieldParams(q=q, m=m, m_sharp=m_sharp)


# ----------------------------------------------------------------------
# pattern files: one line per row, space-separated 1-based columns, `-` empty


def parse_pattern(text: str, n: int) -> SupportConstraint:
    zero_sets = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if line == "-":
            zero_sets.append(frozenset())
            continue
        try:
            cols = frozenset(int(tok) for tok in line.split())
        except ValueError as exc:
            raise ValueError(f"line {lineno}: {exc}") from None
        if any(not (1 <= j <= n) for j in cols):
            raise ValueError(f"line {lineno}: column index outside [1, {n}]")
        zero_sets.append(cols)
    if not zero_sets:
        raise ValueError("pattern file holds no rows")
    return SupportConstraint(n, len(zero_sets), tuple(zero_sets))


def format_pattern(sc: SupportConstraint) -> str:
    lines = []
    for z in sc.zero_sets:
        lines.append(" ".join(str(j) for j in sorted(z)) if z else "-")
    return "\n".join(lines) + "\n"
