"""Distributed multi-source network designer and adversarial channel simulator.

Pipeline: an integer program sizes the per-source encoded lengths, the access
structure induces a generator zero pattern, a support-constrained LRS
(sub)code is synthesized over a sufficient field, packets are lifted with
identity headers, and a (t, rho)-adversary channel Y = A X + E is sampled
and audited against the rank/sum-rank weight bounds.
"""

from __future__ import annotations

import json
import random
from dataclasses import dataclass

import numpy as np

from . import construct, gf, sumrank
from .constraints import SupportConstraint, derive_zero_sets, suggest_field_params
from .gf import FieldTower, make_field, prime_power
from .sumrank import OrderedPartition

_DESIGN_GUARD = 10  # max messages and max sources for the subset constraints


class InfeasibleDesign(ValueError):
    def __init__(self, message_subset, demand):
        super().__init__(
            f"no source covers message subset {sorted(message_subset)} "
            f"with demand {demand}; the instance is infeasible")
        self.message_subset = tuple(sorted(message_subset))
        self.demand = demand


@dataclass(frozen=True)
class NetworkInstance:
    h: int                 # number of messages
    lengths: tuple         # message lengths r_1..r_h (symbols over F_{q^m})
    access: tuple          # source access sets, subsets of {1..h}
    t: int                 # malicious-node bound
    rho: int               # frozen-node bound
    ell: int               # number of code blocks

    def __post_init__(self):
        object.__setattr__(self, "lengths", tuple(int(x) for x in self.lengths))
        object.__setattr__(self, "access", tuple(frozenset(a) for a in self.access))
        if self.h < 1 or len(self.lengths) != self.h:
            raise ValueError("need one length per message")
        if any(r < 1 for r in self.lengths):
            raise ValueError("message lengths must be >= 1")
        if self.t < 0 or self.rho < 0 or self.ell < 1:
            raise ValueError("need t, rho >= 0 and ell >= 1")
        for a in self.access:
            if any(not (1 <= g <= self.h) for g in a):
                raise ValueError("access sets must reference messages 1..h")
        for g in range(1, self.h + 1):
            if not any(g in a for a in self.access):
                raise ValueError(f"message {g} is not accessible from any source")

    @property
    def s(self) -> int:
        return len(self.access)

    @property
    def k(self) -> int:
        return sum(self.lengths)

    @classmethod
    def from_json(cls, text: str) -> "NetworkInstance":
        doc = json.loads(text)
        return cls(h=doc["h"], lengths=tuple(doc["r"]),
                   access=tuple(frozenset(a) for a in doc["S"]),
                   t=doc["t"], rho=doc["rho"], ell=doc["ell"])

    def to_json(self) -> str:
        return json.dumps({
            "h": self.h, "r": list(self.lengths),
            "S": [sorted(a) for a in self.access],
            "t": self.t, "rho": self.rho, "ell": self.ell,
        }, sort_keys=True)


def _subset_constraints(inst: NetworkInstance):
    """(source cover mask, capacity demand, zero-pattern demand) per subset."""
    out = []
    for omega_bits in range(1, 1 << inst.h):
        omega = {g for g in range(1, inst.h + 1) if omega_bits >> (g - 1) & 1}
        rsum = sum(inst.lengths[g - 1] for g in omega)
        cover = 0
        for idx, a in enumerate(inst.access):
            if a & omega:
                cover |= 1 << idx
        out.append((cover, rsum + 2 * inst.t + inst.rho,
                    rsum + 2 * inst.ell * inst.t + inst.rho, omega))
    return out


def design_lengths(inst: NetworkInstance):
    """Minimize the total encoded length under the capacity and zero-pattern
    subset constraints; depth-first branch and bound with the residual-demand
    relaxation, ties broken by the lexicographically smallest tuple."""
    if inst.h > _DESIGN_GUARD or inst.s > _DESIGN_GUARD:
        raise ValueError(f"instance beyond the design guard of {_DESIGN_GUARD}")
    cons = _subset_constraints(inst)
    # both families demand sums over the sources meeting the subset
    demands = {}
    for cover, cap_demand, zero_demand, omega in cons:
        demand = max(cap_demand, zero_demand)
        if cover == 0 and demand > 0:
            raise InfeasibleDesign(omega, demand)
        demands[cover] = max(demands.get(cover, 0), demand)
    packed = sorted(demands.items())
    s = inst.s
    cap = inst.k + 2 * inst.ell * inst.t + inst.rho  # dominating per-source cap
    lower = max(d for _, d in packed)

    best = None

    def feasible(target):
        nonlocal best
        lengths = [0] * s

        def dfs(i, remaining):
            nonlocal best
            if i == s - 1:
                if remaining > cap:
                    return False
                lengths[i] = remaining
                ok = all(
                    sum(lengths[j] for j in range(s) if cover >> j & 1) >= demand
                    for cover, demand in packed)
                if ok:
                    best = tuple(lengths)
                lengths[i] = 0
                return ok
            free_mask = ((1 << s) - 1) ^ ((1 << (i + 1)) - 1)
            for v in range(0, min(cap, remaining) + 1):
                lengths[i] = v
                dead = False
                need_extra = 0
                for cover, demand in packed:
                    have = sum(lengths[j] for j in range(i + 1) if cover >> j & 1)
                    residual = demand - have
                    if residual > 0:
                        if cover & free_mask == 0:
                            dead = True
                            break
                        need_extra = max(need_extra, residual)
                if not dead and need_extra <= remaining - v:
                    if dfs(i + 1, remaining - v):
                        lengths[i] = 0
                        return True
                lengths[i] = 0
            return False

        if s == 1:
            lengths[0] = target
            ok = all(
                sum(lengths[j] for j in range(s) if cover >> j & 1) >= demand
                for cover, demand in packed) and target <= cap
            if ok:
                best = tuple(lengths)
            return ok
        return dfs(0, target)

    target = lower
    while not feasible(target):
        target += 1
    return best, target


def mincut(inst: NetworkInstance, lengths, subset) -> int:
    """Min-cut between a message subset and the sink: the total length minus
    the lengths of sources with no access to the subset."""
    subset = frozenset(subset)
    n = sum(lengths)
    excluded = sum(ln for a, ln in zip(inst.access, lengths) if not (a & subset))
    return n - excluded


def capacity_ok(inst: NetworkInstance, lengths, subset) -> bool:
    subset = frozenset(subset)
    rsum = sum(inst.lengths[g - 1] for g in subset)
    return rsum <= mincut(inst, lengths, subset) - 2 * inst.t - inst.rho


def cover_dimension_from_design(inst: NetworkInstance, lengths) -> int:
    """Dimension of the covering code, from the instance-level subset form."""
    best = 0
    for omega_bits in range(1, 1 << inst.h):
        omega = {g for g in range(1, inst.h + 1) if omega_bits >> (g - 1) & 1}
        rsum = sum(inst.lengths[g - 1] for g in omega)
        blocked = sum(ln for a, ln in zip(inst.access, lengths) if not (a & omega))
        best = max(best, blocked + rsum)
    return best


def even_partition(n: int, ell: int) -> OrderedPartition:
    """Split n into ell near-equal parts with rounded block boundaries."""
    if n < ell:
        raise ValueError("fewer symbols than blocks")
    bounds = [(2 * l * n + ell) // (2 * ell) for l in range(ell + 1)]
    return OrderedPartition(tuple(b - a for a, b in zip(bounds, bounds[1:])))


@dataclass(frozen=True)
class DesignResult:
    instance: NetworkInstance
    lengths: tuple           # per-source encoded lengths
    n: int
    k: int
    cover_dim: int
    distance: int            # designed decoding distance 2*ell*t + rho + 1
    q: int
    m: int
    parts: tuple             # code block partition
    constraint: SupportConstraint
    code: construct.ConstrainedCode | None

    def to_json(self) -> str:
        doc = {
            "instance": json.loads(self.instance.to_json()),
            "lengths": list(self.lengths),
            "n": self.n,
            "k": self.k,
            "cover_dim": self.cover_dim,
            "distance": self.distance,
            "q": self.q,
            "m": self.m,
            "parts": list(self.parts),
            "code": json.loads(construct.to_json(self.code)) if self.code else None,
        }
        return json.dumps(doc, indent=2, sort_keys=True)

    @classmethod
    def from_json(cls, text: str) -> "DesignResult":
        doc = json.loads(text)
        inst = NetworkInstance.from_json(json.dumps(doc["instance"]))
        code = construct.from_json(json.dumps(doc["code"])) if doc["code"] else None
        sc = derive_zero_sets(inst.access, inst.lengths, doc["lengths"])
        return cls(instance=inst, lengths=tuple(doc["lengths"]), n=doc["n"],
                   k=doc["k"], cover_dim=doc["cover_dim"], distance=doc["distance"],
                   q=doc["q"], m=doc["m"], parts=tuple(doc["parts"]),
                   constraint=sc, code=code)


def build_distributed_code(inst: NetworkInstance, seed: int = 0,
                           build_code: bool = True) -> DesignResult:
    """Full design pipeline; set build_code=False to stop after the sizing
    stage (required for instances whose cover dimension exceeds the
    subset-scan guard)."""
    lengths, n = design_lengths(inst)
    sc = derive_zero_sets(inst.access, inst.lengths, lengths)
    ktil = cover_dimension_from_design(inst, lengths)
    if ktil > n - 2 * inst.ell * inst.t - inst.rho:
        raise AssertionError("design violates the decoding-capability bound")
    parts = even_partition(n, inst.ell)
    params = suggest_field_params(ktil, inst.ell, parts.parts)
    code = None
    if build_code:
        p, e = prime_power(params.q)
        tower = make_field(p, e, params.m)
        code = construct.subcode_generator(tower, parts, inst.k, sc, seed=seed)
    return DesignResult(
        instance=inst, lengths=lengths, n=n, k=inst.k, cover_dim=ktil,
        distance=2 * inst.ell * inst.t + inst.rho + 1,
        q=params.q, m=params.m, parts=parts.parts, constraint=sc, code=code)


# ----------------------------------------------------------------------
# lifting and the adversarial channel


def lift(blocks) -> np.ndarray:
    """Stack per-source packets (0 .. I .. 0 | C^T) into the n x (n+m) matrix."""
    blocks = [np.asarray(b, dtype=np.int64) for b in blocks]
    if not blocks:
        raise ValueError("no source blocks")
    m = blocks[0].shape[0]
    if any(b.shape[0] != m for b in blocks):
        raise ValueError("inconsistent expansion height across sources")
    widths = [b.shape[1] for b in blocks]
    n = sum(widths)
    X = np.zeros((n, n + m), dtype=np.int64)
    row = 0
    for b, w in zip(blocks, widths):
        X[row:row + w, row:row + w] = np.eye(w, dtype=np.int64)
        X[row:row + w, n:] = b.T
        row += w
    return X


@dataclass(frozen=True)
class ChannelRealization:
    A: np.ndarray      # N x n transfer matrix over F_q
    E: np.ndarray      # N x M error matrix over F_q
    q: int
    n: int
    t: int
    rho: int
    seed: int


def _rand_matrix(rng, rows, cols, q):
    return np.array([[rng.randrange(q) for _ in range(cols)] for _ in range(rows)],
                    dtype=np.int64)


def sample_channel(n: int, N: int, M: int, t: int, rho: int, q: int,
                   seed: int = 0) -> ChannelRealization:
    """Transfer matrix with at most rho deleted pivots and a factored error of
    rank at most t; deterministic per seed."""
    if N < n - rho:
        raise ValueError("the sink must collect at least n - rho packets")
    p, e = prime_power(q)
    tower = make_field(p, e, 1)
    rng = random.Random(seed)
    rho_eff = rng.randint(max(0, n - N), rho)
    deleted = rng.sample(range(n), rho_eff)
    while True:
        R = _rand_matrix(rng, N, n, q)
        A = R.copy()
        A[:, deleted] = 0
        if tower.base_matrix_rank(A) == n - rho_eff:
            break
    t_eff = rng.randint(0, t)
    if t_eff:
        U = _rand_matrix(rng, N, t_eff, q)
        V = _rand_matrix(rng, t_eff, M, q)
        E = tower.base_mat_mul(U, V)
    else:
        E = np.zeros((N, M), dtype=np.int64)
    return ChannelRealization(A=A, E=E, q=q, n=n, t=t, rho=rho, seed=seed)


def transmit(X, ch: ChannelRealization) -> np.ndarray:
    """Network equation Y = A X + E over F_q."""
    X = np.asarray(X, dtype=np.int64)
    if ch.A.shape[1] != X.shape[0] or ch.E.shape[1] != X.shape[1]:
        raise ValueError("shape mismatch between packets and channel")
    p, e = prime_power(ch.q)
    tower = make_field(p, e, 1)
    AX = tower.base_mat_mul(ch.A, X)
    if e == 1:
        return (AX + ch.E) % ch.q
    out = AX.copy()
    for i in range(out.shape[0]):
        for j in range(out.shape[1]):
            out[i, j] = tower.base_add(int(AX[i, j]), int(ch.E[i, j]))
    return out


def audit_weights(ch: ChannelRealization, row_partition: OrderedPartition,
                  col_partition: OrderedPartition) -> dict:
    """Check the erasure and error weight bounds on one channel draw."""
    p, e = prime_power(ch.q)
    tower = make_field(p, e, 1)
    ell = row_partition.ell
    rank_A = tower.base_matrix_rank(ch.A)
    wtsr_A = sumrank.sum_rank_weight_matrix(tower, ch.A, col_partition, "columns")
    rank_E = tower.base_matrix_rank(ch.E)
    wtsr_E = sumrank.sum_rank_weight_matrix(tower, ch.E, row_partition, "rows")
    return {
        "rank_A": rank_A,
        "wtsr_A": wtsr_A,
        "erasure_ok": rank_A >= ch.n - ch.rho and wtsr_A >= rank_A,
        "rank_E": rank_E,
        "wtsr_E": wtsr_E,
        "error_ok": rank_E <= ch.t and wtsr_E <= ell * ch.t,
        "error_tight": rank_E == ch.t and wtsr_E == ell * ch.t,
    }


def weight_statistics(q: int, ell: int, t: int, row_parts, M: int,
                      trials: int, seed: int = 0, n: int | None = None,
                      rho: int = 0) -> dict:
    """Monte-Carlo audit over seeded channel draws.

    Reports the empirical frequency of the error weight bound being tight,
    conditioned on full error rank.
    """
    row_partition = OrderedPartition(row_parts)
    N = row_partition.n
    if n is None:
        n = N
    col_partition = even_partition(n, ell)
    all_ok = True
    full_rank = 0
    tight = 0
    for i in range(trials):
        ch = sample_channel(n, N, M, t, rho, q, seed=(seed << 20) ^ i)
        rep = audit_weights(ch, row_partition, col_partition)
        all_ok = all_ok and rep["erasure_ok"] and rep["error_ok"]
        if rep["rank_E"] == t:
            full_rank += 1
            if rep["wtsr_E"] == ell * t:
                tight += 1
    return {
        "trials": trials,
        "seed": seed,
        "bounds_ok": all_ok,
        "full_rank_draws": full_rank,
        "tight_draws": tight,
        "tight_given_full_rank": (tight / full_rank) if full_rank else None,
    }


# ----------------------------------------------------------------------
# end-to-end micro decoding with injected sum-rank errors and erasures


def puncture(part: OrderedPartition, erased):
    """Partition and column keep-list after deleting erased 1-based columns."""
    erased = set(erased)
    keep = [j for j in range(1, part.n + 1) if j not in erased]
    sizes = []
    for (a, b) in part.slices():
        size = sum(1 for j in range(a + 1, b + 1) if j not in erased)
        if size:
            sizes.append(size)
    return OrderedPartition(sizes), keep


def random_error_of_weight(tower: FieldTower, part: OrderedPartition,
                           weight: int, rng) -> list:
    """Error vector of exact sum-rank weight, built block by block."""
    capacities = [min(nl, tower.m) for nl in part.parts]
    if weight > sum(capacities):
        raise ValueError("weight exceeds the partition capacity")
    target = [0] * part.ell
    left = weight
    while left:
        l = rng.randrange(part.ell)
        if target[l] < capacities[l]:
            target[l] += 1
            left -= 1
    err = [0] * part.n
    for l, (a, b) in enumerate(part.slices()):
        if target[l] == 0:
            continue
        while True:
            blk = [tower.random_element(rng) for _ in range(b - a)]
            if tower.rank_over_base(blk) == target[l]:
                err[a:b] = blk
                break
    return err


def end_to_end_trial(cc: construct.ConstrainedCode, distance: int,
                     error_weight: int, erasures: int, rng) -> bool:
    """Encode a random message, inject an exact-weight error plus erasures,
    decode by brute force on the punctured code, compare messages."""
    tower = cc.code.tower
    part = cc.code.part
    k = cc.sc.k
    G = [list(r) for r in cc.matrix]
    msg = tuple(tower.random_element(rng) for _ in range(k))
    cw = gf.vec_mat(tower, list(msg), G)
    err = random_error_of_weight(tower, part, error_weight, rng)
    y = [tower.add(c, e) for c, e in zip(cw, err)]
    erased = rng.sample(range(1, part.n + 1), erasures)
    sub_part, keep = puncture(part, erased)
    sub_G = [[row[j - 1] for j in keep] for row in G]
    sub_y = [y[j - 1] for j in keep]
    res = sumrank.bruteforce_decode(tower, sub_G, sub_part, sub_y,
                                    code_distance=distance - erasures)
    return res.ok and res.message == msg
