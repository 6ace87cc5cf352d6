"""Exhaustive property sweeps with brute-force oracles.

Every documented law of the package is registered here under a stable name
with a default size bound, sweepable via :func:`verify`; reports list the
counterexamples (with evaluation traces) in deterministic enumeration
order.  Oracles deliberately avoid the code paths they check: the collapse
oracle maximizes over an explicit enumeration, the closure oracle
minimizes over special partitions, and the Jordan-type oracle ranks powers
of an actual nilpotent matrix.
"""

from __future__ import annotations

import time
from collections import Counter
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import product
from typing import Callable, Iterator

import numpy as np

from .aparams import (
    AParameterShape,
    SelfDualType,
    Summand,
    pair_type_of,
    npsi_partition,
    predicted_wavefront,
    split_by_signs,
)
from .duality import dual_partition, lie_algebra_dim, orbit_dim
from .partitions import (
    GroupType,
    Partition,
    add,
    classify,
    collapse,
    dominance_leq,
    enumerate_partitions,
    partitions_of,
    transpose,
    union,
)
from .symbols import (
    Bipartition,
    Symbol,
    bipartition_leq,
    family_key,
    is_special_symbol,
    normalize_symbol,
    partition_of_special_symbol,
    special_closure,
    specialize_sum,
    springer_bipartition,
    symbol_of,
)
from .waldspurger import PairType, waldspurger, xi_vector

MAX_RECORDED_FAILURES = 25

_DUAL_SIDE_TYPE = {
    GroupType.B: GroupType.C,
    GroupType.C: GroupType.B,
    GroupType.D: GroupType.D,
}


@dataclass
class VerificationReport:
    property: str
    bound: int
    cases_checked: int
    failures: list[dict]
    wall_time: float
    info: dict = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return not self.failures and self.info.get("failure_count", 0) == 0

    def to_dict(self) -> dict:
        return {
            "property": self.property,
            "bound": self.bound,
            "cases_checked": self.cases_checked,
            "failures": self.failures,
            "info": self.info,
            "wall_time": round(self.wall_time, 6),
        }


@lru_cache(maxsize=None)
def member_list(d: int, t: GroupType) -> tuple[Partition, ...]:
    if d % 2 != t.size_parity:
        return ()
    return tuple(enumerate_partitions(d, t))


@lru_cache(maxsize=None)
def special_list(d: int, t: GroupType) -> tuple[Partition, ...]:
    if d % 2 != t.size_parity:
        return ()
    return tuple(enumerate_partitions(d, t, special_only=True))


@lru_cache(maxsize=None)
def comparable_special_pairs(
    d: int, t: GroupType
) -> tuple[tuple[Partition, Partition], ...]:
    lams = special_list(d, t)
    return tuple(
        (x, y) for x in lams for y in lams if dominance_leq(x, y)
    )


def _pair_sizes(pair: PairType, bound: int) -> Iterator[tuple[int, int]]:
    t1, t2 = pair.factor_types
    for d1 in range(t1.size_parity, bound + 1, 2):
        for d2 in range(t2.size_parity, bound - d1 + 1, 2):
            yield d1, d2


def _special_pairs(
    pair: PairType, bound: int
) -> Iterator[tuple[Partition, Partition]]:
    t1, t2 = pair.factor_types
    for d1, d2 in _pair_sizes(pair, bound):
        for l1 in special_list(d1, t1):
            for l2 in special_list(d2, t2):
                yield l1, l2


# ---------------------------------------------------------------------------
# Brute-force oracles


def brute_force_collapse(lam: Partition, t: GroupType) -> Partition:
    """Maximum of the type-t partitions dominated by ``lam``, by explicit
    enumeration; validates :func:`orbitcalc.partitions.collapse`."""
    if lam.size % 2 != t.size_parity:
        raise ValueError(f"size {lam.size} has the wrong parity for type {t}")
    below = [mu for mu in member_list(lam.size, t) if dominance_leq(mu, lam)]
    maximal = [
        mu
        for mu in below
        if not any(nu != mu and dominance_leq(mu, nu) for nu in below)
    ]
    if len(maximal) != 1:
        raise RuntimeError(f"no unique maximum below {lam} for type {t}")
    return maximal[0]


def brute_force_min_special_above(lam: Partition, t: GroupType) -> Partition:
    """Minimum special type-t partition dominating ``lam``."""
    above = [mu for mu in special_list(lam.size, t) if dominance_leq(lam, mu)]
    minimal = [
        mu
        for mu in above
        if not any(nu != mu and dominance_leq(nu, mu) for nu in above)
    ]
    if len(minimal) != 1:
        raise RuntimeError(f"no unique special minimum above {lam} for type {t}")
    return minimal[0]


def brute_force_springer(lam: Partition, t: GroupType) -> Bipartition:
    """Search every special bipartition of the right size for the one whose
    special symbol yields ``lam``; debug oracle for the direct inversion."""
    cls = classify(lam, t)
    if not (cls.member and cls.special):
        raise ValueError(f"{lam!r} is not special of type {t}")
    n = (lam.size - t.size_parity) // 2
    matches = set()
    for i in range(n + 1):
        for left in partitions_of(i):
            for right in partitions_of(n - i):
                la, lb = len(left), len(right)
                if t is GroupType.D:
                    k = max(la, lb, 1) if n else 0
                    rho = Bipartition(
                        (0,) * (k + 1 - la) + tuple(reversed(left)),
                        (0,) * (k - lb) + tuple(reversed(right)),
                        type_d=True,
                    )
                else:
                    k = max(la - 1, lb, 0)
                    rho = Bipartition(
                        (0,) * (k + 1 - la) + tuple(reversed(left)),
                        (0,) * (k - lb) + tuple(reversed(right)),
                    )
                if not is_special_symbol(symbol_of(rho)):
                    continue
                if partition_of_special_symbol(symbol_of(rho), t) == lam:
                    matches.add(rho)
    if len(matches) != 1:
        raise RuntimeError(f"expected one preimage of {lam}, got {matches}")
    return next(iter(matches))


def jordan_type_oracle(blocks: list[tuple[int, int]]) -> Partition:
    """Jordan type of a block-diagonal nilpotent matrix, from the ranks of
    its powers; ``blocks`` lists (copies, block_size)."""
    size = sum(c * s for c, s in blocks)
    if size == 0:
        return Partition()
    mat = np.zeros((size, size), dtype=np.int64)
    pos = 0
    for copies, s in blocks:
        for _ in range(copies):
            for i in range(s - 1):
                mat[pos + i, pos + i + 1] = 1
            pos += s
    ranks = [size]
    power = mat
    while ranks[-1] > 0:
        ranks.append(int(np.linalg.matrix_rank(power)))
        power = power @ mat
    cols = [ranks[i] - ranks[i + 1] for i in range(len(ranks) - 1)]
    return transpose(Partition(cols))


# ---------------------------------------------------------------------------
# A-parameter shape enumeration


@lru_cache(maxsize=None)
def _summand_kinds(want_symplectic: bool, max_weight: int) -> tuple[Summand, ...]:
    kinds = []
    for dim in range(1, max_weight + 1):
        for a in range(1, max_weight // dim + 1):
            for b in range(1, max_weight // (dim * a) + 1):
                for t in (SelfDualType.ORTHOGONAL, SelfDualType.SYMPLECTIC):
                    if t is SelfDualType.SYMPLECTIC and dim % 2 == 1:
                        continue
                    s = Summand(dim, t, a, b)
                    if s.symplectic == want_symplectic:
                        kinds.append(s)
                if 2 * dim * a * b <= max_weight:
                    kinds.append(Summand(dim, SelfDualType.PAIR, a, b))
    return tuple(sorted(kinds, key=Summand.sort_key))


@lru_cache(maxsize=None)
def shapes_for(target: GroupType, rank: int) -> tuple[AParameterShape, ...]:
    """Every valid shape for the target group, in deterministic order."""
    m = 2 * rank + (1 if target is GroupType.C else 0)
    kinds = _summand_kinds(target is GroupType.B, m)
    out: list[AParameterShape] = []
    acc: list[Summand] = []

    def descend(i: int, remaining: int) -> None:
        if remaining == 0:
            out.append(AParameterShape(target, rank, tuple(acc)))
            return
        if i == len(kinds) or kinds[i].weight > remaining:
            return
        descend(i + 1, remaining)
        acc.append(kinds[i])
        descend(i, remaining - kinds[i].weight)
        acc.pop()

    descend(0, m)
    return tuple(out)


def proper_splits(
    shape: AParameterShape,
) -> Iterator[tuple[AParameterShape, AParameterShape]]:
    """All proper sign splits of the summand multiset, each unordered split
    once; splits whose factors cannot carry the endoscopic types (an odd
    factor dimension inside an even orthogonal group) are skipped."""
    groups = sorted(Counter(shape.summands).items(), key=lambda kv: kv[0].sort_key())
    counts = tuple(c for _, c in groups)
    for vector in product(*(range(c + 1) for c in counts)):
        complement = tuple(c - v for c, v in zip(counts, vector))
        if sum(vector) == 0 or sum(complement) == 0 or vector > complement:
            continue
        quota = {kind: v for (kind, _), v in zip(groups, vector)}
        signs = []
        for s in shape.summands:
            if quota.get(s, 0) > 0:
                quota[s] -= 1
                signs.append(1)
            else:
                signs.append(-1)
        try:
            yield split_by_signs(shape, tuple(signs))
        except ValueError:
            continue


def _ranks_with_m_at_most(target: GroupType, bound: int) -> Iterator[int]:
    rank = 1
    while 2 * rank + (1 if target is GroupType.C else 0) <= bound:
        yield rank
        rank += 1


# ---------------------------------------------------------------------------
# Property sweeps (each returns cases, failures, info)

_SweepResult = tuple[int, list[dict], dict]


def _sweep_transpose_involution(bound: int) -> _SweepResult:
    cases, failures = 0, []
    for d in range(bound + 1):
        for lam in partitions_of(d):
            cases += 1
            tr = transpose(lam)
            by_formula = []
            for k in range(1, len(lam) + 1):
                by_formula.extend([k] * (lam.part(k) - lam.part(k + 1)))
            if transpose(tr) != lam or Partition(by_formula) != tr:
                failures.append({"lambda": str(lam), "transpose": str(tr)})
    return cases, failures, {}


def _sweep_order_reversal(bound: int) -> _SweepResult:
    cases, failures = 0, []
    for d in range(bound + 1):
        lams = partitions_of(d)
        for lam in lams:
            for mu in lams:
                cases += 1
                if dominance_leq(lam, mu) != dominance_leq(
                    transpose(mu), transpose(lam)
                ):
                    failures.append({"lambda": str(lam), "mu": str(mu)})
    return cases, failures, {}


def _comparable_pairs_all(d: int) -> list[tuple[Partition, Partition]]:
    lams = partitions_of(d)
    return [(x, y) for x in lams for y in lams if dominance_leq(y, x)]


def _sweep_union_monotone(bound: int) -> _SweepResult:
    cases, failures = 0, []
    for d1 in range(bound + 1):
        pairs1 = _comparable_pairs_all(d1)
        for d2 in range(bound - d1 + 1):
            pairs2 = _comparable_pairs_all(d2)
            for l1, m1 in pairs1:
                for l2, m2 in pairs2:
                    cases += 1
                    if not dominance_leq(union(m1, m2), union(l1, l2)):
                        failures.append(
                            {
                                "lambda1": str(l1),
                                "lambda2": str(l2),
                                "mu1": str(m1),
                                "mu2": str(m2),
                            }
                        )
    return cases, failures, {}


def _sweep_transpose_union(bound: int) -> _SweepResult:
    cases, failures = 0, []
    for d1 in range(bound + 1):
        for d2 in range(bound - d1 + 1):
            for l1 in partitions_of(d1):
                for l2 in partitions_of(d2):
                    cases += 1
                    if transpose(union(l1, l2)) != add(transpose(l1), transpose(l2)):
                        failures.append({"lambda1": str(l1), "lambda2": str(l2)})
    return cases, failures, {}


def _sweep_add_union(bound: int) -> _SweepResult:
    cases, failures = 0, []
    for d1 in range(bound + 1):
        for d2 in range(bound - d1 + 1):
            for e1 in range(bound - d1 - d2 + 1):
                for e2 in range(bound - d1 - d2 - e1 + 1):
                    for l1 in partitions_of(d1):
                        for l2 in partitions_of(d2):
                            lu = union(l1, l2)
                            for m1 in partitions_of(e1):
                                for m2 in partitions_of(e2):
                                    cases += 1
                                    lhs = add(lu, union(m1, m2))
                                    rhs = union(add(l1, m1), add(l2, m2))
                                    if not dominance_leq(rhs, lhs):
                                        failures.append(
                                            {
                                                "lambda1": str(l1),
                                                "lambda2": str(l2),
                                                "mu1": str(m1),
                                                "mu2": str(m2),
                                            }
                                        )
    return cases, failures, {}


def _sweep_collapse_oracle(bound: int) -> _SweepResult:
    cases, failures = 0, []
    for t in GroupType:
        for d in range(t.size_parity, bound + 1, 2):
            for lam in partitions_of(d):
                cases += 1
                fast = collapse(lam, t)
                slow = brute_force_collapse(lam, t)
                if fast != slow:
                    failures.append(
                        {
                            "type": str(t),
                            "lambda": str(lam),
                            "collapse": str(fast),
                            "oracle": str(slow),
                        }
                    )
    return cases, failures, {}


def _sweep_dd_special(bound: int) -> _SweepResult:
    cases, failures = 0, []
    for t in GroupType:
        out_t = {"B": GroupType.C, "C": GroupType.B, "D": GroupType.D}[t.value]
        for d in range(t.size_parity, bound + 1, 2):
            members = member_list(d, t)
            duals = {lam: dual_partition(lam, t) for lam in members}
            for lam in members:
                cases += 1
                dd = dual_partition(duals[lam], out_t)
                special = classify(lam, t).special
                problems = []
                if not dominance_leq(lam, dd):
                    problems.append("lambda > d(d(lambda))")
                if (dd == lam) != special:
                    problems.append("fixed-point/special mismatch")
                if not classify(duals[lam], out_t).special:
                    problems.append("dual output not special")
                if problems:
                    failures.append(
                        {
                            "type": str(t),
                            "lambda": str(lam),
                            "dual": str(duals[lam]),
                            "double_dual": str(dd),
                            "problems": problems,
                        }
                    )
            for lam in members:
                for mu in members:
                    if dominance_leq(lam, mu):
                        cases += 1
                        if not dominance_leq(duals[mu], duals[lam]):
                            failures.append(
                                {
                                    "type": str(t),
                                    "lambda": str(lam),
                                    "mu": str(mu),
                                    "problems": ["dual not order-reversing"],
                                }
                            )
    return cases, failures, {}


def _sweep_special_dd_agree(bound: int) -> _SweepResult:
    cases, failures = 0, []
    for t in GroupType:
        out_t = {"B": GroupType.C, "C": GroupType.B, "D": GroupType.D}[t.value]
        for d in range(t.size_parity, bound + 1, 2):
            for lam in member_list(d, t):
                cases += 1
                fixed = dual_partition(dual_partition(lam, t), out_t) == lam
                if classify(lam, t).special != fixed:
                    failures.append({"type": str(t), "lambda": str(lam)})
    return cases, failures, {}


def _sweep_orbit_dim_antitone(bound: int) -> _SweepResult:
    cases, failures = 0, []
    for t in GroupType:
        for d in range(t.size_parity, bound + 1, 2):
            members = member_list(d, t)
            for lam in members:
                for mu in members:
                    if dominance_leq(lam, mu):
                        cases += 1
                        if orbit_dim(lam, t) > orbit_dim(mu, t):
                            failures.append(
                                {"type": str(t), "lambda": str(lam), "mu": str(mu)}
                            )
    return cases, failures, {}


def _w_failure(l1: Partition, l2: Partition, pair: PairType, **extra) -> dict:
    record = {"pair": str(pair), "lambda1": str(l1), "lambda2": str(l2)}
    xi = xi_vector(l1, l2, pair)
    record["xi"] = list(xi.entries)
    record["j_plus"] = list(xi.j_plus)
    record["j_minus"] = list(xi.j_minus)
    record.update(extra)
    return record


def _sweep_w_size(bound: int) -> _SweepResult:
    cases, failures = 0, []
    for pair in PairType:
        for l1, l2 in _special_pairs(pair, bound):
            cases += 1
            try:
                w = waldspurger(l1, l2, pair)
            except RuntimeError as exc:
                failures.append(
                    {
                        "pair": str(pair),
                        "lambda1": str(l1),
                        "lambda2": str(l2),
                        "error": str(exc),
                    }
                )
                continue
            if w.size != pair.total_size(l1.size, l2.size):
                failures.append(_w_failure(l1, l2, pair, w=str(w)))
    return cases, failures, {}


def _sweep_prop_ws(bound: int) -> _SweepResult:
    cases, failures = 0, []
    for pair in PairType:
        t1, t2 = pair.factor_types
        for l1, l2 in _special_pairs(pair, bound):
            cases += 1
            w = waldspurger(l1, l2, pair)
            dw = dual_partition(w, pair.target)
            rhs = union(dual_partition(l1, t1), dual_partition(l2, t2))
            if not dominance_leq(rhs, dw):
                failures.append(
                    _w_failure(
                        l1, l2, pair, w=str(w), d_w=str(dw), union_duals=str(rhs)
                    )
                )
    return cases, failures, {}


def _sweep_dim_identity(bound: int) -> _SweepResult:
    cases, failures = 0, []
    for pair in PairType:
        t1, t2 = pair.factor_types
        for l1, l2 in _special_pairs(pair, bound):
            cases += 1
            w = waldspurger(l1, l2, pair)
            d = pair.total_size(l1.size, l2.size)
            expected = (
                orbit_dim(l1, t1)
                + orbit_dim(l2, t2)
                + lie_algebra_dim(pair.target, d)
                - lie_algebra_dim(t1, l1.size)
                - lie_algebra_dim(t2, l2.size)
            )
            got = orbit_dim(w, pair.target)
            if got != expected:
                failures.append(
                    _w_failure(
                        l1, l2, pair, w=str(w), dim=got, expected_dim=expected
                    )
                )
    return cases, failures, {}


def _sweep_worder(bound: int) -> _SweepResult:
    cases, failures = 0, []
    for pair in PairType:
        t1, t2 = pair.factor_types
        for d1, d2 in _pair_sizes(pair, bound):
            for x1, y1 in comparable_special_pairs(d1, t1):
                for x2, y2 in comparable_special_pairs(d2, t2):
                    cases += 1
                    if not dominance_leq(
                        waldspurger(x1, x2, pair), waldspurger(y1, y2, pair)
                    ):
                        failures.append(
                            {
                                "pair": str(pair),
                                "lower": [str(x1), str(x2)],
                                "upper": [str(y1), str(y2)],
                            }
                        )
    return cases, failures, {}


def _sweep_rect_forms(bound: int) -> _SweepResult:
    """Closed forms for a pair of odd-height rectangles of type (B, B)."""
    cases, failures = 0, []
    for height in range(1, bound + 2, 2):
        for a1 in range(1, bound + 2, 2):
            for a2 in range(1, bound + 2, 2):
                d = height * (a1 + a2) - 1
                if d > bound:
                    continue
                cases += 1
                l1 = Partition([a1] * height)
                l2 = Partition([a2] * height)
                w = waldspurger(l1, l2, PairType.BB)
                expected_w = Partition([a1 + a2] * (height - 1) + [a1 + a2 - 1])
                if height == 1:
                    exp_d1 = Partition([1] * (l1.size - 1))
                    exp_d2 = Partition([1] * (l2.size - 1))
                    exp_dw = Partition([1] * (d - 1))
                else:
                    exp_d1 = Partition([height] * (a1 - 1) + [height - 1])
                    exp_d2 = Partition([height] * (a2 - 1) + [height - 1])
                    exp_dw = Partition(
                        [height] * (a1 + a2 - 2) + [height - 1, height - 1]
                    )
                checks = {
                    "w": (w, expected_w),
                    "d_lambda1": (dual_partition(l1, GroupType.B), exp_d1),
                    "d_lambda2": (dual_partition(l2, GroupType.B), exp_d2),
                    "d_w": (dual_partition(w, GroupType.B), exp_dw),
                    "union": (union(exp_d1, exp_d2), exp_dw),
                }
                bad = {
                    name: (str(got), str(exp))
                    for name, (got, exp) in checks.items()
                    if got != exp
                }
                if bad:
                    failures.append(
                        {
                            "height": height,
                            "a1": a1,
                            "a2": a2,
                            "mismatches": bad,
                        }
                    )
    return cases, failures, {}


def _sweep_achar(bound: int) -> _SweepResult:
    cases, failures = 0, []
    for t in GroupType:
        for d in range(t.size_parity, bound + 1, 2):
            lams = special_list(d, t)
            rhos = {lam: springer_bipartition(lam, t) for lam in lams}
            for lam in lams:
                for mu in lams:
                    cases += 1
                    if dominance_leq(lam, mu) != bipartition_leq(
                        rhos[lam], rhos[mu]
                    ):
                        failures.append(
                            {
                                "type": str(t),
                                "lambda": str(lam),
                                "mu": str(mu),
                                "rho_lambda": str(rhos[lam]),
                                "rho_mu": str(rhos[mu]),
                            }
                        )
    return cases, failures, {}


def _sweep_springer_roundtrip(bound: int) -> _SweepResult:
    cases, failures = 0, []
    for t in GroupType:
        for d in range(t.size_parity, bound + 1, 2):
            for lam in special_list(d, t):
                cases += 1
                rho = springer_bipartition(lam, t)
                back = partition_of_special_symbol(symbol_of(rho), t)
                if back != lam:
                    failures.append(
                        {
                            "type": str(t),
                            "lambda": str(lam),
                            "rho": str(rho),
                            "back": str(back),
                        }
                    )
    return cases, failures, {}


def _plain_sum(rho1: Bipartition, rho2: Bipartition) -> Bipartition:
    k = max(rho1.k, rho2.k)
    p1, p2 = rho1.padded(k), rho2.padded(k)
    return Bipartition(
        tuple(x + y for x, y in zip(p1.alpha, p2.alpha)),
        tuple(x + y for x, y in zip(p1.beta, p2.beta)),
        type_d=rho1.type_d and rho2.type_d,
    )


def family_special_symbol(s: Symbol) -> Symbol:
    """Unique special symbol in the family of ``s``: alternate the sorted
    entry multiset of the shift-minimal form across the two rows.  This is
    the oracle side of the closed-form specialization."""
    m = normalize_symbol(s)
    entries = sorted(m.top + m.bottom)
    if m.type_d:
        return Symbol(tuple(entries[1::2]), tuple(entries[0::2]), True)
    return Symbol(tuple(entries[0::2]), tuple(entries[1::2]))


def _sweep_specialize_family(bound: int) -> _SweepResult:
    cases, failures = 0, []
    for pair in PairType:
        t1, t2 = pair.factor_types
        for l1, l2 in _special_pairs(pair, bound):
            cases += 1
            r1 = springer_bipartition(l1, t1)
            r2 = springer_bipartition(l2, t2)
            tilde = specialize_sum(r1, r2, pair)
            plain_symbol = symbol_of(_plain_sum(r1, r2))
            sym = symbol_of(tilde)
            if (
                not is_special_symbol(sym)
                or family_key(sym) != family_key(plain_symbol)
                or sym != family_special_symbol(plain_symbol)
            ):
                failures.append(
                    {
                        "pair": str(pair),
                        "lambda1": str(l1),
                        "lambda2": str(l2),
                        "tilde": str(tilde),
                        "plain_symbol": str(plain_symbol),
                    }
                )
    return cases, failures, {}


def _sweep_closure_oracle(bound: int) -> _SweepResult:
    cases, failures = 0, []
    for pair in PairType:
        t1, t2 = pair.factor_types
        for l1, l2 in _special_pairs(pair, bound):
            cases += 1
            w = waldspurger(l1, l2, pair)
            closure = special_closure(l1, l2, pair)
            oracle = brute_force_min_special_above(w, pair.target)
            if closure != oracle:
                rho = specialize_sum(
                    springer_bipartition(l1, t1), springer_bipartition(l2, t2),
                    pair,
                )
                failures.append(
                    _w_failure(
                        l1, l2, pair, w=str(w), closure=str(closure),
                        oracle=str(oracle), specialized=str(rho),
                        symbol=str(symbol_of(rho)),
                    )
                )
    return cases, failures, {}


def _specialize_sum_cd_swapped(rho1: Bipartition, rho2: Bipartition) -> Bipartition:
    """Variant of the (C, D) specialization with the -1 moved to the first
    factor's condition; used to probe the asymmetry of the case table."""
    k = max(rho1.k, rho2.k)
    p1, p2 = rho1.padded(k), rho2.padded(k)
    a, b = p1.alpha, p1.beta
    ap, bp = p2.alpha, p2.beta
    c = [a[i] + ap[i] for i in range(k + 1)]
    d = [b[i] + bp[i] for i in range(k)]
    for i in range(1, k + 1):
        if b[i - 1] == a[i - 1] - 1 and bp[i - 1] == ap[i - 1]:
            c[i - 1] = b[i - 1] + bp[i - 1]
            d[i - 1] = a[i - 1] + ap[i - 1]
    return Bipartition(tuple(c), tuple(d))


def _sweep_cd_symmetry(bound: int) -> _SweepResult:
    cases, failures = 0, []
    asymmetric = 0
    for l1, l2 in _special_pairs(PairType.CD, bound):
        cases += 1
        r1 = springer_bipartition(l1, GroupType.C)
        r2 = springer_bipartition(l2, GroupType.D)
        stated = special_closure(l1, l2, PairType.CD)
        try:
            swapped_rho = _specialize_sum_cd_swapped(r1, r2)
            sym = symbol_of(swapped_rho)
            swapped = (
                partition_of_special_symbol(sym, GroupType.C)
                if is_special_symbol(sym)
                else None
            )
        except ValueError:
            swapped = None
        if swapped != stated:
            asymmetric += 1
        oracle = brute_force_min_special_above(
            waldspurger(l1, l2, PairType.CD), GroupType.C
        )
        if stated != oracle:
            failures.append(
                {
                    "lambda1": str(l1),
                    "lambda2": str(l2),
                    "stated": str(stated),
                    "swapped": str(swapped),
                    "oracle": str(oracle),
                }
            )
    return cases, failures, {"asymmetric_cases": asymmetric}


def _sweep_chain(bound: int) -> _SweepResult:
    cases, failures = 0, []
    dim_equal = 0
    for target in GroupType:
        pair = pair_type_of(target)
        for rank in _ranks_with_m_at_most(target, bound):
            for shape in shapes_for(target, rank):
                wf = predicted_wavefront(shape)
                for f1, f2 in proper_splits(shape):
                    cases += 1
                    w = waldspurger(
                        predicted_wavefront(f1), predicted_wavefront(f2), pair
                    )
                    if not dominance_leq(w, wf):
                        failures.append(
                            {
                                "shape": str(shape),
                                "split": [str(f1), str(f2)],
                                "w": str(w),
                                "wavefront": str(wf),
                            }
                        )
                    elif orbit_dim(w, target) == orbit_dim(wf, target):
                        dim_equal += 1
    return cases, failures, {"dim_equal_cases": dim_equal}


def _sweep_npsi_oracle(bound: int) -> _SweepResult:
    cases, failures = 0, []
    for target in GroupType:
        for rank in _ranks_with_m_at_most(target, bound):
            for shape in shapes_for(target, rank):
                cases += 1
                blocks = [
                    (
                        s.rho_dim
                        * s.a
                        * (2 if s.rho_type is SelfDualType.PAIR else 1),
                        s.b,
                    )
                    for s in shape.summands
                ]
                if npsi_partition(shape) != jordan_type_oracle(blocks):
                    failures.append({"shape": str(shape)})
    return cases, failures, {}


def _sweep_wavefront_special(bound: int) -> _SweepResult:
    cases, failures = 0, []
    for target in GroupType:
        for rank in _ranks_with_m_at_most(target, bound):
            regular = dual_partition(
                Partition([1] * (2 * rank + (1 if target is GroupType.C else 0))),
                _DUAL_SIDE_TYPE[target],
            )
            for shape in shapes_for(target, rank):
                cases += 1
                wf = predicted_wavefront(shape)
                problems = []
                if not classify(wf, target).special:
                    problems.append("wavefront not special")
                if all(s.b == 1 for s in shape.summands) and wf != regular:
                    problems.append("tempered shape misses the regular dual")
                if problems:
                    failures.append({"shape": str(shape), "problems": problems})
    return cases, failures, {}


# ---------------------------------------------------------------------------
# Registry


@dataclass(frozen=True)
class PropertySpec:
    name: str
    default_bound: int
    runner: Callable[[int], _SweepResult]
    description: str


_PROPERTY_LIST = [
    PropertySpec(
        "transpose_involution", 16, _sweep_transpose_involution,
        "transpose is an involution and matches its multiplicity formula",
    ),
    PropertySpec(
        "order_reversal", 12, _sweep_order_reversal,
        "dominance reverses under transposition",
    ),
    PropertySpec(
        "union_monotone", 10, _sweep_union_monotone,
        "multiset union is monotone in both arguments",
    ),
    PropertySpec(
        "transpose_union", 14, _sweep_transpose_union,
        "transpose of a union is the sum of transposes",
    ),
    PropertySpec(
        "add_union", 10, _sweep_add_union,
        "sum of unions dominates union of sums",
    ),
    PropertySpec(
        "collapse_oracle", 12, _sweep_collapse_oracle,
        "greedy collapse equals the brute-force dominance maximum",
    ),
    PropertySpec(
        "dd_special", 16, _sweep_dd_special,
        "duality laws: below double dual, equality iff special, special "
        "image, order reversing",
    ),
    PropertySpec(
        "special_dd_agree", 16, _sweep_special_dd_agree,
        "transpose specialness criterion matches double-dual fixed points",
    ),
    PropertySpec(
        "orbit_dim_antitone", 14, _sweep_orbit_dim_antitone,
        "orbit dimension respects the dominance order",
    ),
    PropertySpec(
        "w_size", 16, _sweep_w_size,
        "transfer image is a partition of the expected size",
    ),
    PropertySpec(
        "prop_ws", 16, _sweep_prop_ws,
        "dual of the transfer image dominates the union of the duals",
    ),
    PropertySpec(
        "dim_identity", 16, _sweep_dim_identity,
        "transfer image dimension identity (exact integers)",
    ),
    PropertySpec(
        "worder", 14, _sweep_worder,
        "transfer map is monotone in both arguments",
    ),
    PropertySpec(
        "rect_forms", 16, _sweep_rect_forms,
        "closed forms for odd-height rectangle pairs of type (B,B)",
    ),
    PropertySpec(
        "achar", 14, _sweep_achar,
        "dominance of special partitions matches the bipartition order",
    ),
    PropertySpec(
        "springer_roundtrip", 20, _sweep_springer_roundtrip,
        "special partition -> bipartition -> partition round trip",
    ),
    PropertySpec(
        "specialize_family", 14, _sweep_specialize_family,
        "specialized sum is special and stays in the plain sum's family",
    ),
    PropertySpec(
        "closure_oracle", 14, _sweep_closure_oracle,
        "symbol-based closure equals the minimal special partition above "
        "the transfer image",
    ),
    PropertySpec(
        "cd_symmetry", 14, _sweep_cd_symmetry,
        "(C,D) specialization against the oracle, counting how often the "
        "mirrored case table would differ",
    ),
    PropertySpec(
        "chain", 12, _sweep_chain,
        "endoscopic wavefront chain: transfer of split wavefronts stays "
        "below the full wavefront",
    ),
    PropertySpec(
        "npsi_oracle", 10, _sweep_npsi_oracle,
        "shape nilpotent matches the matrix Jordan-type oracle",
    ),
    PropertySpec(
        "wavefront_special", 12, _sweep_wavefront_special,
        "predicted wavefronts are special; tempered shapes give the "
        "regular special orbit",
    ),
]

PROPERTIES: dict[str, PropertySpec] = {p.name: p for p in _PROPERTY_LIST}


def verify(name: str, bound: int | None = None) -> VerificationReport:
    """Run one registered property sweep up to ``bound`` (default per
    property) and report the counterexamples."""
    if name not in PROPERTIES:
        known = ", ".join(PROPERTIES)
        raise ValueError(f"unknown property {name!r}; known: {known}")
    spec = PROPERTIES[name]
    if bound is None:
        bound = spec.default_bound
    if bound < 0:
        raise ValueError("bound must be non-negative")
    start = time.perf_counter()
    cases, failures, info = spec.runner(bound)
    elapsed = time.perf_counter() - start
    info = dict(info)
    info["failure_count"] = len(failures)
    return VerificationReport(
        property=name,
        bound=bound,
        cases_checked=cases,
        failures=failures[:MAX_RECORDED_FAILURES],
        wall_time=elapsed,
        info=info,
    )
