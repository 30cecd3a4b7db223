"""Exact solvers for limited-packing and domination invariants.

One branch-and-bound engine handles the maximization family (k-limited and
k-total limited packings) and one handles the minimization family
(dominating and total dominating sets). ``brute_force_oracle`` is a
deliberately naive subset enumeration kept structurally independent of the
branch-and-bound code paths so the two can cross-check each other.

Witness sets are deterministic: the lexicographically least optimal set
(comparing sorted vertex tuples).
"""

from __future__ import annotations

import sys
import threading
from contextlib import contextmanager
from dataclasses import dataclass

from .core import CapExceededError, Graph, SearchBudgetExceeded, iter_bits

sys.setrecursionlimit(max(sys.getrecursionlimit(), 20000))

_BUDGET = threading.local()


@contextmanager
def node_budget(cap: int | None):
    """Default node budget for solver calls in this thread that don't pass one."""
    previous = getattr(_BUDGET, "cap", None)
    _BUDGET.cap = cap
    try:
        yield
    finally:
        _BUDGET.cap = previous


def _effective_cap(node_cap: int | None) -> int | None:
    if node_cap is not None:
        return node_cap
    return getattr(_BUDGET, "cap", None)

LIMITED_PACKING = "limited_packing"
TOTAL_LIMITED_PACKING = "total_limited_packing"
DOMINATION = "domination"
TOTAL_DOMINATION = "total_domination"
KINDS = (LIMITED_PACKING, TOTAL_LIMITED_PACKING, DOMINATION, TOTAL_DOMINATION)

BRANCH_AND_BOUND = "branch_and_bound"
ENUMERATION = "enumeration"

ORACLE_CAP = 24
ENUMERATION_CAP = 24


@dataclass(frozen=True)
class OptResult:
    """Exact invariant value with a witness and search statistics."""

    value: int
    witness: object
    nodes_explored: int
    method: str


def _require_k(k: int) -> None:
    if k < 1:
        raise ValueError("k must be at least 1")


def _member_mask(g: Graph, s) -> int:
    m = 0
    for v in s:
        if not 0 <= v < g.n:
            raise ValueError(f"vertex {v} outside 0..{g.n - 1}")
        m |= 1 << v
    return m


def is_k_limited_packing(g: Graph, s, k: int) -> bool:
    """True iff every closed neighborhood meets ``s`` in at most k vertices."""
    _require_k(k)
    m = _member_mask(g, s)
    return all(((g.adj[v] | (1 << v)) & m).bit_count() <= k for v in range(g.n))


def is_k_total_limited_packing(g: Graph, s, k: int) -> bool:
    """True iff every open neighborhood meets ``s`` in at most k vertices."""
    _require_k(k)
    m = _member_mask(g, s)
    return all((g.adj[v] & m).bit_count() <= k for v in range(g.n))


def _neighborhood_masks(g: Graph, total: bool) -> tuple[int, ...]:
    # total variant constrains open neighborhoods, plain variant closed ones
    if total:
        return g.adj
    return tuple(g.adj[v] | (1 << v) for v in range(g.n))


def _descending_degree_order(g: Graph) -> tuple[int, ...]:
    return tuple(sorted(range(g.n), key=lambda v: (-g.adj[v].bit_count(), v)))


def _max_packing_value(n, aff, k, order, node_budget):
    """Optimal packing size via capacity-tracking branch and bound.

    ``aff[v]`` is the bitmask of vertices whose counter increases when v
    joins the set (its own constraint neighborhood; symmetric by
    undirectedness).
    """
    aff_bits = [tuple(iter_bits(m)) for m in aff]
    caps = [k] * n

    best = 0
    for v in order:  # greedy incumbent along the search order
        if all(caps[w] for w in aff_bits[v]):
            for w in aff_bits[v]:
                caps[w] -= 1
            best += 1
    caps = [k] * n

    free = 0
    for v in range(n):
        if not aff[v]:
            free |= 1 << v
    constrained_sizes = [len(b) for b in aff_bits if b]
    min_aff = min(constrained_sizes) if constrained_sizes else 0
    slack0 = k * len(constrained_sizes)
    full = (1 << n) - 1
    nodes = 0

    def dfs(i, cur, addable, und, slack):
        nonlocal best, nodes
        nodes += 1
        if node_budget is not None and nodes > node_budget:
            raise SearchBudgetExceeded("node budget exhausted")
        cand = addable & und
        if min_aff:
            possible = (cand & free).bit_count() + min(
                (cand & ~free).bit_count(), slack // min_aff
            )
        else:
            possible = cand.bit_count()
        if cur + possible <= best:
            return
        if i == n:
            best = cur
            return
        v = order[i]
        vb = 1 << v
        und2 = und & ~vb
        if addable & vb:
            new_addable = addable
            for w in aff_bits[v]:
                c = caps[w] - 1
                caps[w] = c
                if c == 0:
                    new_addable &= ~aff[w]
            dfs(i + 1, cur + 1, new_addable, und2, slack - len(aff_bits[v]))
            for w in aff_bits[v]:
                caps[w] += 1
        dfs(i + 1, cur, addable, und2, slack)

    dfs(0, 0, full, full, slack0)
    return best, nodes


def _max_packing_witness(n, aff, k, target, node_budget):
    """Lexicographically least feasible set of size ``target``."""
    aff_bits = [tuple(iter_bits(m)) for m in aff]
    caps = [k] * n
    free = 0
    for v in range(n):
        if not aff[v]:
            free |= 1 << v
    constrained_sizes = [len(b) for b in aff_bits if b]
    min_aff = min(constrained_sizes) if constrained_sizes else 0
    slack0 = k * len(constrained_sizes)
    full = (1 << n) - 1
    nodes = 0
    chosen: list[int] = []

    def dfs(v, cur, addable, slack):
        nonlocal nodes
        nodes += 1
        if node_budget is not None and nodes > node_budget:
            raise SearchBudgetExceeded("node budget exhausted")
        if cur == target:
            return True
        if v == n:
            return False
        und = (full >> v) << v
        cand = addable & und
        if min_aff:
            possible = (cand & free).bit_count() + min(
                (cand & ~free).bit_count(), slack // min_aff
            )
        else:
            possible = cand.bit_count()
        if cur + possible < target:
            return False
        vb = 1 << v
        if addable & vb:
            new_addable = addable
            for w in aff_bits[v]:
                c = caps[w] - 1
                caps[w] = c
                if c == 0:
                    new_addable &= ~aff[w]
            chosen.append(v)
            if dfs(v + 1, cur + 1, new_addable, slack - len(aff_bits[v])):
                return True
            chosen.pop()
            for w in aff_bits[v]:
                caps[w] += 1
        return dfs(v + 1, cur, addable, slack)

    if not dfs(0, 0, full, slack0):
        raise AssertionError("witness search failed to reach the proven optimum")
    return frozenset(chosen), nodes


def max_limited_packing(g: Graph, k: int, total: bool = False, node_cap: int | None = None) -> OptResult:
    """Exact L_k (closed) or L_{k,t} (open, ``total=True``) with witness.

    Fast path: when the constraint can never bind (k at least the maximum
    closed/open neighborhood size) the whole vertex set is optimal.
    """
    _require_k(k)
    node_cap = _effective_cap(node_cap)
    n = g.n
    if n == 0:
        return OptResult(0, frozenset(), 0, BRANCH_AND_BOUND)
    ceiling = g.max_degree if total else g.max_degree + 1
    if k >= ceiling:
        return OptResult(n, frozenset(range(n)), 0, BRANCH_AND_BOUND)
    aff = _neighborhood_masks(g, total)
    order = _descending_degree_order(g)
    value, n1 = _max_packing_value(n, aff, k, order, node_cap)
    witness, n2 = _max_packing_witness(n, aff, k, value, node_cap)
    return OptResult(value, witness, n1 + n2, BRANCH_AND_BOUND)


def packing_number(g: Graph, node_cap: int | None = None) -> OptResult:
    return max_limited_packing(g, 1, total=False, node_cap=node_cap)


def open_packing_number(g: Graph, node_cap: int | None = None) -> OptResult:
    return max_limited_packing(g, 1, total=True, node_cap=node_cap)


def _min_cover_value(n, cover, node_budget):
    full = (1 << n) - 1
    covered = 0
    best = 0
    while covered != full:  # greedy incumbent: max new coverage, lowest index
        u_best = 0
        gain_best = -1
        for u in range(n):
            gain = (cover[u] & ~covered).bit_count()
            if gain > gain_best:
                gain_best, u_best = gain, u
        covered |= cover[u_best]
        best += 1
    nodes = 0

    def dfs(cnt, covered, allowed):
        nonlocal best, nodes
        nodes += 1
        if node_budget is not None and nodes > node_budget:
            raise SearchBudgetExceeded("node budget exhausted")
        if covered == full:
            if cnt < best:
                best = cnt
            return
        unc = full & ~covered
        pick_c = 0
        pick_len = n + 1
        m = unc
        while m:
            low = m & -m
            m ^= low
            v = low.bit_length() - 1
            cds = cover[v] & allowed
            l = cds.bit_count()
            if l == 0:
                return
            if l < pick_len:
                pick_len, pick_c = l, cds
                if l == 1:
                    break
        maxgain = 0
        m = allowed
        while m:
            low = m & -m
            m ^= low
            u = low.bit_length() - 1
            gain = (cover[u] & unc).bit_count()
            if gain > maxgain:
                maxgain = gain
        if maxgain == 0:
            return
        need = -(-unc.bit_count() // maxgain)
        if cnt + need >= best:
            return
        cds = pick_c
        while cds:
            low = cds & -cds
            cds ^= low
            u = low.bit_length() - 1
            dfs(cnt + 1, covered | cover[u], allowed)
            allowed &= ~low

    dfs(0, 0, full)
    return best, nodes


def _min_cover_witness(n, cover, target, node_budget):
    """Lexicographically least cover of size ``target``."""
    full = (1 << n) - 1
    nodes = 0
    chosen: list[int] = []

    def dfs(v, cnt, covered):
        nonlocal nodes
        nodes += 1
        if node_budget is not None and nodes > node_budget:
            raise SearchBudgetExceeded("node budget exhausted")
        if covered == full:
            return cnt == target
        if v == n or cnt == target:
            return False
        und = (full >> v) << v
        unc = full & ~covered
        maxgain = 0
        m = unc
        while m:
            low = m & -m
            m ^= low
            w = low.bit_length() - 1
            if not cover[w] & und:
                return False
        m = und
        while m:
            low = m & -m
            m ^= low
            u = low.bit_length() - 1
            gain = (cover[u] & unc).bit_count()
            if gain > maxgain:
                maxgain = gain
        if cnt + -(-unc.bit_count() // maxgain) > target:
            return False
        chosen.append(v)
        if dfs(v + 1, cnt + 1, covered | cover[v]):
            return True
        chosen.pop()
        return dfs(v + 1, cnt, covered)

    if not dfs(0, 0, 0):
        raise AssertionError("witness search failed to reach the proven optimum")
    return frozenset(chosen), nodes


def min_dominating(g: Graph, total: bool = False, node_cap: int | None = None) -> OptResult:
    """Exact domination number (or total domination with ``total=True``)."""
    node_cap = _effective_cap(node_cap)
    n = g.n
    if total and any(m == 0 for m in g.adj):
        raise ValueError("total domination is undefined on graphs with isolated vertices")
    if n == 0:
        return OptResult(0, frozenset(), 0, BRANCH_AND_BOUND)
    cover = _neighborhood_masks(g, total)
    value, n1 = _min_cover_value(n, cover, node_cap)
    witness, n2 = _min_cover_witness(n, cover, value, node_cap)
    return OptResult(value, witness, n1 + n2, BRANCH_AND_BOUND)


def domination_number(g: Graph, node_cap: int | None = None) -> OptResult:
    return min_dominating(g, total=False, node_cap=node_cap)


def total_domination_number(g: Graph, node_cap: int | None = None) -> OptResult:
    return min_dominating(g, total=True, node_cap=node_cap)


def enumerate_optimal_sets(g: Graph, kind: str, k: int = 1, cap: int = ENUMERATION_CAP) -> list[frozenset]:
    """All optimal witness sets for the given invariant, sorted."""
    if kind not in KINDS:
        raise ValueError(f"unknown kind {kind!r}")
    if g.n > cap:
        raise CapExceededError(f"enumeration capped at {cap} vertices, got {g.n}")
    n = g.n
    full = (1 << n) - 1
    results: list[frozenset] = []
    if kind in (LIMITED_PACKING, TOTAL_LIMITED_PACKING):
        _require_k(k)
        total = kind == TOTAL_LIMITED_PACKING
        opt = max_limited_packing(g, k, total).value
        aff = _neighborhood_masks(g, total)
        aff_bits = [tuple(iter_bits(m)) for m in aff]
        caps = [k] * n
        chosen: list[int] = []

        def dfs(v, cur, addable):
            if v == n:
                if cur == opt:
                    results.append(frozenset(chosen))
                return
            und = (full >> v) << v
            if cur + (addable & und).bit_count() < opt:
                return
            vb = 1 << v
            if addable & vb:
                new_addable = addable
                for w in aff_bits[v]:
                    c = caps[w] - 1
                    caps[w] = c
                    if c == 0:
                        new_addable &= ~aff[w]
                chosen.append(v)
                dfs(v + 1, cur + 1, new_addable)
                chosen.pop()
                for w in aff_bits[v]:
                    caps[w] += 1
            dfs(v + 1, cur, addable)

        dfs(0, 0, full)
    else:
        total = kind == TOTAL_DOMINATION
        opt = min_dominating(g, total).value
        cover = _neighborhood_masks(g, total)
        chosen = []

        def dfs(v, cnt, covered):
            if covered == full and cnt == opt:
                results.append(frozenset(chosen))
                return
            if v == n or cnt == opt:
                return
            und = (full >> v) << v
            m = full & ~covered
            while m:
                low = m & -m
                m ^= low
                w = low.bit_length() - 1
                if not cover[w] & und:
                    return
            chosen.append(v)
            dfs(v + 1, cnt + 1, covered | cover[v])
            chosen.pop()
            dfs(v + 1, cnt, covered)

        dfs(0, 0, 0)
    return sorted(results, key=sorted)


def brute_force_oracle(g: Graph, kind: str, k: int = 1, cap: int = ORACLE_CAP) -> int:
    """Optimum by plain subset enumeration with zero pruning.

    Shares no search machinery with the branch-and-bound solvers; used as
    the independent reference value.
    """
    if kind not in KINDS:
        raise ValueError(f"unknown kind {kind!r}")
    if g.n > cap:
        raise CapExceededError(f"oracle capped at {cap} vertices, got {g.n}")
    n = g.n
    if kind in (LIMITED_PACKING, TOTAL_LIMITED_PACKING):
        _require_k(k)
        if kind == TOTAL_LIMITED_PACKING:
            masks = list(g.adj)
        else:
            masks = [g.adj[v] | (1 << v) for v in range(n)]
        best = 0
        for s in range(1 << n):
            ok = True
            for m in masks:
                if (m & s).bit_count() > k:
                    ok = False
                    break
            if ok:
                c = s.bit_count()
                if c > best:
                    best = c
        return best
    if kind == TOTAL_DOMINATION:
        if any(m == 0 for m in g.adj):
            raise ValueError("total domination is undefined on graphs with isolated vertices")
        masks = list(g.adj)
    else:
        masks = [g.adj[v] | (1 << v) for v in range(n)]
    best = n
    for s in range(1 << n):
        ok = True
        for m in masks:
            if not m & s:
                ok = False
                break
        if ok:
            c = s.bit_count()
            if c < best:
                best = c
    return best
