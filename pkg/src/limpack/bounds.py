"""One checker per verified inequality/characterization.

Every checker computes both sides exactly (rationals stay exact via
``fractions.Fraction``; the 2*sqrt(n) bound is compared through integer
squares) and classifies the outcome:

  * ``sharp``    - the two sides are equal and the inequality holds,
  * ``holds``    - strict inequality in the claimed direction,
  * ``violated`` - the claim fails; the witness is independently recheckable,
  * ``vacuous``  - the statement's premise is not met.

Structural preconditions written into a statement (tree-ness, minimum
degree) are caller errors, not vacuous passes.

``SOLID_THEOREMS`` lists the claims asserted to hold on every corpus run
(a violation is a failure); ``REPORT_ONLY_THEOREMS`` are audited claims
whose outcomes are recorded either way.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import families, products
from .core import (
    CapExceededError,
    Graph,
    build_graph,
    is_star,
    is_tree,
    isolated_count,
    leaves,
    min_internal_degree,
    remove_edge,
    remove_isolated,
)
from .partition import partition_number
from .solvers import (
    LIMITED_PACKING,
    TOTAL_DOMINATION,
    TOTAL_LIMITED_PACKING,
    enumerate_optimal_sets,
    max_limited_packing,
    min_dominating,
)

HOLDS = "holds"
VIOLATED = "violated"
VACUOUS = "vacuous"
SHARP = "sharp"

DEGREE_SEQUENCE = "degree_sequence_bound"
MAX_DEGREE = "max_degree_bound"
STAR_SPLIT_CHAR = "star_split_characterization"
REGULAR = "regular_consequence"
TREE_DELTA_PRIME = "tree_min_internal_degree_bound"
EDGE_DELETION_LOWER = "edge_deletion_lower"
EDGE_DELETION_UPPER = "edge_deletion_upper"
OPEN_PACKING_SANDWICH_LOWER = "open_packing_sandwich_lower"
OPEN_PACKING_SANDWICH_UPPER = "open_packing_sandwich_upper"
TREE_SANDWICH_LOWER = "tree_sandwich_lower"
TREE_SANDWICH_UPPER = "tree_sandwich_upper"
STAR_CHAR = "star_characterization"
TOTAL_DOM_CHAR = "total_domination_characterization"
UNIQUE_SET_LEAVES = "unique_set_leaves"
CARTESIAN_L2T_LOWER = "cartesian_l2t_lower"
DIRECT_L2T_LOWER = "direct_l2t_lower"
ROOTED_L2T_LOWER = "rooted_l2t_lower"
ROOTED_L2T_UPPER = "rooted_l2t_upper"
CARTESIAN_L2_UPPER = "cartesian_l2_upper"
DIRECT_L2_LOWER = "direct_l2_lower"
ROOTED_L2_FORMULA = "rooted_l2_formula"
CHI_SUM = "chi_sum_bound"
CHI_PRODUCT = "chi_product_bound"
CHI_CEILING = "chi_ceiling_bound"
CORONA_RANGE_LOWER = "corona_chi_range_lower"
CORONA_RANGE_UPPER = "corona_chi_range_upper"
CORONA_NBHD_LOWER = "corona_chi_neighborhood_lower"
AUX_KN_OVER_DELTA = "aux_kn_over_delta"
AUX_K_GAMMA_T = "aux_k_total_domination"
AUX_RHO_O_GAMMA_T = "aux_open_packing_equals_total_domination"

#: Asserted on every corpus graph; any violation fails a verification run.
SOLID_THEOREMS = frozenset(
    {
        DEGREE_SEQUENCE,
        MAX_DEGREE,
        REGULAR,
        TREE_DELTA_PRIME,
        EDGE_DELETION_LOWER,
        EDGE_DELETION_UPPER,
        TREE_SANDWICH_LOWER,
        TREE_SANDWICH_UPPER,
        UNIQUE_SET_LEAVES,
        CARTESIAN_L2T_LOWER,
        DIRECT_L2T_LOWER,
        ROOTED_L2T_LOWER,
        ROOTED_L2T_UPPER,
        CARTESIAN_L2_UPPER,
        DIRECT_L2_LOWER,
        CHI_SUM,
        CHI_PRODUCT,
        CHI_CEILING,
        CORONA_RANGE_LOWER,
        CORONA_RANGE_UPPER,
        CORONA_NBHD_LOWER,
        AUX_KN_OVER_DELTA,
        AUX_K_GAMMA_T,
        AUX_RHO_O_GAMMA_T,
    }
)

#: Audited and recorded, never auto-failed.
REPORT_ONLY_THEOREMS = frozenset(
    {
        STAR_SPLIT_CHAR,
        OPEN_PACKING_SANDWICH_LOWER,
        OPEN_PACKING_SANDWICH_UPPER,
        STAR_CHAR,
        TOTAL_DOM_CHAR,
        ROOTED_L2_FORMULA,
    }
)


@dataclass(frozen=True)
class BoundReport:
    theorem_id: str
    lhs: int | Fraction
    rhs: int | Fraction
    status: str
    witness: dict | None = None


@dataclass(frozen=True)
class CharacterizationReport:
    """An equality condition against its structural condition.

    ``agree`` is None only when the structural side could not be decided
    (membership search above its cap).
    """

    theorem_id: str
    equality_holds: bool
    structural_condition_holds: bool | None
    agree: bool | None
    detail: dict | None = None


def _norm(x):
    if isinstance(x, Fraction) and x.denominator == 1:
        return int(x)
    return x


def _le_report(tid, lhs, rhs, witness=None) -> BoundReport:
    lhs, rhs = _norm(lhs), _norm(rhs)
    if lhs == rhs:
        status = SHARP
    elif lhs < rhs:
        status = HOLDS
    else:
        status = VIOLATED
    return BoundReport(tid, lhs, rhs, status, witness)


def _ge_report(tid, lhs, rhs, witness=None) -> BoundReport:
    lhs, rhs = _norm(lhs), _norm(rhs)
    if lhs == rhs:
        status = SHARP
    elif lhs > rhs:
        status = HOLDS
    else:
        status = VIOLATED
    return BoundReport(tid, lhs, rhs, status, witness)


def _eq_report(tid, lhs, rhs, witness=None) -> BoundReport:
    lhs, rhs = _norm(lhs), _norm(rhs)
    return BoundReport(tid, lhs, rhs, SHARP if lhs == rhs else VIOLATED, witness)


def _l2t(g: Graph, k: int = 2):
    return max_limited_packing(g, k, total=True)


def _sorted(s) -> list[int]:
    return sorted(s)


def check_degree_sequence_bound(g: Graph, k: int) -> BoundReport:
    """L_{k,t} against the longest ascending-degree prefix summing to <= kn."""
    if g.n < 2:
        raise ValueError("degree-sequence bound needs at least 2 vertices")
    if k < 1:
        raise ValueError("k must be at least 1")
    degs = g.degree_sequence()
    budget = k * g.n
    total = 0
    t = 0
    for d in degs:
        if total + d > budget:
            break
        total += d
        t += 1
    opt = _l2t(g, k)
    return _le_report(
        DEGREE_SEQUENCE,
        opt.value,
        t,
        {"optimal_set": _sorted(opt.witness), "degree_sequence": list(degs)},
    )


@dataclass(frozen=True)
class MaxDegreeCheck:
    bound: BoundReport
    characterization: CharacterizationReport | None


def check_max_degree_bound(g: Graph, k: int, membership_cap: int = 16) -> MaxDegreeCheck:
    """L_{k,t} <= n + k - max_degree; for k=2 also the star-split equality audit."""
    if g.n < 1:
        raise ValueError("graph must be non-empty")
    if k < 1:
        raise ValueError("k must be at least 1")
    opt = _l2t(g, k)
    rhs = g.n + k - g.max_degree
    report = _le_report(MAX_DEGREE, opt.value, rhs, {"optimal_set": _sorted(opt.witness)})
    characterization = None
    if k == 2:
        equality = opt.value == rhs
        cert = families.star_split_membership(g, cap=membership_cap)
        if cert is families.CAP_EXCEEDED:
            characterization = CharacterizationReport(
                STAR_SPLIT_CHAR, equality, None, None, {"reason": "membership cap exceeded"}
            )
        else:
            structural = cert is not None
            detail = None
            if cert is not None:
                detail = {
                    "certificate": {
                        "a": _sorted(cert.a),
                        "b": _sorted(cert.b),
                        "star_center": cert.star_center,
                    }
                }
            characterization = CharacterizationReport(
                STAR_SPLIT_CHAR, equality, structural, equality == structural, detail
            )
    return MaxDegreeCheck(report, characterization)


def check_regular_consequence(g: Graph, k: int) -> BoundReport:
    """On r-regular graphs attaining L_{k,t} = n+k-r with k <= r-1: r >= (n+1)/2."""
    if k < 1:
        raise ValueError("k must be at least 1")
    rhs = Fraction(g.n + 1, 2)
    degs = set(g.degree_sequence())
    if g.n == 0 or len(degs) != 1:
        return BoundReport(REGULAR, 0, _norm(rhs), VACUOUS, {"reason": "not regular"})
    r = degs.pop()
    if k > r - 1:
        return BoundReport(REGULAR, r, _norm(rhs), VACUOUS, {"reason": "k exceeds r-1"})
    value = _l2t(g, k).value
    if value != g.n + k - r:
        return BoundReport(
            REGULAR, r, _norm(rhs), VACUOUS,
            {"reason": "ceiling not attained", "l_kt": value},
        )
    return _ge_report(REGULAR, r, rhs, {"l_kt": value})


def check_tree_delta_prime_bound(t: Graph, c: int) -> BoundReport:
    """On trees with all internal degrees >= c >= 4: L_{2,t} <= (c-2)n/(c-1) - c + 4."""
    if not is_tree(t) or t.n < 3:
        raise ValueError("input must be a tree on at least 3 vertices")
    if c < 4:
        raise ValueError("bound requires c >= 4")
    if min_internal_degree(t) < c:
        raise ValueError(f"minimum internal degree below {c}")
    opt = _l2t(t)
    rhs = Fraction((c - 2) * t.n, c - 1) - c + 4
    return _le_report(TREE_DELTA_PRIME, opt.value, rhs, {"optimal_set": _sorted(opt.witness)})


def check_edge_deletion(g: Graph, edge: tuple[int, int], k: int) -> tuple[BoundReport, BoundReport]:
    """Deleting one edge can only raise L_{k,t}, and by at most 2."""
    u, v = edge
    reduced = remove_edge(g, u, v)  # validates the edge
    base = _l2t(g, k).value
    after = _l2t(reduced, k).value
    witness = {"edge": [min(u, v), max(u, v)], "before": base, "after": after}
    lower = _le_report(EDGE_DELETION_LOWER, base, after, witness)
    upper = _le_report(EDGE_DELETION_UPPER, after, base + 2, witness)
    return lower, upper


def check_open_packing_sandwich(g: Graph) -> tuple[BoundReport, BoundReport]:
    """open packing + 1 <= L_{2,t} <= (max_degree^2+1)/min_degree * open packing.

    The upper bound is under audit (report-only): both sides are computed
    and recorded as-is.
    """
    if g.n == 0 or isolated_count(g) > 0:
        raise ValueError("graph must have no isolated vertices")
    if g.max_degree < 2:
        raise ValueError("bound requires maximum degree at least 2")
    rho_o = max_limited_packing(g, 1, total=True)
    l2t = _l2t(g)
    witness = {
        "open_packing": rho_o.value,
        "l2t": l2t.value,
        "open_packing_set": _sorted(rho_o.witness),
        "l2t_set": _sorted(l2t.witness),
    }
    lower = _le_report(OPEN_PACKING_SANDWICH_LOWER, rho_o.value + 1, l2t.value, witness)
    bound = Fraction(g.max_degree**2 + 1, g.min_degree) * rho_o.value
    upper = _le_report(OPEN_PACKING_SANDWICH_UPPER, l2t.value, bound, witness)
    return lower, upper


@dataclass(frozen=True)
class TreeSandwichCheck:
    lower: BoundReport
    upper: BoundReport
    star_characterization: CharacterizationReport
    total_domination_characterization: CharacterizationReport


def _total_domination_condition(t: Graph) -> tuple[bool, dict | None]:
    # quantifies over every optimal 2TLP set S and every optimal TDS D
    s_sets = enumerate_optimal_sets(t, TOTAL_LIMITED_PACKING, 2)
    d_sets = enumerate_optimal_sets(t, TOTAL_DOMINATION)
    for s_set in s_sets:
        for d_set in d_sets:
            for s in s_set:
                if len(t.open_neighborhood(s) & d_set) != 1:
                    return False, {"s_set": _sorted(s_set), "d_set": _sorted(d_set), "vertex": s}
            for d in d_set:
                if len(t.open_neighborhood(d) & s_set) != 2:
                    return False, {"s_set": _sorted(s_set), "d_set": _sorted(d_set), "vertex": d}
    return True, {"s_sets": len(s_sets), "d_sets": len(d_sets)}


def check_tree_sandwich(t: Graph) -> TreeSandwichCheck:
    """open packing + 1 <= L_{2,t} <= 2 * open packing on trees, plus both
    equality characterizations (star at the bottom, the all-optimal-pairs
    total-domination condition at the top)."""
    if not is_tree(t) or t.max_degree < 2:
        raise ValueError("input must be a tree with maximum degree at least 2")
    rho_o = max_limited_packing(t, 1, total=True).value
    l2t = _l2t(t).value
    witness = {"open_packing": rho_o, "l2t": l2t}
    lower = _le_report(TREE_SANDWICH_LOWER, rho_o + 1, l2t, witness)
    upper = _le_report(TREE_SANDWICH_UPPER, l2t, 2 * rho_o, witness)
    bottom_equality = rho_o + 1 == l2t
    star = is_star(t) and t.n >= 3
    star_char = CharacterizationReport(
        STAR_CHAR, bottom_equality, star, bottom_equality == star, witness
    )
    top_equality = l2t == 2 * rho_o
    condition, detail = _total_domination_condition(t)
    tdom_char = CharacterizationReport(
        TOTAL_DOM_CHAR, top_equality, condition, top_equality == condition, detail
    )
    return TreeSandwichCheck(lower, upper, star_char, tdom_char)


def check_unique_set_leaves(g: Graph, cap: int = 24) -> BoundReport:
    """When the optimal 2TLP set is unique, every leaf belongs to it."""
    optima = enumerate_optimal_sets(g, TOTAL_LIMITED_PACKING, 2, cap)
    if len(optima) != 1:
        return BoundReport(
            UNIQUE_SET_LEAVES, 0, 0, VACUOUS, {"optimal_set_count": len(optima)}
        )
    unique = optima[0]
    leaf_set = leaves(g)
    inside = leaf_set & unique
    witness = {"optimal_set": _sorted(unique), "leaves": _sorted(leaf_set)}
    status = HOLDS if inside == leaf_set else VIOLATED
    return BoundReport(UNIQUE_SET_LEAVES, len(inside), len(leaf_set), status, witness)


def _factor_invariants(g: Graph):
    reduced, iso, _ = remove_isolated(g)
    return {
        "rho": max_limited_packing(reduced, 1, total=False).value,
        "rho_o": max_limited_packing(reduced, 1, total=True).value,
        "l2": max_limited_packing(reduced, 2, total=False).value,
        "l2t": max_limited_packing(reduced, 2, total=True).value,
        "isolated": iso,
    }


def check_product_bounds(
    g: Graph,
    h: Graph,
    kind: str,
    variant: str,
    root: int | None = None,
    cap: int = 24,
) -> list[BoundReport]:
    """Product inequalities with the LHS solved exactly on the built product.

    ``kind`` is cartesian/direct/rooted, ``variant`` is "l2" or "l2t".
    Direct-product right-hand sides apply the isolated-vertex corrections.
    """
    if variant not in ("l2", "l2t"):
        raise ValueError(f"unknown variant {variant!r}")
    if g.n * h.n > cap:
        raise CapExceededError(f"product order {g.n * h.n} above the solver cap {cap}")
    total = variant == "l2t"
    if kind == products.CARTESIAN:
        prod = products.cartesian(g, h)
        lhs = max_limited_packing(prod.graph, 2, total=total).value
        if total:
            rho_g = max_limited_packing(g, 1, total=False).value
            rho_h = max_limited_packing(h, 1, total=False).value
            l2t_g = max_limited_packing(g, 2, total=True).value
            l2t_h = max_limited_packing(h, 2, total=True).value
            rhs = max(l2t_g * rho_h, rho_g * l2t_h)
            witness = {"l2t_g": l2t_g, "l2t_h": l2t_h, "rho_g": rho_g, "rho_h": rho_h}
            return [_ge_report(CARTESIAN_L2T_LOWER, lhs, rhs, witness)]
        l2_g = max_limited_packing(g, 2, total=False).value
        l2_h = max_limited_packing(h, 2, total=False).value
        rhs = min(l2_g * h.n, l2_h * g.n)
        witness = {"l2_g": l2_g, "l2_h": l2_h}
        return [_le_report(CARTESIAN_L2_UPPER, lhs, rhs, witness)]
    if kind == products.DIRECT:
        prod = products.direct(g, h)
        lhs = max_limited_packing(prod.graph, 2, total=total).value
        gv, hv = _factor_invariants(g), _factor_invariants(h)
        correction = (
            gv["isolated"] * h.n + hv["isolated"] * g.n - gv["isolated"] * hv["isolated"]
        )
        if total:
            rhs = max(gv["rho_o"] * hv["l2t"], gv["l2t"] * hv["rho_o"]) + correction
            witness = {"g": gv, "h": hv}
            return [_ge_report(DIRECT_L2T_LOWER, lhs, rhs, witness)]
        rhs = (
            max(
                gv["rho_o"] * hv["l2"],
                gv["l2"] * hv["rho_o"],
                gv["rho"] * hv["l2t"],
                gv["l2t"] * hv["rho"],
            )
            + correction
        )
        witness = {"g": gv, "h": hv}
        return [_ge_report(DIRECT_L2_LOWER, lhs, rhs, witness)]
    if kind == products.ROOTED:
        if root is None:
            raise ValueError("rooted product needs a root")
        if variant != "l2t":
            raise ValueError("the rooted l2 case is the exact-formula audit, not a sandwich")
        prod = products.rooted(g, h, root)
        lhs = max_limited_packing(prod.graph, 2, total=True).value
        l2t_h = max_limited_packing(h, 2, total=True).value
        iso = isolated_count(g)
        witness = {"l2t_h": l2t_h, "isolated_g": iso, "root": root}
        lower = _ge_report(ROOTED_L2T_LOWER, lhs, g.n * (l2t_h - 1) + iso, witness)
        upper = _le_report(ROOTED_L2T_UPPER, lhs, g.n * l2t_h, witness)
        return [lower, upper]
    raise ValueError(f"unknown product kind {kind!r}")


def check_rooted_l2_formula(g: Graph, h: Graph, root: int, cap: int = 24) -> BoundReport:
    """Audit of the exact rooted-product L_2 formula.

    The predicted value depends on whether the root lies in every optimal
    L_2 set of H; the report compares the prediction against the exact
    solver value on the built product (sharp = match, violated = mismatch).
    """
    if g.n * h.n > cap:
        raise CapExceededError(f"product order {g.n * h.n} above the solver cap {cap}")
    h_optima = enumerate_optimal_sets(h, LIMITED_PACKING, 2)
    l2_h = len(h_optima[0]) if h_optima else 0
    root_in_all = all(root in s for s in h_optima)
    if root_in_all:
        l2_g = max_limited_packing(g, 2, total=False).value
        predicted = l2_g + g.n * (l2_h - 1)
        case = "root_in_every_optimum"
    else:
        predicted = g.n * l2_h
        case = "some_optimum_avoids_root"
    prod = products.rooted(g, h, root)
    exact = max_limited_packing(prod.graph, 2, total=False)
    witness = {
        "case": case,
        "root": root,
        "l2_h": l2_h,
        "predicted": predicted,
        "exact_set": _sorted(exact.witness),
    }
    return _eq_report(ROOTED_L2_FORMULA, exact.value, predicted, witness)


def check_chi_bounds(g: Graph, k: int) -> list[BoundReport]:
    """Partition-number invariants: the 2*sqrt(n) sum bound (as integer
    squares), the product bound, and the ceiling(n/k) upper bound."""
    if g.n < 2:
        raise ValueError("partition bounds need at least 2 vertices")
    if k < 1:
        raise ValueError("k must be at least 1")
    chi = partition_number(g, k)
    lk = max_limited_packing(g, k, total=False)
    witness = {
        "chi": chi.value,
        "l_k": lk.value,
        "classes": [_sorted(c) for c in chi.witness.classes],
    }
    total = chi.value + lk.value
    return [
        _ge_report(CHI_SUM, total * total, 4 * g.n, witness),
        _ge_report(CHI_PRODUCT, chi.value * lk.value, g.n, witness),
        _le_report(CHI_CEILING, chi.value, -(-g.n // k), witness),
    ]


def check_corona_chi(g: Graph, h: Graph, cap: int = 24) -> list[BoundReport]:
    """Corona partition range chi(G) .. chi(G)+ceil(|V(H)|/2) plus the
    closed-neighborhood lower bound ceil((max_degree(G)+1+|V(H)|)/2)."""
    order = g.n * (1 + h.n)
    if order > cap:
        raise CapExceededError(f"corona order {order} above the solver cap {cap}")
    chi_g = partition_number(g, 2).value
    prod = products.corona(g, h)
    chi_c = partition_number(prod.graph, 2)
    witness = {
        "chi_g": chi_g,
        "chi_corona": chi_c.value,
        "classes": [_sorted(c) for c in chi_c.witness.classes],
    }
    nbhd = -(-(g.max_degree + 1 + h.n) // 2)
    return [
        _ge_report(CORONA_RANGE_LOWER, chi_c.value, chi_g, witness),
        _le_report(CORONA_RANGE_UPPER, chi_c.value, chi_g + -(-h.n // 2), witness),
        _ge_report(CORONA_NBHD_LOWER, chi_c.value, nbhd, witness),
    ]


def check_known_auxiliary_bounds(g: Graph, k: int) -> list[BoundReport]:
    """Cited inequalities used inside proofs: L_{k,t} <= kn/min_degree,
    L_{k,t} <= k*gamma_t on trees, and open packing = gamma_t on trees.

    Items whose preconditions fail are omitted from the returned list.
    """
    if k < 1:
        raise ValueError("k must be at least 1")
    reports = []
    if g.n >= 1 and g.min_degree >= 1:
        value = _l2t(g, k).value
        rhs = Fraction(k * g.n, g.min_degree)
        reports.append(_le_report(AUX_KN_OVER_DELTA, value, rhs, {"l_kt": value}))
    if is_tree(g) and g.n >= 2:
        value = _l2t(g, k).value
        gamma_t = min_dominating(g, total=True).value
        reports.append(
            _le_report(AUX_K_GAMMA_T, value, k * gamma_t, {"gamma_t": gamma_t})
        )
        rho_o = max_limited_packing(g, 1, total=True).value
        reports.append(
            _eq_report(AUX_RHO_O_GAMMA_T, rho_o, gamma_t, {"open_packing": rho_o})
        )
    return reports
