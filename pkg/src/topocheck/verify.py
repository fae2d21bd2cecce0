"""Exhaustive verification suites over small enumerated spaces.

Each check returns a :class:`CheckResult`; failures carry the first
counterexample in enumeration order.
"""

from __future__ import annotations

from itertools import product as cartesian

from .core import FiniteSpace, _box, indiscrete, product, subspace, sum_spaces
from .enumeration import sharded_map, spaces, spaces_up_to
from .fixtures import E, I2, I3_ABC, example_mixed_product, example_product
from .maps import all_maps, hsg_preimage_failure, map_classify, preimage_table
from .pointset import PointSet, bits_of
from .report import CheckResult
from .search import search
from .setclasses import (
    is_beta_open_by_regular_closed,
    semi_closure,
    tables,
)
from .spaceprops import (
    is_dense_in_itself,
    is_hyperconnected,
    is_locally_indiscrete,
    is_semi_hausdorff,
    is_strongly_irresolvable,
    is_t_d,
    beta_subset_of_sg,
    locally_indiscrete_by_opens,
    locally_indiscrete_by_sg_open,
    locally_indiscrete_by_singletons,
    t_d_paper,
)
from .tailspace import verify_e1, verify_r1_growth

SUBSET_SUITE_MAX = 4
PAIR_SUITE_MAX = 3


def _where(sp: FiniteSpace, a: int | None = None, extra: str = "") -> str:
    text = sp.canonical_text()
    if a is not None:
        text += f" set={sp.format_set(a)}"
    return text + (f" {extra}" if extra else "")


def _scan(name, spaces_iter, test, detail=""):
    """Run ``test(sp)`` (returning None or a counterexample string) over spaces."""
    count = 0
    for sp in spaces_iter:
        bad = test(sp)
        if bad is not None:
            return CheckResult(name, False, counterexample=bad)
        count += 1
    return CheckResult(name, True, detail or f"{count} spaces")


# ---------------------------------------------------------------- lemmas


def _small():
    return spaces_up_to(SUBSET_SUITE_MAX)


def _dichotomy(sp):
    t = tables(sp)
    for p in range(sp.n):
        s = 1 << p
        if t.nowhere_dense[s] == t.preopen[s]:
            return _where(sp, s)
    return None


def _locally_indiscrete_routes(sp):
    routes = (
        locally_indiscrete_by_opens(sp),
        locally_indiscrete_by_singletons(sp),
        locally_indiscrete_by_sg_open(sp),
    )
    return None if len(set(routes)) == 1 else _where(sp, extra=f"routes={routes}")


def _hsg_criterion(sp):
    t = tables(sp)
    for a, (crit, defn) in enumerate(zip(t.hsg_closed, t.hsg_closed_definitional)):
        if crit != defn:
            return _where(sp, a)
    return None


def _sg_duality(sp):
    t = tables(sp)
    for a in range(1 << sp.n):
        if t.sg_closed[a] != t.sg_open[t.full ^ a]:
            return _where(sp, a)
    return None


def _g_duality(sp):
    t = tables(sp)
    for a in range(1 << sp.n):
        if t.g_open[a] != t.g_closed[t.full ^ a]:
            return _where(sp, a)
    return None


def _nd_implies_hsg(sp):
    t = tables(sp)
    for a in range(1 << sp.n):
        if t.nowhere_dense[a] and not t.hsg_closed[a]:
            return _where(sp, a)
    return None


def _class_implications(sp):
    t = tables(sp)
    for a in range(1 << sp.n):
        if (
            (t.open[a] and not t.semi_open[a])
            or (t.semi_open[a] and not t.sg_open[a])
            or ((t.semi_open[a] or t.preopen[a]) and not t.beta_open[a])
            or (t.regular_open[a] and not t.open[a])
        ):
            return _where(sp, a)
    return None


def _operator_laws(sp):
    t = tables(sp)
    full = t.full
    for a in range(1 << sp.n):
        i, c = t.int[a], t.cl[a]
        union_of_opens = 0
        meet_of_opens = full
        for u in sp.open_masks:
            if u & ~a == 0:
                union_of_opens |= u
            if a & ~u == 0:
                meet_of_opens &= u
        ok = (
            i & ~a == 0
            and a & ~c == 0
            and t.int[i] == i
            and t.cl[c] == c
            and c == full ^ t.int[full ^ a]
            and i == union_of_opens == sp.int_mask(a)
            and c == sp.cl_mask(a)
            and t.ker[a] == meet_of_opens == sp.ker_mask(a)
            and a & ~t.ker[a] == 0
        )
        if not ok:
            return _where(sp, a)
    return None


def _semi_operator_laws(sp):
    t = tables(sp)
    for a in range(1 << sp.n):
        sint, scl, cl = t.sint[a], t.scl[a], t.cl[a]
        ok = (
            sint & ~a == 0
            and a & ~scl == 0
            and scl & ~cl == 0
            and t.int[a] & ~sint == 0
            and t.scl[scl] == scl
            and t.semi_open[sint]
        )
        if not ok:
            return _where(sp, a)
    family = [a for a, ok in enumerate(t.semi_open) if ok]
    for u in family:
        for v in family:
            if not t.semi_open[u | v]:
                return _where(sp, u, f"union with {sp.format_set(v)}")
    return None


def _beta_routes(sp):
    t = tables(sp)
    for a in range(1 << sp.n):
        if t.beta_open[a] != is_beta_open_by_regular_closed(sp, PointSet(sp.n, a)):
            return _where(sp, a)
    return None


def _semi_hausdorff_not_hyperconnected(sp):
    if sp.n >= 2 and is_semi_hausdorff(sp) and is_hyperconnected(sp):
        return _where(sp)
    return None


def _sum_beta_sg() -> CheckResult:
    small = spaces_up_to(PAIR_SUITE_MAX)
    left = [sp for sp in small if is_locally_indiscrete(sp)]
    right = [sp for sp in small if is_strongly_irresolvable(sp)]
    count = 0
    for li, si in cartesian(left, right):
        total, _ = sum_spaces([li, si])
        if not beta_subset_of_sg(total):
            return CheckResult("sum-beta-open-sg-open", False, counterexample=_where(total))
        count += 1
    return CheckResult("sum-beta-open-sg-open", True, f"{count} sums")


def _hsg_converse_witness() -> CheckResult:
    found = [
        w for w in search(2, quest="hsg-not-nowhere-dense") if w.space == I2 and w.space.n == 2
    ]
    ok = any(w.subset.bits in (0b01, 0b10) for w in found)
    return CheckResult(
        "hsg-not-nowhere-dense-witness", ok, "found in the two-point indiscrete space" if ok else ""
    )


def _sum_subspace_roundtrip() -> CheckResult:
    small = spaces_up_to(2)
    for x, y in cartesian(small, small):
        total, inj = sum_spaces([x, y])
        for part, f in zip((x, y), inj):
            carrier = PointSet.of(total.n, f.assign)
            if subspace(total, carrier) != part:
                return CheckResult("sum-subspace-roundtrip", False, counterexample=_where(total))
    return CheckResult("sum-subspace-roundtrip", True, f"{len(small) ** 2} sums")


def lemma_checks() -> list[CheckResult]:
    small = _small()
    detail = f"{len(small)} spaces on <= {SUBSET_SUITE_MAX} points, all subsets"
    return [
        _scan("operator-laws", small, _operator_laws, detail),
        _scan("semi-operator-laws", small, _semi_operator_laws, detail),
        _scan("singleton-dichotomy", small, _dichotomy, detail),
        _scan("locally-indiscrete-equivalence", small, _locally_indiscrete_routes, detail),
        _scan("hsg-criterion", small, _hsg_criterion, detail),
        _scan("sg-duality", small, _sg_duality, detail),
        _scan("g-duality", small, _g_duality, detail),
        _scan("nowhere-dense-implies-hsg", small, _nd_implies_hsg, detail),
        _hsg_converse_witness(),
        _scan("class-implications", small, _class_implications, detail),
        _scan("beta-open-routes", spaces_up_to(3), _beta_routes),
        _scan(
            "semi-hausdorff-not-hyperconnected",
            spaces_up_to(SUBSET_SUITE_MAX, 2),
            _semi_hausdorff_not_hyperconnected,
        ),
        _sum_beta_sg(),
        _sum_subspace_roundtrip(),
    ]


# -------------------------------------------------------------- products


def _pairs():
    small = spaces_up_to(PAIR_SUITE_MAX)
    return list(cartesian(small, small))


def _box_check(name: str, flag: str) -> CheckResult:
    count = 0
    for x, y in _pairs():
        prod, _ = product([x, y])
        tx, ty, tp = tables(x), tables(y), tables(prod)
        fx, fy, fp = getattr(tx, flag), getattr(ty, flag), getattr(tp, flag)
        for a in range(1, 1 << x.n):
            for b in range(1, 1 << y.n):
                box = _box([x.n, y.n], [a, b])
                if fp[box] != (fx[a] and fy[b]):
                    return CheckResult(
                        name, False, counterexample=_where(prod, box, "box")
                    )
                count += 1
    return CheckResult(name, True, f"{count} boxes")


def _indiscrete_factor_checks() -> list[CheckResult]:
    formula_bad = transfer_bad = None
    count = 0
    for x in spaces_up_to(PAIR_SUITE_MAX):
        tx = tables(x)
        for m in range(1, PAIR_SUITE_MAX + 1):
            y = indiscrete(m)
            prod, (p, _) = product([x, y])
            tp = tables(prod)
            img = [0] * (1 << prod.n)
            for a in range(1, 1 << prod.n):
                low = a & -a
                img[a] = img[a ^ low] | 1 << p.assign[low.bit_length() - 1]
            for a in range(1 << prod.n):
                expected = _box([x.n, m], [tx.int_cl[img[a]], (1 << m) - 1])
                if formula_bad is None and tp.int_cl[a] != expected:
                    formula_bad = _where(prod, a)
                if transfer_bad is None and tp.hsg_closed[a] != tx.hsg_closed[img[a]]:
                    transfer_bad = _where(prod, a)
                count += 1
    detail = f"{count} subsets"
    return [
        CheckResult("indiscrete-factor-int-cl", formula_bad is None, detail, formula_bad),
        CheckResult("indiscrete-factor-hsg-transfer", transfer_bad is None, detail, transfer_bad),
    ]


def _projection_basics() -> CheckResult:
    count = 0
    for x, y in _pairs():
        prod, projections = product([x, y])
        for p in projections:
            r = map_classify(p)
            if not (r.surjective and r.continuous and r.open):
                return CheckResult(
                    "projections-open-continuous-surjective", False, counterexample=_where(prod)
                )
            count += 1
    return CheckResult("projections-open-continuous-surjective", True, f"{count} projections")


def example_product_checks() -> list[CheckResult]:
    a = E.pointset("bc").bits
    sq, (p, _) = example_product()
    t_e, t_sq = tables(E), tables(sq)
    aa = _box([3, 3], [a, a])
    off_diag = sq.index("(a,c)")
    ok_i = (
        t_e.sg_closed[a]
        and not t_sq.sg_closed[aa]
        and t_sq.scl[aa] == t_sq.full
        and aa & (1 << off_diag) == 0
        and t_sq.semi_open[t_sq.full ^ (1 << off_diag)]
    )
    pre = preimage_table(p)[a]
    ok_ii = (
        pre == _box([3, 3], [a, 0b111])
        and not t_sq.sg_closed[pre]
        and not map_classify(p).sg_irresolute
    )
    mixed, (q, _) = example_mixed_product()
    s = I3_ABC.pointset("ab").bits
    q_pre = preimage_table(q)[s]
    ok_iii = tables(I3_ABC).hsg_closed[s] and not tables(mixed).hsg_closed[q_pre]
    ok_iii = ok_iii and tables(I3_ABC).hsg_closed_definitional[s]
    ok_iii = ok_iii and not tables(mixed).hsg_closed_definitional[q_pre]
    return [
        CheckResult(
            "product-square-not-sg-closed",
            ok_i,
            f"scl(AxA) = {sq.format_set(t_sq.scl[aa])}",
        ),
        CheckResult(
            "projection-preimage-not-sg-closed",
            ok_ii,
            f"p^-1(A) = {sq.format_set(pre)}",
        ),
        CheckResult(
            "projection-preimage-not-hsg-closed",
            ok_iii,
            f"q^-1(S) = {mixed.format_set(q_pre)}",
        ),
    ]


def product_checks() -> list[CheckResult]:
    return [
        *example_product_checks(),
        _box_check("box-semi-open-componentwise", "semi_open"),
        _box_check("box-preopen-componentwise", "preopen"),
        *_indiscrete_factor_checks(),
        _projection_basics(),
    ]


# ------------------------------------------------------------------ maps

MAP_IMPLICATIONS = (
    "open-continuous-surjective-pre-semi-open",
    "open-continuous-delta-open",
    "hsg-preimage-preservation",
    "dense-in-itself-t-d-anti-delta-open",
)


def _map_shard(i: int) -> dict:
    """Scan every map out of the i-th three-point space."""
    x = spaces(3)[i]
    first_bad: dict[str, str] = {}
    hypothesis_hits = dict.fromkeys(MAP_IMPLICATIONS, 0)
    gloss_refuted = None
    for y in spaces(3):
        y_dense_td = is_dense_in_itself(y) and is_t_d(y)
        y_dense_gloss = is_dense_in_itself(y) and t_d_paper(y)
        for f in all_maps(x, y):
            r = map_classify(f)
            cases = (
                (r.open and r.continuous and r.surjective, r.pre_semi_open),
                (r.open and r.continuous, r.delta_open),
                (
                    r.almost_open and r.continuous and r.anti_delta_open and r.surjective,
                    None,
                ),
                (y_dense_td, r.anti_delta_open),
            )
            for name, (hyp, concl) in zip(MAP_IMPLICATIONS, cases):
                if not hyp:
                    continue
                hypothesis_hits[name] += 1
                if concl is None:
                    concl = hsg_preimage_failure(f) is None
                if not concl and name not in first_bad:
                    first_bad[name] = f"{x.canonical_text()} -> {y.canonical_text()} map={f.assign}"
            if gloss_refuted is None and y_dense_gloss and not r.anti_delta_open:
                gloss_refuted = f"{x.canonical_text()} -> {y.canonical_text()} map={f.assign}"
    return {"bad": first_bad, "hits": hypothesis_hits, "gloss": gloss_refuted}


def _projection_resolution_checks() -> list[CheckResult]:
    irresolute_bad = None
    not_sg = 0
    count = 0
    for x, y in _pairs():
        prod, projections = product([x, y])
        for p in projections:
            r = map_classify(p)
            if irresolute_bad is None and not (r.irresolute and r.gs_irresolute):
                irresolute_bad = _where(prod)
            not_sg += not r.sg_irresolute
            count += 1
    sq, (p_e, _) = example_product()
    example_fails = not map_classify(p_e).sg_irresolute
    return [
        CheckResult(
            "projections-irresolute-gs-irresolute",
            irresolute_bad is None,
            f"{count} projections",
            irresolute_bad,
        ),
        CheckResult(
            "projection-not-sg-irresolute-exists",
            not_sg > 0 and example_fails,
            f"{not_sg} of {count} projections fail sg-irresolute, E x E -> E among them",
        ),
    ]


def map_checks(workers: int | None = None) -> list[CheckResult]:
    shards = sharded_map(_map_shard, list(range(len(spaces(3)))), workers)
    out = []
    for name in MAP_IMPLICATIONS:
        bad = next((s["bad"][name] for s in shards if name in s["bad"]), None)
        hits = sum(s["hits"][name] for s in shards)
        out.append(CheckResult(f"map-{name}", bad is None, f"{hits} maps meet the hypothesis", bad))
    gloss = next((s["gloss"] for s in shards if s["gloss"]), None)
    # With "T_D" read as "singletons are locally dense" the anti-delta-open
    # claim fails; this check passes when a counterexample is found.
    out.append(
        CheckResult(
            "map-locally-dense-reading-refuted",
            gloss is not None,
            counterexample=gloss,
        )
    )
    out.extend(_projection_resolution_checks())
    return out


SUITES = ("lemmas", "products", "maps", "e1", "r1")


def verify_suite(suites=("lemmas", "products", "maps"), workers: int | None = None):
    """Run the named suites in a fixed order and return every result."""
    if isinstance(suites, str):
        suites = SUITES if suites == "all" else (suites,)
    unknown = set(suites) - set(SUITES)
    if unknown:
        raise ValueError(f"unknown suite {sorted(unknown)[0]!r}")
    runners = {
        "lemmas": lemma_checks,
        "products": product_checks,
        "maps": lambda: map_checks(workers),
        "e1": verify_e1,
        "r1": verify_r1_growth,
    }
    results = []
    for name in SUITES:
        if name in suites:
            results.extend(runners[name]())
    return results
