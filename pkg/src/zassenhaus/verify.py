"""Cross-route verification suites.

Each check computes the same quantity along two independent routes and
compares exactly. The CLI exposes these to users; the test suite asserts
them. Suites: 'roundtrip' (product identity and pipeline relations),
'closedforms' (closed formulas vs the series pipeline), 'finite'
(brute-force matrix groups vs the series predictions).
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import reduce

from . import finite as fin
from .dimensions import (
    dims_table,
    power_sums_free_product_cp,
    w_demushkin_closed,
    w_demushkin_power_sum,
    w_free_closed,
)
from .groupspec import (
    Cyclic,
    Free,
    FreeProduct,
    GroupSpec,
    closed_form,
    hp_series,
    parse_group_spec,
)
from .series import (
    RationalFunction,
    TruncPoly,
    expand_rational,
    product_identity_rhs,
    series_log,
)


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    detail: str = ""


def _ok(name: str) -> CheckResult:
    return CheckResult(name, True)


def _fail(name: str, spec: str, n, expected, got) -> CheckResult:
    return CheckResult(
        name, False, f"spec={spec} n={n} expected={expected} got={got}"
    )


def builtin_specs(p: int) -> list[tuple[str, GroupSpec]]:
    """The catalog of representative expressions exercised by the suites."""
    texts = [
        "free(0)",
        "free(1)",
        "free(2)",
        "free(3)",
        f"cyclic({p})",
        "zp(1)",
        "zp(3)",
        "demushkin(2)",
        "demushkin(3)",
        "demushkin(4)",
        f"cyclic({p}) * cyclic({p})",
        f"cyclic({p}) * cyclic({p}) * cyclic({p})",
        f"cyclic({p}) * free(2)",
        "demushkin(3) * demushkin(4) * free(1)",
        "free(2) x free(2)",
        f"zp(2) x cyclic({p})",
        f"(cyclic({p}) * free(1)) x zp(1)",
    ]
    if p == 2:
        texts += [
            "superpyth(0)",
            "superpyth(2)",
            "superpyth(3)",
            "superpyth(2) x free(1)",
        ]
    return [(t, parse_group_spec(t)) for t in texts]


# -- roundtrip suite -------------------------------------------------------


def roundtrip_checks(p: int = 2, order: int = 20) -> list[CheckResult]:
    """Product identity: rebuilding P from the computed c_n returns P.

    Also re-asserts the arithmetic relations of the pipeline on each table:
    c_n = w_n when gcd(n, p) = 1 and c_n = c_(n/p) + w_n when p | n.
    """
    out = []
    for text, spec in builtin_specs(p):
        table = dims_table(spec, p, order)
        lhs = hp_series(spec, p, order)
        rhs = product_identity_rhs(table.c[1:], p, order)
        name = f"roundtrip: {text}"
        if lhs == rhs:
            out.append(_ok(name))
        else:
            n = next(k for k in range(order + 1) if lhs[k] != rhs[k])
            out.append(_fail(name, text, n, lhs[n], rhs[n]))
            continue
        name = f"pipeline relations: {text}"
        bad = None
        for n in range(1, order + 1):
            if n % p:
                if table.c[n] != table.w[n]:
                    bad = (n, table.w[n], table.c[n])
                    break
            else:
                if table.c[n] != table.c[n // p] + table.w[n]:
                    bad = (n, table.c[n // p] + table.w[n], table.c[n])
                    break
            if table.c[n] < 0:
                bad = (n, ">= 0", table.c[n])
                break
        if bad is None:
            out.append(_ok(name))
        else:
            out.append(_fail(name, text, *bad))
    return out


# -- closed-form suite -----------------------------------------------------


def free_c_closed(d: int, p: int) -> list[int]:
    """c_1..c_5 of the rank-d free group, by the explicit polynomials in d."""
    return [
        d,
        (d * d + d) // 2 if p == 2 else (d * d - d) // 2,
        (d ** 3 + 2 * d) // 3 if p == 3 else (d ** 3 - d) // 3,
        (d ** 4 + d * d + 2 * d) // 4 if p == 2 else (d ** 4 - d * d) // 4,
        (d ** 5 + 4 * d) // 5 if p == 5 else (d ** 5 - d) // 5,
    ]


def demushkin_c_closed(d: int, p: int) -> list[int]:
    """c_1..c_5 of the rank-d Demushkin group, by the explicit polynomials."""
    return [
        d,
        (d * d + d - 2) // 2 if p == 2 else (d * d - d - 2) // 2,
        (d ** 3 - d) // 3 if p == 3 else (d ** 3 - 4 * d) // 3,
        (d ** 4 - 3 * d * d + 2 * d) // 4 if p == 2 else (d ** 4 - 5 * d * d + 4) // 4,
        (d ** 5 - 5 * d ** 3 + 9 * d) // 5 if p == 5 else (d ** 5 - 5 * d ** 3 + 4 * d) // 5,
    ]


def superpyth_c_expected(d: int, order: int) -> list[int]:
    """c_1..c_order for superpyth(d): d+1, then d at powers of 2, else 1."""
    out = [d + 1]
    for n in range(2, order + 1):
        out.append(d if (n & (n - 1)) == 0 else 1)
    return out


def _cyclic_chain(p: int, copies: int) -> GroupSpec:
    return reduce(FreeProduct, [Cyclic(p)] * copies)


def closedform_checks(p: int = 2, order: int = 24) -> list[CheckResult]:
    out = []

    for d in range(1, 6):
        got = list(dims_table(Free(d), p, 5).c[1:])
        want = free_c_closed(d, p)
        name = f"free({d}) c_1..c_5 closed forms, p={p}"
        if got == want:
            out.append(_ok(name))
        else:
            n = next(k for k in range(5) if got[k] != want[k]) + 1
            out.append(_fail(name, f"free({d})", n, want[n - 1], got[n - 1]))

    for d in range(2, 7):
        got = list(dims_table(parse_group_spec(f"demushkin({d})"), p, 5).c[1:])
        want = demushkin_c_closed(d, p)
        name = f"demushkin({d}) c_1..c_5 closed forms, p={p}"
        if got == want:
            out.append(_ok(name))
        else:
            n = next(k for k in range(5) if got[k] != want[k]) + 1
            out.append(_fail(name, f"demushkin({d})", n, want[n - 1], got[n - 1]))

    for text, spec in builtin_specs(p):
        recipe = closed_form(spec, p)
        name = f"closed form expands to series: {text}"
        if recipe.is_rational:
            lhs = expand_rational(recipe.rational, order)
            rhs = hp_series(spec, p, order)
            if lhs == rhs:
                out.append(_ok(name))
            else:
                n = next(k for k in range(order + 1) if lhs[k] != rhs[k])
                out.append(_fail(name, text, n, rhs[n], lhs[n]))
        else:
            ok = bool(recipe.product_form)
            out.append(
                _ok(name) if ok else _fail(name, text, "-", "product form", "missing")
            )

    for d in range(1, 4):
        table = dims_table(Free(d), p, order)
        name = f"necklace counts match free({d}) exponents, p={p}"
        bad = next(
            (n for n in range(1, order + 1) if table.w[n] != w_free_closed(d, n)),
            None,
        )
        if bad is None:
            out.append(_ok(name))
        else:
            out.append(_fail(name, f"free({d})", bad, w_free_closed(d, bad), table.w[bad]))

    for d in range(2, 6):
        table = dims_table(parse_group_spec(f"demushkin({d})"), p, order)
        name = f"demushkin({d}) exponents: binomial = power sums = pipeline, p={p}"
        bad = None
        for n in range(1, order + 1):
            closed = w_demushkin_closed(d, n)
            if closed != w_demushkin_power_sum(d, n) or closed != table.w[n]:
                bad = (n, closed, (w_demushkin_power_sum(d, n), table.w[n]))
                break
        out.append(_ok(name) if bad is None else _fail(name, f"demushkin({d})", *bad))

    if p == 2:
        for d in range(0, 6):
            spec = parse_group_spec(f"superpyth({d})")
            table = dims_table(spec, 2, 20)
            want = superpyth_c_expected(d, 20)
            name = f"superpyth({d}) dimension pattern"
            if list(table.c[1:]) == want:
                out.append(_ok(name))
            else:
                n = next(k for k in range(20) if table.c[k + 1] != want[k]) + 1
                out.append(_fail(name, f"superpyth({d})", n, want[n - 1], table.c[n]))
            name = f"superpyth({d}) product form rebuilds the series"
            lhs = product_identity_rhs(want, 2, 20)
            rhs = hp_series(spec, 2, 20)
            if lhs == rhs:
                out.append(_ok(name))
            else:
                n = next(k for k in range(21) if lhs[k] != rhs[k])
                out.append(_fail(name, f"superpyth({d})", n, rhs[n], lhs[n]))

        for d in range(1, 6):
            chain = _cyclic_chain(2, d + 1)
            t_chain = dims_table(chain, 2, order)
            t_free = dims_table(Free(d), 2, order)
            name = f"{d + 1} involution factors vs free({d})"
            if t_chain.c[1] != t_free.c[1] + 1:
                out.append(_fail(name, "c_1", 1, t_free.c[1] + 1, t_chain.c[1]))
            else:
                bad = next(
                    (n for n in range(2, order + 1) if t_chain.c[n] != t_free.c[n]),
                    None,
                )
                if bad is None:
                    out.append(_ok(name))
                else:
                    out.append(_fail(name, f"free({d})", bad, t_free.c[bad], t_chain.c[bad]))
            name = f"exponent defect pattern, rank {d}"
            want_eps = [-1, 1] + [0] * (order - 2)
            got_eps = [t_free.w[n] - t_chain.w[n] for n in range(1, order + 1)]
            if got_eps == want_eps:
                out.append(_ok(name))
            else:
                n = next(k for k in range(order) if got_eps[k] != want_eps[k]) + 1
                out.append(_fail(name, f"free({d})", n, want_eps[n - 1], got_eps[n - 1]))

    for d in range(0, 5):
        name = f"power sums: multinomial vs Newton route, d={d}, p={p}"
        f_poly = TruncPoly([1] + [-d] * p)
        logs = series_log(expand_rational(RationalFunction([1], f_poly), 15))
        bad = None
        for n in range(1, 16):
            newton = logs[n] * n
            multi = power_sums_free_product_cp(d, p, n)
            if newton != multi:
                bad = (n, newton, multi)
                break
        out.append(_ok(name) if bad is None else _fail(name, f"d={d}", *bad))

    return out


# -- finite oracle suite ---------------------------------------------------


def _jl_polynomial(c: list[int], p: int) -> TruncPoly:
    """prod_n (1 + t^n + ... + t^(n(p-1)))^(c_n), as an exact polynomial."""
    poly = TruncPoly([1])
    for n, cn in enumerate(c, start=1):
        if cn:
            step = TruncPoly([1 if k % n == 0 else 0 for k in range(n * (p - 1) + 1)])
            poly = poly * step ** cn
    return poly


def _dims_until_trivial(result: fin.FiltrationResult) -> list[int]:
    dims = list(result.dims)
    while dims and dims[-1] == 0:
        dims.pop()
    return dims


def _check_jl_finite(name: str, group: fin.FiniteGroup, depth: int) -> list[CheckResult]:
    """Group algebra filtration vs the polynomial built from subgroup dims."""
    filt = fin.zassenhaus_filtration_finite(group, depth)
    if len(filt.subgroups[-1]) != 1:
        return [CheckResult(name, False, f"filtration not exhausted at depth {depth}")]
    c = _dims_until_trivial(filt)
    poly = _jl_polynomial(c, group.p)
    degree = poly.degree
    a = fin.group_algebra_aug_dims(group, degree + 1)
    want = [poly[k] for k in range(degree + 2)]
    if a == want and sum(a) == group.order:
        return [_ok(name)]
    n = next(k for k in range(degree + 2) if a[k] != want[k])
    return [_fail(name, name, n, want[n], a[n])]


def finite_checks(include_slow: bool = False) -> list[CheckResult]:
    out = []

    # central series landing: dim G_(n) / G_(n+1) = 1 and G_(n+1) = 1
    # for the full unitriangular group on n+1 points
    for n in (2, 3, 4):
        group = fin.unitriangular_group(n + 1, 2)
        filt = fin.zassenhaus_filtration_finite(group, n + 1)
        name = f"unitriangular({n + 1}, 2): last nontrivial layer at degree {n}"
        if filt.dims[n - 1] == 1 and len(filt.subgroups[n]) == 1:
            out.append(_ok(name))
        else:
            out.append(
                _fail(name, name, n, "(1, trivial)",
                      (filt.dims[n - 1], len(filt.subgroups[n])))
            )

    if include_slow:
        group = fin.unitriangular_group(6, 2)
        filt = fin.zassenhaus_filtration_finite(group, 6)
        name = "unitriangular(6, 2): last nontrivial layer at degree 5"
        if filt.dims[4] == 1 and len(filt.subgroups[5]) == 1:
            out.append(_ok(name))
        else:
            out.append(_fail(name, name, 5, "(1, trivial)",
                             (filt.dims[4], len(filt.subgroups[5]))))

    # cyclic groups collapse immediately
    for p in (2, 3, 5):
        group = fin.cyclic_group(p)
        filt = fin.zassenhaus_filtration_finite(group, 4)
        name = f"cyclic({p}) filtration is [1, 0, 0, ...]"
        if filt.dims == (1, 0, 0, 0):
            out.append(_ok(name))
        else:
            out.append(_fail(name, name, "-", (1, 0, 0, 0), filt.dims))

    # group algebra dimensions match the polynomial from the filtration
    cases = [
        ("group algebra vs filtration: cyclic(2)", fin.cyclic_group(2), 3),
        ("group algebra vs filtration: cyclic(3)", fin.cyclic_group(3), 3),
        (
            "group algebra vs filtration: cyclic(2) x cyclic(2)",
            fin.direct_product(fin.cyclic_group(2), fin.cyclic_group(2)),
            3,
        ),
        (
            "group algebra vs filtration: unitriangular(3, 2)",
            fin.unitriangular_group(3, 2),
            4,
        ),
        (
            "group algebra vs filtration: unitriangular(3, 3)",
            fin.unitriangular_group(3, 3),
            4,
        ),
    ]
    for name, group, depth in cases:
        out.extend(_check_jl_finite(name, group, depth))

    # every filtration member must be normal
    for label, group, depth in [
        ("unitriangular(3, 2)", fin.unitriangular_group(3, 2), 4),
        ("unitriangular(4, 2)", fin.unitriangular_group(4, 2), 5),
        ("unitriangular(3, 3)", fin.unitriangular_group(3, 3), 4),
    ]:
        filt = fin.zassenhaus_filtration_finite(group, depth)
        name = f"normality audit: {label}"
        bad = None
        everyone = list(range(group.order))
        for i, sub in enumerate(filt.subgroups):
            conj = group.conjugates(everyone, sorted(sub))
            if not set(int(x) for x in conj) <= sub:
                bad = i + 1
                break
        out.append(
            _ok(name) if bad is None else
            CheckResult(name, False, f"degree {bad} member is not normal")
        )

    # direct products add dimensions layerwise
    f1 = fin.unitriangular_group(2, 2)
    f2 = fin.unitriangular_group(3, 2)
    prod = fin.direct_product(f1, f2)
    d1 = fin.zassenhaus_filtration_finite(f1, 4).dims
    d2 = fin.zassenhaus_filtration_finite(f2, 4).dims
    dp = fin.zassenhaus_filtration_finite(prod, 4).dims
    name = "direct product adds layer dimensions"
    if dp == tuple(x + y for x, y in zip(d1, d2)):
        out.append(_ok(name))
    else:
        out.append(_fail(name, name, "-", tuple(x + y for x, y in zip(d1, d2)), dp))

    return out


def all_checks(p: int = 2, order: int = 20, include_slow: bool = False) -> list[CheckResult]:
    return (
        roundtrip_checks(p, order)
        + closedform_checks(p, order)
        + finite_checks(include_slow)
    )
