"""
Exhaustive verification sweep: every closed formula against an independent
computation, for every Hessenberg function up to a given size.

Each check yields a ``CheckResult`` whose status is ``passed``, ``failed`` or
``skipped``. Linear-algebra checks that would exceed the matrix budget are
skipped, never counted as passed.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from math import comb, factorial

from .betti import (
    b2_closed_form,
    betti_low_degree,
    component_count,
    flag_poincare,
    poincare_bruteforce,
    poincare_inductive,
)
from .classes import all_classes, verify_relation_suite
from .cohomology import (
    DEFAULT_LA_BUDGET,
    GradedCohomology,
    h2_presentation,
    h2d_presentation,
    span_check,
    verify_h2_presentation,
    verify_h2d_presentation,
)
from .combinatorics import (
    DEFAULT_CAP_N,
    HessenbergFunction,
    Partition,
    enumerate_group,
    h_inversions,
    hessenberg_functions,
    inversions,
    l_set,
    reduce,
)
from .errors import BudgetExceeded, CapExceeded
from .gkm import build_graph, check_gkm, connected_components
from .rep import (
    ModuleDecomposition,
    beta_formula,
    decompose,
    dot_action_character,
    h2d_decomposition_formula,
)

PASSED, FAILED, SKIPPED = "passed", "failed", "skipped"
DEFAULT_CLASS_MAX_N = 5


@dataclass
class CheckResult:
    h: str
    check: str
    status: str
    expected: object = None
    got: object = None
    detail: str = ""

    def to_json(self) -> dict:
        return {k: v for k, v in asdict(self).items() if v not in (None, "")}


@dataclass
class SweepConfig:
    max_n: int
    degrees: tuple[int, ...] = ()
    cap: int = DEFAULT_CAP_N
    budget: int = DEFAULT_LA_BUDGET
    class_max_n: int = DEFAULT_CLASS_MAX_N
    lemma_max_d: int | None = None


def _result(h, check, ok, expected=None, got=None, detail="") -> CheckResult:
    return CheckResult(str(h), check, PASSED if ok else FAILED, expected, got, detail)


def _skip(h, check, reason) -> CheckResult:
    return CheckResult(str(h), check, SKIPPED, detail=reason)


# -- individual checks -------------------------------------------------------

def check_poincare(h: HessenbergFunction, cap: int = DEFAULT_CAP_N) -> CheckResult:
    ind = poincare_inductive(h)
    brute = poincare_bruteforce(h, cap)
    problems = []
    if ind != brute:
        problems.append("inductive and brute-force polynomials differ")
    if brute.total() != factorial(h.n):
        problems.append(f"total mass {brute.total()} is not {h.n}!")
    if h.is_connected() and not brute.is_palindromic():
        problems.append("not palindromic")
    return _result(h, "poincare", not problems, list(brute.coefficients), list(ind.coefficients),
                   "; ".join(problems))


def check_b2(h: HessenbergFunction, cap: int = DEFAULT_CAP_N) -> CheckResult:
    if not h.is_connected():
        return _skip(h, "b2_closed_form", "not applicable: disconnected")
    brute = poincare_bruteforce(h, cap)[1]
    closed = b2_closed_form(h)
    return _result(h, "b2_closed_form", closed == brute, brute, closed)


def check_connectivity(h: HessenbergFunction, cap: int = DEFAULT_CAP_N) -> CheckResult:
    comps = len(connected_components(build_graph(h, cap)))
    expected = component_count(h)
    ok = comps == expected and (comps == 1) == h.is_connected()
    return _result(h, "connectivity", ok, expected, comps)


def check_reduced_components(h: HessenbergFunction, cap: int = DEFAULT_CAP_N) -> list[CheckResult]:
    """For ``j`` in L(h), the graph of ``h^j`` has ``binom(n-1, j-1)`` components.

    The count is a statement about connected ``h``; for disconnected ``h`` the
    fixed points of ``h`` cut the reduced graph further.
    """
    if not h.is_connected():
        return [_skip(h, "reduced_components", "not applicable: disconnected")]
    out = []
    for j in sorted(l_set(h)):
        comps = len(connected_components(build_graph(reduce(h, j), cap)))
        out.append(_result(h, "reduced_components", comps == comb(h.n - 1, j - 1),
                           comb(h.n - 1, j - 1), comps, f"j={j}"))
    return out


def check_inversion_lemma(h: HessenbergFunction, max_d: int | None = None,
                          cap: int = DEFAULT_CAP_N) -> CheckResult:
    """Under ``h(j) >= j + d``: ``l_h(w) < d`` or ``l(w) < d`` forces ``l_h(w) = l(w)``."""
    degrees = [d for d in range(1, (max_d or h.n - 1) + 1) if h.satisfies_gap(d)]
    if not degrees:
        return _skip(h, "inversion_lemma", "not applicable: no d satisfies the gap condition")
    for w in enumerate_group(h.n, cap):
        lh, l = h_inversions(h, w), inversions(w)
        for d in degrees:
            if (lh < d or l < d) and lh != l:
                return _result(h, "inversion_lemma", False, l, lh, f"w={w}, d={d}")
    return _result(h, "inversion_lemma", True, detail=f"d in {degrees}")


def check_class_membership(h: HessenbergFunction) -> CheckResult:
    g = build_graph(h)
    for name, f in all_classes(h).items():
        if not check_gkm(f, g):
            return _result(h, "gkm_membership", False, detail=name)
    return _result(h, "gkm_membership", True)


def check_relations(h: HessenbergFunction) -> CheckResult:
    if not h.is_connected():
        return _skip(h, "relations", "not applicable: disconnected")
    bad = [r for r in verify_relation_suite(h) if not r.passed]
    if bad:
        return _result(h, "relations", False, detail=f"{bad[0].relation} {bad[0].params}")
    return _result(h, "relations", True)


def check_h2(h: HessenbergFunction, budget: int, coh: GradedCohomology) -> list[CheckResult]:
    if not h.is_connected():
        return [_skip(h, "h2_presentation", "not applicable: disconnected")]
    b2 = b2_closed_form(h)
    pres = h2_presentation(h)
    formula = beta_formula(h)
    out = [
        _result(h, "h2_presentation", pres.rank == b2, b2, pres.rank),
        _result(h, "beta_formula_dimension", formula.dimension() == b2, b2, formula.dimension()),
    ]
    try:
        ver = verify_h2_presentation(h, budget, coh)
        if ver.graph_dimension is None:
            raise BudgetExceeded("degree-1 system")
        out.append(_result(h, "h2_linear_algebra", ver.passed, ver.presentation_rank,
                           ver.quotient_rank, "" if ver.passed else str(ver)))
        spans = span_check(h, 1, budget, coh)
        out.append(_result(h, "h2_span", all(s.passed for s in spans),
                           [s.expected for s in spans], [s.computed for s in spans]))
        got = decompose(dot_action_character(h, 1, budget, coh))
        out.append(_result(h, "h2_character", got == formula, str(formula), str(got)))
    except BudgetExceeded as exc:
        for name in ("h2_linear_algebra", "h2_span", "h2_character"):
            out.append(_skip(h, name, f"over budget: {exc}"))
    return out


def check_degree(h: HessenbergFunction, d: int, cfg: SweepConfig,
                 coh: GradedCohomology) -> list[CheckResult]:
    tag = f"d={d}"
    if not h.satisfies_gap(d):
        return []
    brute = poincare_bruteforce(h, cfg.cap)
    prefix = tuple(brute[p] for p in range(d + 1))
    low = betti_low_degree(h, d)
    pres = h2d_presentation(h, d)
    formula = h2d_decomposition_formula(h, d)
    out = [
        _result(h, "betti_low_degree", low == prefix, list(prefix), list(low), tag),
        _result(h, "h2d_presentation", pres.rank == brute[d], brute[d], pres.rank, tag),
        _result(h, "h2d_formula_dimension", formula.dimension() == brute[d] and formula.is_nonnegative(),
                brute[d], formula.dimension(), tag),
    ]
    names = ("h2d_linear_algebra", "h2d_span", "h2d_character", "low_degree_triviality")
    try:
        ver = verify_h2d_presentation(h, d, cfg.budget, coh)
        out.append(_result(h, names[0], ver.passed, pres.rank, ver.quotient_ranks[d], tag))
        spans = span_check(h, d, cfg.budget, coh)
        out.append(_result(h, names[1], all(s.passed for s in spans),
                           [s.expected for s in spans], [s.computed for s in spans], tag))
        got = decompose(dot_action_character(h, d, cfg.budget, coh))
        out.append(_result(h, names[2], got == formula, str(formula), str(got), tag))
        flag = flag_poincare(h.n)
        trivial_ok = True
        for p in range(1, d):
            want = ModuleDecomposition(h.n, {Partition((h.n,)): flag[p]})
            got_p = decompose(dot_action_character(h, p, cfg.budget, coh))
            if got_p != want:
                out.append(_result(h, names[3], False, str(want), str(got_p), f"{tag}, p={p}"))
                trivial_ok = False
        if trivial_ok:
            out.append(_result(h, names[3], True, detail=tag))
    except BudgetExceeded as exc:
        done = {r.check for r in out}
        for name in names:
            if name not in done:
                out.append(_skip(h, name, f"{tag}, over budget: {exc}"))
    return out


def checks_for(h: HessenbergFunction, cfg: SweepConfig) -> list[CheckResult]:
    out = [check_poincare(h, cfg.cap), check_b2(h, cfg.cap), check_connectivity(h, cfg.cap)]
    out.extend(check_reduced_components(h, cfg.cap))
    out.append(check_inversion_lemma(h, cfg.lemma_max_d, cfg.cap))
    if h.n <= cfg.class_max_n:
        out.append(check_class_membership(h))
        out.append(check_relations(h))
    else:
        reason = f"class sweep limited to n <= {cfg.class_max_n}"
        out += [_skip(h, "gkm_membership", reason), _skip(h, "relations", reason)]
    coh = GradedCohomology(h, cfg.budget)
    out.extend(check_h2(h, cfg.budget, coh))
    for d in cfg.degrees:
        if d >= 2:
            out.extend(check_degree(h, d, cfg, coh))
    return out


# -- the sweep ---------------------------------------------------------------

@dataclass
class SweepSummary:
    config: SweepConfig
    functions: int
    results: list[CheckResult] = field(default_factory=list)
    sizes: dict[int, int] = field(default_factory=dict)

    def count(self, status: str) -> int:
        return sum(1 for r in self.results if r.status == status)

    @property
    def passed(self) -> bool:
        return self.count(FAILED) == 0

    def by_check(self) -> dict[str, dict[str, int]]:
        table: dict[str, dict[str, int]] = {}
        for r in self.results:
            row = table.setdefault(r.check, {PASSED: 0, FAILED: 0, SKIPPED: 0})
            row[r.status] += 1
        return dict(sorted(table.items()))

    def to_json(self) -> dict:
        return {
            "n": self.config.max_n,
            "degrees": list(self.config.degrees),
            "hessenberg_functions": self.functions,
            "functions_by_size": {str(n): c for n, c in sorted(self.sizes.items())},
            "summary": {s: self.count(s) for s in (PASSED, FAILED, SKIPPED)},
            "checks": self.by_check(),
            "failures": [r.to_json() for r in self.results if r.status == FAILED],
            "skipped": [r.to_json() for r in self.results if r.status == SKIPPED
                        and not r.detail.startswith("not applicable")],
            "all_passed": self.passed,
        }


def _run_one(args) -> list[CheckResult]:
    h, cfg = args
    return checks_for(h, cfg)


def run_sweep(cfg: SweepConfig, jobs: int = 1) -> SweepSummary:
    """Run every check on every Hessenberg function of size ``1..cfg.max_n``.

    Results come back in enumeration order regardless of ``jobs``.
    """
    if cfg.max_n > cfg.cap:
        raise CapExceeded(f"n = {cfg.max_n} exceeds the group cap {cfg.cap}")
    functions = [h for n in range(1, cfg.max_n + 1) for h in hessenberg_functions(n)]
    tasks = [(h, cfg) for h in functions]
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            chunks = list(pool.map(_run_one, tasks))
    else:
        chunks = [_run_one(t) for t in tasks]
    sizes: dict[int, int] = {}
    for h in functions:
        sizes[h.n] = sizes.get(h.n, 0) + 1
    return SweepSummary(cfg, len(functions), [r for chunk in chunks for r in chunk], sizes)
