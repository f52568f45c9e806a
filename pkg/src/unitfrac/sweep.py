"""Exhaustive soundness sweep of the catalog over enumerated solutions.

For every reduced fraction m/n in a rectangle (n <= n_max, m <= m_factor*n)
and every 4-term solution, check that the decomposition satisfies:

  - the master equation,
  - singleton relative gcds x_i = 1,
  - coprimality of cofactors with n/n_i and of incomparable x-pairs,
  - integrality of all ten z-quotients under the chosen convention,
  - all 96 catalog rules,
  - all 13 inequality templates.

The hot loop runs a checker compiled once per convention from the same
Term data that powers the reference evaluators in `catalog`; the compiled
function works on flat local integers, which keeps the full n <= 50 sweep
(2.3 million solutions) within a few minutes on one core.  Under the
"reduced" convention the pair quotients are not always integral; such
solutions carry no decomposition to check and are counted as skipped
rather than failed.
"""

from __future__ import annotations

import math
import time
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations
from typing import Callable, Dict, List, Optional, Tuple

from . import params as P
from .catalog import InequalityTemplate, Term, build_inequalities, build_rules
from .decomposition import INCOMPARABLE_PAIRS, relative_gcds
from .enumeration import iter_raw_solutions
from .errors import InputError
from .params import check_convention

_CHECKER_NAME = "_check_solution"


def _product_expr(symbols) -> str:
    return "*".join(symbols) if symbols else "1"


def _term_expr(term: Term) -> str:
    """Numerator of a Term as a Python expression (den_syms handled by caller)."""
    parts: List[str] = []
    if term.m_exp == 1:
        parts.append("m")
    elif term.m_exp:
        parts.append("m**%d" % term.m_exp)
    parts.extend(term.num_syms)
    parts.extend(term.params)
    return _product_expr(parts)


def _rule_lines(rule) -> List[str]:
    """Statements checking one family 2-8 rule, appending its key on failure."""
    lhs, rhs = rule.terms
    if lhs.den_syms:
        raise AssertionError("unexpected lhs denominator in %s" % rule.key)
    dens = {t.den_syms for t in rhs}
    if len(dens) != 1:
        raise AssertionError("mixed rhs denominators in %s" % rule.key)
    den = next(iter(dens))
    left = _term_expr(lhs)
    if den:
        left = "%s * %s" % (left, _product_expr(den))
    right = " + ".join(_term_expr(t) for t in rhs)
    return ["if %s != %s:" % (left, right),
            "    fails.append(%r)" % rule.key]


def _factor_lines(rule) -> List[str]:
    """Statements checking one family-1 rule via its four monomial classes."""
    pj, pk = rule.key.split(":", 1)[1].split("*")
    buckets: Dict[Tuple[bool, bool], List[int]] = {}
    for i in P.INDICES:
        has_j = pj in P.TERM_XPART[i]
        has_k = pk in P.TERM_XPART[i]
        buckets.setdefault((has_j, has_k), []).append(i)

    def bucket_sum(key: Tuple[bool, bool], div: str) -> str:
        idxs = buckets.get(key, ())
        if not idxs:
            return "0"
        if div:
            return " + ".join("term%d//%s" % (i, div) for i in idxs)
        return " + ".join("term%d" % i for i in idxs)

    lines = [
        "_pjk = %s*%s" % (pj, pk),
        "_c11 = mT//_pjk - (%s)" % bucket_sum((True, True), "_pjk"),
        "_c10 = -(%s)" % bucket_sum((True, False), pj),
        "_c01 = -(%s)" % bucket_sum((False, True), pk),
        "_c00 = -(%s)" % bucket_sum((False, False), ""),
        "if _c11:",
        "    if (_c11*%s + _c01)*(_c11*%s + _c10) != _c01*_c10 - _c11*_c00:"
        % (pj, pk),
        "        fails.append(%r)" % rule.key,
        "elif _c10*%s + _c01*%s + _c00 != 0:" % (pj, pk),
        "    fails.append(%r)" % rule.key,
    ]
    return lines


def _inequality_lines(tmpl: InequalityTemplate) -> List[str]:
    left: List[str] = []
    for p, e in tmpl.lhs.items():
        left.extend([p] * e)
    for s, e in tmpl.pattern.items():
        left.extend([s] * e)
    if tmpl.m_exp:
        left.append("m**%d" % -tmpl.m_exp if tmpl.m_exp < -1 else "m")
    right = ["%d" % tmpl.constant,
             "n" if tmpl.n_exp == 1 else "n**%d" % tmpl.n_exp]
    for p, e in tmpl.rhs.items():
        right.extend([p] * e)
    key = "ineq:%s" % tmpl.key
    return ["if %s > %s:" % (_product_expr(left), _product_expr(right)),
            "    fails.append(%r)" % key]


def _z_lines(convention: str) -> List[str]:
    """Divmod computations for the ten z-quotients; bail out on remainder."""
    lines: List[str] = []
    for ij in P.PAIRS:
        i, j = ij
        kl = P.complement_pair(ij)
        den = [P.d_name(ij), P.x_name(ij), P.x_name(kl)]
        if convention == "reduced":
            den.append(P.x_name(kl))
        lines += [
            "%s, _r = divmod(term%d + term%d, %s)"
            % (P.z_name(ij), i, j, _product_expr(den)),
            "if _r:",
            "    fails.append('zint:%s')" % P.z_name(ij),
            "    return fails",
        ]
    for T in P.TRIPLES:
        den = [P.d_name(T)]
        den += [P.x_name(p) for p in combinations(T, 2)]
        den.append(P.x_name(T))
        lines += [
            "%s, _r = divmod(%s, %s)"
            % (P.z_name(T), " + ".join("term%d" % i for i in T),
               _product_expr(den)),
            "if _r:",
            "    fails.append('zint:%s')" % P.z_name(T),
            "    return fails",
        ]
    return lines


def checker_source(convention: str = "standard") -> str:
    """Source of the compiled per-solution checker (one function)."""
    check_convention(convention)
    args = (["m", "n"]
            + ["n%d" % i for i in P.INDICES]
            + ["nn%d" % i for i in P.INDICES]
            + list(P.D_SYMBOLS)
            + list(P.X_PARAMS)
            + ["t%d" % i for i in P.INDICES])
    body: List[str] = ["fails = []"]
    for i in P.INDICES:
        body.append("term%d = nn%d * %s"
                    % (i, i, _product_expr(P.TERM_XPART[i])))
    body += [
        "mT = m * %s" % _product_expr(P.X_PARAMS),
        "if mT != term1 + term2 + term3 + term4:",
        "    fails.append('master')",
        "    return fails",
    ]
    for i in P.INDICES:
        body += ["if _gcd(t%d, nn%d) != 1:" % (i, i),
                 "    fails.append('coprime:t%d')" % i]
    for a, b in INCOMPARABLE_PAIRS:
        body += ["if _gcd(%s, %s) != 1:" % (a, b),
                 "    fails.append('coprime:%s*%s')" % (a, b)]
    body += _z_lines(convention)
    for rule in build_rules(convention):
        if rule.family == 1:
            body += _factor_lines(rule)
        else:
            body += _rule_lines(rule)
    for tmpl in build_inequalities():
        body += _inequality_lines(tmpl)
    body.append("return fails")
    lines = ["def %s(%s):" % (_CHECKER_NAME, ", ".join(args))]
    lines += ["    " + line for line in body]
    return "\n".join(lines) + "\n"


@lru_cache(maxsize=None)
def compiled_checker(convention: str = "standard") -> Callable:
    """Compile the checker; returns failing check keys per solution."""
    source = checker_source(convention)
    namespace: Dict[str, object] = {"_gcd": math.gcd}
    exec(compile(source, "<%s checker>" % convention, "exec"), namespace)
    func = namespace[_CHECKER_NAME]
    func.source = source
    return func


@dataclass(frozen=True)
class SweepFailure:
    """One failed check on one enumerated solution."""

    m: int
    n: int
    denominators: Tuple[int, int, int, int]
    check: str

    def __str__(self) -> str:
        return "%s for %d/%d on %s" % (self.check, self.m, self.n,
                                       self.denominators)


@dataclass
class SweepReport:
    """Outcome of a soundness sweep."""

    n_max: int
    m_factor: int
    convention: str
    fractions: int = 0
    solutions: int = 0
    skipped: int = 0
    failures: List[SweepFailure] = field(default_factory=list)
    elapsed: float = 0.0

    @property
    def ok(self) -> bool:
        return not self.failures

    def summary(self) -> str:
        return (
            "swept %d fractions / %d solutions (n <= %d, m <= %dn, %s): "
            "%d failures, %d skipped, %.1fs"
            % (self.fractions, self.solutions, self.n_max, self.m_factor,
               self.convention, len(self.failures), self.skipped,
               self.elapsed)
        )


def _pattern_data(n: int, pattern: Tuple[int, ...]) -> Tuple[int, ...]:
    nn = tuple(n // ni for ni in pattern)
    d = tuple(math.gcd(*(nn[i - 1] for i in J)) if len(J) == 2
              else math.gcd(math.gcd(nn[J[0] - 1], nn[J[1] - 1]),
                            nn[J[2] - 1])
              for J in P.Z_SUBSETS)
    return pattern + nn + d


def sweep_soundness(
    n_max: int = 50,
    m_factor: int = 4,
    convention: str = "standard",
    fail_limit: Optional[int] = None,
    progress: Optional[Callable[[int, "SweepReport"], None]] = None,
) -> SweepReport:
    """Check every solution of every reduced m/n in the rectangle.

    Every failed check is recorded as a SweepFailure (up to fail_limit,
    if given).  Under the "reduced" convention, solutions whose pair
    quotients are non-integral have no decomposition and are counted in
    `skipped` instead; under "standard" a non-integral quotient is a
    failure.  `progress`, if given, is called after each n with (n,
    report-so-far).
    """
    check_convention(convention)
    if n_max < 1:
        raise InputError("n_max must be positive, got %d" % n_max)
    if m_factor < 1:
        raise InputError("m_factor must be positive, got %d" % m_factor)
    checker = compiled_checker(convention)
    skip_integrality = convention == "reduced"
    report = SweepReport(n_max=n_max, m_factor=m_factor,
                         convention=convention)
    gcd = math.gcd
    x_names = P.X_PARAMS
    started = time.perf_counter()
    for n in range(1, n_max + 1):
        data_cache: Dict[Tuple[int, ...], Tuple[int, ...]] = {}
        for m in range(1, m_factor * n + 1):
            if gcd(m, n) != 1:
                continue
            report.fractions += 1
            for a in iter_raw_solutions(m, n, 4):
                report.solutions += 1
                pattern = (gcd(a[0], n), gcd(a[1], n),
                           gcd(a[2], n), gcd(a[3], n))
                data = data_cache.get(pattern)
                if data is None:
                    data = _pattern_data(n, pattern)
                    data_cache[pattern] = data
                t = (a[0] // pattern[0], a[1] // pattern[1],
                     a[2] // pattern[2], a[3] // pattern[3])
                x = relative_gcds(t)
                bad = [i for i in P.INDICES if x["x%d" % i] != 1]
                if bad:
                    for i in bad:
                        report.failures.append(
                            SweepFailure(m, n, a, "singleton:x%d" % i))
                    continue
                xs = tuple(x[name] for name in x_names)
                fails = checker(m, n, *data, *xs, *t)
                for key in fails:
                    if skip_integrality and key.startswith("zint:"):
                        report.skipped += 1
                    else:
                        report.failures.append(SweepFailure(m, n, a, key))
                if fail_limit is not None and len(report.failures) >= fail_limit:
                    report.elapsed = time.perf_counter() - started
                    return report
        if progress is not None:
            report.elapsed = time.perf_counter() - started
            progress(n, report)
    report.elapsed = time.perf_counter() - started
    return report
