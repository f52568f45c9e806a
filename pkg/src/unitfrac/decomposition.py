"""Decomposition of 4-term solutions into pattern and relative-gcd data.

A nondecreasing tuple (a_1,..,a_4) with 1/a_1 + .. + 1/a_4 = m/n determines

* the pattern n_i = gcd(a_i, n) and cofactors t_i = a_i / n_i,
* the layered relative gcds x_J over index subsets J (x_J captures the
  common factor shared by exactly the cofactors t_i with i in J),
* the pattern constants d_J = gcd(n/n_i : i in J), and
* the integer quotients z_J certifying divisibility relations between the
  terms of the cleared master equation
      m * prod(x_J : |J| >= 2) = sum_i (n/n_i) * prod(x_J : i not in J).

Two quotient normalizations are supported.  Under the default "standard"
convention the pair quotient is

    z_ij = (term_i + term_j) / (d_ij * x_kl * x_ij),

which is always an integer for valid solutions.  The alternative "reduced"
convention divides by one more factor of x_kl; it is *not* always integral,
and a failure raises IntegralityError naming the offending parameter (such
a failure is a reportable finding, not a bug).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Dict, List, Mapping, Sequence, Tuple

from . import params as P
from .arith import gcd, gcd_all
from .errors import InputError, IntegralityError, InvariantError
from .params import CONVENTIONS, check_convention

# All nonempty subsets of {1,2,3,4}, largest first: the layered-gcd pass
# peels factors off from the top of the subset lattice downwards.
_ALL_SUBSETS: Tuple[Tuple[int, ...], ...] = tuple(
    sorted(
        (J for r in range(1, 5) for J in combinations(P.INDICES, r)),
        key=lambda J: (-len(J), J),
    )
)
_STRICT_SUPERSETS: Dict[Tuple[int, ...], Tuple[str, ...]] = {
    J: tuple(P.x_name(K) for K in _ALL_SUBSETS if set(J) < set(K))
    for J in _ALL_SUBSETS
}

# Incomparable index-subset pairs among the 11 sets with |J| >= 2: for these
# the corresponding x-values are coprime on any valid decomposition.
INCOMPARABLE_PAIRS: Tuple[Tuple[str, str], ...] = tuple(
    (P.x_name(J), P.x_name(K))
    for J, K in combinations(P.X_SUBSETS, 2)
    if not set(J) <= set(K) and not set(K) <= set(J)
)


def pattern_of(denominators: Sequence[int], n: int) -> Tuple[int, ...]:
    """Componentwise gcd of the denominators with n."""
    if n <= 0:
        raise InputError("n must be positive, got %d" % n)
    return tuple(gcd(a, n) for a in denominators)


def relative_gcds(t: Sequence[int]) -> Dict[str, int]:
    """Layered gcds of the cofactors over all nonempty index subsets.

    For each subset J, gcd(t_i : i in J) splits exactly as the product of
    x_K over supersets K of J; the value assigned to J is the leftover once
    all strictly larger layers are divided out.  Returns a dict keyed by
    x-parameter names ("x1" .. "x1234").
    """
    values = tuple(t)
    if len(values) != 4 or any(v <= 0 for v in values):
        raise InputError("expected four positive cofactors, got %r" % (values,))
    x: Dict[str, int] = {}
    for J in _ALL_SUBSETS:
        g = gcd_all(values[i - 1] for i in J)
        above = math.prod(x[name] for name in _STRICT_SUPERSETS[J])
        q, r = divmod(g, above)
        if r:
            raise InvariantError(
                "layered gcd not exact at %s for cofactors %s"
                % (P.x_name(J), values)
            )
        x[P.x_name(J)] = q
    return x


@dataclass(frozen=True)
class Decomposition:
    """Full parameter data of one 4-term solution."""

    denominators: Tuple[int, int, int, int]
    fraction: Fraction
    pattern: Tuple[int, int, int, int]
    t: Tuple[int, int, int, int]
    x: Mapping[str, int]  # keys x1..x4 and x12..x1234
    d: Mapping[str, int]  # keys d12..d34, d123..d234
    z: Mapping[str, int]  # keys z12..z34, z123..z234
    terms: Tuple[int, int, int, int]  # master-equation summands
    convention: str

    @property
    def m(self) -> int:
        return self.fraction.numerator

    @property
    def n(self) -> int:
        return self.fraction.denominator

    def env(self) -> Dict[str, int]:
        """Flat evaluation environment for rule and inequality checks.

        Keys: m, n, n1..n4, nn1..nn4 (nn_i = n/n_i), the ten d-constants,
        the eleven x-parameters, the ten z-parameters, plus the cached
        master-equation data mT (the full product m * prod x_J) and
        term1..term4 (the four summands).
        """
        env: Dict[str, int] = {"m": self.m, "n": self.n}
        for i in P.INDICES:
            env["n%d" % i] = self.pattern[i - 1]
            env["nn%d" % i] = self.n // self.pattern[i - 1]
        env.update(self.d)
        for name in P.X_PARAMS:
            env[name] = self.x[name]
        env.update(self.z)
        env["mT"] = self.m * self.master_product()
        for i in P.INDICES:
            env["term%d" % i] = self.terms[i - 1]
        return env

    def master_product(self) -> int:
        return math.prod(self.x[name] for name in P.X_PARAMS)


def decompose(
    denominators: Sequence[int],
    fraction: Fraction | int,
    convention: str = "standard",
) -> Decomposition:
    """Compute the full decomposition of a 4-term solution of `fraction`."""
    check_convention(convention)
    a = tuple(int(v) for v in denominators)
    if len(a) != 4:
        raise InputError("expected exactly 4 denominators, got %d" % len(a))
    if any(v <= 0 for v in a):
        raise InputError("denominators must be positive: %s" % (a,))
    if any(a[i] > a[i + 1] for i in range(3)):
        raise InputError("denominators must be nondecreasing: %s" % (a,))
    f = Fraction(fraction)
    if sum(Fraction(1, v) for v in a) != f:
        raise InputError("%s does not solve %s" % (a, f))
    m, n = f.numerator, f.denominator

    pattern = pattern_of(a, n)
    t = tuple(ai // ni for ai, ni in zip(a, pattern))
    x = relative_gcds(t)
    for i in P.INDICES:
        if x["x%d" % i] != 1:
            raise InvariantError(
                "singleton x%d = %d != 1 for %s" % (i, x["x%d" % i], a)
            )

    nn = tuple(n // ni for ni in pattern)
    d = {P.d_name(J): gcd_all(nn[i - 1] for i in J) for J in P.Z_SUBSETS}
    terms = tuple(
        nn[i - 1] * math.prod(x[name] for name in P.TERM_XPART[i])
        for i in P.INDICES
    )
    total = math.prod(x[name] for name in P.X_PARAMS)
    if m * total != sum(terms):
        raise InvariantError("master equation violated for %s" % (a,))

    z: Dict[str, int] = {}
    for ij in P.PAIRS:
        i, j = ij
        k, l = P.complement_pair(ij)
        num = terms[i - 1] + terms[j - 1]
        den = d[P.d_name(ij)] * x[P.x_name((k, l))] * x[P.x_name(ij)]
        if convention == "reduced":
            den *= x[P.x_name((k, l))]
        q, r = divmod(num, den)
        if r:
            raise IntegralityError(P.z_name(ij), num, den, a)
        z[P.z_name(ij)] = q
    for T in P.TRIPLES:
        num = sum(terms[i - 1] for i in T)
        den = d[P.d_name(T)] * math.prod(
            x[P.x_name(p)] for p in combinations(T, 2)
        ) * x[P.x_name(T)]
        q, r = divmod(num, den)
        if r:
            raise IntegralityError(P.z_name(T), num, den, a)
        z[P.z_name(T)] = q

    return Decomposition(
        denominators=a,
        fraction=f,
        pattern=pattern,
        t=t,
        x=x,
        d=d,
        z=z,
        terms=terms,
        convention=convention,
    )


def reconstruct(dec: Decomposition) -> Tuple[int, ...]:
    """Rebuild the denominators: a_i = n_i * prod(x_J : i in J)."""
    return tuple(
        dec.pattern[i - 1]
        * dec.x["x%d" % i]
        * math.prod(dec.x[name] for name in P.CONTAINING[i])
        for i in P.INDICES
    )


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    detail: str


@dataclass(frozen=True)
class VerificationReport:
    checks: Tuple[CheckResult, ...]

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def failures(self) -> Tuple[CheckResult, ...]:
        return tuple(c for c in self.checks if not c.passed)

    def __str__(self) -> str:
        return "\n".join(
            "%s %s: %s" % ("PASS" if c.passed else "FAIL", c.name, c.detail)
            for c in self.checks
        )


# The named identities re-checked by verify(): a spanning sample of the
# closure catalog (two product identities, two pair-quotient definitions,
# two triple-step relations, one quotient-product relation) plus the four
# ordering inequalities used by the bound derivations.
VERIFY_RULE_KEYS = (
    "tprod:z123",
    "tprod:z234",
    "zpair:z23",
    "zpair:z34",
    "zstep:z23->z234",
    "zstep:z34->z234",
    "zprod:z134*z234",
)
VERIFY_INEQUALITY_KEYS = ("z23", "z34", "z234", "t1")


def verify(dec: Decomposition) -> VerificationReport:
    """Re-check the defining identities of a Decomposition one by one."""
    from . import catalog  # imported here: catalog has no reverse dependency

    env = dec.env()
    checks: List[CheckResult] = []

    lhs = dec.m * dec.master_product()
    checks.append(
        CheckResult(
            "master",
            lhs == sum(dec.terms),
            "%d = %s" % (lhs, " + ".join(str(v) for v in dec.terms)),
        )
    )

    index = catalog.rule_index(dec.convention)
    for key in VERIFY_RULE_KEYS:
        rule = index[key]
        left, parts = rule.sides(env)
        checks.append(
            CheckResult(
                key,
                left == sum(parts),
                "%d = %s" % (left, " + ".join(str(v) for v in parts)),
            )
        )

    bad = [
        (p, q)
        for p, q in INCOMPARABLE_PAIRS
        if gcd(dec.x[p], dec.x[q]) != 1
    ]
    checks.append(
        CheckResult(
            "coprimality",
            not bad,
            "all %d incomparable pairs coprime" % len(INCOMPARABLE_PAIRS)
            if not bad
            else "shared factors: %s" % (bad,),
        )
    )

    singles = tuple(dec.x["x%d" % i] for i in P.INDICES)
    checks.append(
        CheckResult(
            "unit-singletons",
            singles == (1, 1, 1, 1),
            "x1..x4 = %s" % (singles,),
        )
    )

    cof = tuple(gcd(dec.t[i - 1], dec.n // dec.pattern[i - 1]) for i in P.INDICES)
    checks.append(
        CheckResult(
            "cofactor-coprime",
            cof == (1, 1, 1, 1),
            "gcd(t_i, n/n_i) = %s" % (cof,),
        )
    )

    ineq_index = catalog.inequality_index()
    for key in VERIFY_INEQUALITY_KEYS:
        template = ineq_index[key]
        left, right = template.evaluate_sides(env)
        checks.append(
            CheckResult("ineq:" + key, left <= right, "%d <= %d" % (left, right))
        )

    return VerificationReport(tuple(checks))
