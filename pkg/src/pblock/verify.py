"""Named verification sweeps over whole blocks, with pass/fail reporting.

Every check is exhaustive over its stated domain and deterministic; a failing
check always carries a concrete counterexample.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from itertools import product

from .abacus import AbacusDisplay, is_jm_fayers
from .blocks import (
    BeadNotation,
    counts_42,
    counts_223,
    decode_notation,
    enumerate_block,
    from_3p,
    in_lambda_set,
    irreducible_set_X,
    loewy2_families,
    loewy_length,
    partners,
    principal_block,
    restriction_block,
    sigma_partner,
    tau,
    tau_p,
    theta,
)
from .abacus import p_weight
from .hooks import is_jm_direct
from .mullineux import (
    MullineuxSymbol,
    check_good_node_compatibility,
    mullineux,
    mullineux_symbol,
    parity,
)
from .partitions import (
    Partition,
    format_partition,
    is_p_regular,
    is_p_restricted,
    normal_nodes,
    partitions_of,
    remove_node,
    removable_nodes,
)


class CheckFailure(Exception):
    def __init__(self, counterexample: str, message: str):
        super().__init__(message)
        self.counterexample = counterexample
        self.message = message


def _fail(la, message: str):
    text = format_partition(la) if isinstance(la, tuple) else str(la)
    raise CheckFailure(text, message)


def _N2(*runners) -> BeadNotation:
    return BeadNotation(2, runners)


def _N3(*runners) -> BeadNotation:
    return BeadNotation(3, runners)


# ---------------------------------------------------------------------------
# Individual checks: each returns a detail string or raises CheckFailure.
# ---------------------------------------------------------------------------

def check_jm_classification(p: int) -> str:
    block = enumerate_block(principal_block(p))
    expected = {(3 * p,), (1,) * (3 * p)}
    passing = {la for la in block if is_jm_fayers(la, p)}
    if passing != expected:
        _fail(sorted(passing ^ expected)[0], "quotient test passes off the expected pair")
    return f"{len(block)} partitions; only the row and column pass"


def check_xi_sets(p: int) -> str:
    for i in range(2, p + 1):
        if i == 2:
            expected = {_N2(2, 2), _N2(2), _N2(1), _N2(2, 1)}
        elif i == p:
            expected = {_N2(p, p), _N2(p, p - 1), _N2(p - 1), _N2(p - 1, p - 1)}
        else:
            expected = {_N2(i, i), _N2(i - 1), _N2(i, i - 1)}
        got = set(irreducible_set_X(p, i))
        if got != expected:
            _fail(f"B_{i}: " + ", ".join(map(str, sorted(got ^ expected))),
                  f"irreducible set of B_{i} differs from the classified list")
    return f"irreducible sets of B_2..B_{p} match the classified lists"


def _both(flagged: dict) -> bool:
    return flagged["p_regular"] and flagged["p_restricted"]


def check_prop31(p: int) -> str:
    from .blocks import classify_3p

    block = enumerate_block(principal_block(p))
    flags = {la: classify_3p(la, p) for la in block}
    both = {la for la in block if _both(flags[la])}

    # (1) <i,j>: both iff i < j <= p-1.
    for i, j in product(range(1, p + 1), repeat=2):
        la = from_3p(_N3(i, j), p)
        if (la in both) != (i < j <= p - 1):
            _fail(la, f"<{i},{j}> contradicts the two-index regular&restricted rule")
    # (2) <i,i,j>: both iff 2 <= j < i.
    for i, j in product(range(1, p + 1), repeat=2):
        if i == j:
            continue
        la = from_3p(_N3(i, i, j), p)
        if (la in both) != (2 <= j < i):
            _fail(la, f"<{i},{i},{j}> contradicts the repeated-index rule")
    # (3) distinct <i,j,k>: both iff not one of the two excluded triples.
    for i in range(3, p + 1):
        for j in range(2, i):
            for k in range(1, j):
                la = from_3p(_N3(i, j, k), p)
                expected = (i, j, k) not in {(3, 2, 1), (p, p - 1, p - 2)}
                if (la in both) != expected:
                    _fail(la, f"<{i},{j},{k}> contradicts the distinct-index rule")
    # (4) the three families exhaust the regular&restricted partitions.
    family = {from_3p(_N3(i, j), p) for i in range(1, p) for j in range(i + 1, p)}
    family |= {from_3p(_N3(i, i, j), p) for i in range(3, p + 1) for j in range(2, i)}
    family |= {from_3p(_N3(i, j, k), p)
               for i in range(3, p + 1) for j in range(2, i) for k in range(1, j)
               if (i, j, k) not in {(3, 2, 1), (p, p - 1, p - 2)}}
    if family != both:
        _fail(sorted(family ^ both)[0], "regular&restricted set differs from the three families")
    # (5) self-conjugates: a placement is fixed by conjugation exactly when its
    # runner multiset is symmetric about (p+1)/2.
    half = (p + 1) // 2
    sc_family = {from_3p(_N3(half, half), p)}
    sc_family |= {from_3p(_N3(p + 1 - m, half, m), p) for m in range(1, (p - 1) // 2 + 1)}
    sc = {la for la in block if flags[la]["self_conjugate"]}
    if sc != sc_family:
        _fail(sorted(sc ^ sc_family)[0], "self-conjugate set differs from the symmetric forms")
    # (6) neither regular nor restricted: exactly <i,i>, equal to (p+i, 1^(2p-i)).
    neither = {la for la in block
               if not flags[la]["p_regular"] and not flags[la]["p_restricted"]}
    for i in range(1, p + 1):
        la = from_3p(_N3(i, i), p)
        if la != (p + i,) + (1,) * (2 * p - i):
            _fail(la, f"<{i},{i}> is not the expected hook")
    if neither != {from_3p(_N3(i, i), p) for i in range(1, p + 1)}:
        _fail(sorted(neither)[0], "neither-regular-nor-restricted set is not the <i,i> family")
    # (7) hooks.
    hooks_family = {from_3p(nota, p) for i in range(1, p + 1)
                    for nota in (_N3(i), _N3(i, i), _N3(i, i, i))}
    hooks = {la for la in block if flags[la]["hook"]}
    if hooks != hooks_family:
        _fail(sorted(hooks ^ hooks_family)[0], "hook set differs from the three bead shapes")
    # (8) regular, not restricted, not a hook.
    rnh = {la for la in block
           if flags[la]["p_regular"] and not flags[la]["p_restricted"] and not flags[la]["hook"]}
    rnh_family = {from_3p(_N3(i, p), p) for i in range(1, p)}
    rnh_family |= {from_3p(_N3(i, j), p) for i in range(2, p + 1) for j in range(1, i)}
    rnh_family.add(from_3p(_N3(p, p - 1, p - 2), p))
    if rnh != rnh_family:
        _fail(sorted(rnh ^ rnh_family)[0], "regular-not-restricted non-hooks differ from the families")
    return f"all eight clauses hold over {len(block)} partitions"


def check_prop212(p: int) -> str:
    # (1) <i,p> for 1 <= i <= p-1.
    for i in range(1, p):
        la = from_3p(_N3(i, p), p)
        expected_tau = 2 if i in (1, p - 1) else 3
        expected_taup = 1 if i in (1, p - 1) else 2
        if tau(la) != expected_tau or tau_p(la, p) != expected_taup:
            _fail(la, f"<{i},{p}> node counts differ")
    # (2) <i,1> for 2 <= i <= p.
    for i in range(2, p + 1):
        la = from_3p(_N3(i, 1), p)
        if tau(la) != (2 if i == 2 else 3) or tau_p(la, p) != 1:
            _fail(la, f"<{i},1> node counts differ")
    # (3) <j+1,j> for 2 <= j <= p-1.
    for j in range(2, p):
        la = from_3p(_N3(j + 1, j), p)
        if tau(la) != (2 if j == p - 1 else 3) or tau_p(la, p) != 2:
            _fail(la, f"<{j+1},{j}> node counts differ")
    # (4) <i,j> for 2 <= j < i <= p with i - j >= 2.
    for i in range(4, p + 1):
        for j in range(2, i - 1):
            la = from_3p(_N3(i, j), p)
            if tau(la) != (3 if i == p else 4) or tau_p(la, p) != 2:
                _fail(la, f"<{i},{j}> node counts differ")
    # (5) normal-node ceiling for regular partitions.
    block = enumerate_block(principal_block(p))
    spread = set()
    if p >= 7:
        spread = {from_3p(_N3(i, j, k), p)
                  for i in range(3, p + 1) for j in range(2, i - 1) for k in range(2, j - 1)}
    for la in block:
        if not is_p_regular(la, p):
            continue
        count = tau_p(la, p)
        if p == 5 and count > 2:
            _fail(la, "a 5-regular partition with more than two normal nodes")
        if p >= 7 and ((count == 3) != (la in spread) or count > 3):
            _fail(la, "normal-node count contradicts the spread-out-triple rule")
    aside = from_3p(_N3(2, 1), p)
    return (f"families (1)-(4) and the ceiling hold; "
            f"outside the stated range, <2,1> has {tau(aside)} removable "
            f"and {tau_p(aside, p)} normal nodes")


def check_lemma34(p: int) -> str:
    from .blocks import classify_3p

    exceptional = from_3p(_N3(1, 2), p)
    checked = 0
    for la in enumerate_block(principal_block(p)):
        flags = classify_3p(la, p)
        if not _both(flags):
            continue
        checked += 1
        witnesses = []
        for node in removable_nodes(la):
            smaller = remove_node(la, node)
            if (p_weight(smaller, p) == 2 and is_p_regular(smaller, p)
                    and is_p_restricted(smaller, p)):
                witnesses.append(node)
        if not witnesses:
            _fail(la, "no removable node keeps weight 2 plus regular&restricted")
        normal = set(normal_nodes(la, p))
        has_normal_witness = any(node in normal for node in witnesses)
        if has_normal_witness != (la != exceptional):
            _fail(la, "normal-witness existence contradicts the single exception")
    return f"{checked} regular&restricted partitions have the stated witnesses"


def check_mullineux_conformance(p: int) -> str:
    source = from_3p(_N3(p, p - 1, p - 3), p)
    symbol = mullineux_symbol(source, p)
    if symbol.a != (p + 1, p, p - 1) or symbol.r != (4, 3, 3):
        _fail(source, f"symbol of <{p},{p-1},{p-3}> is {symbol.a};{symbol.r}")
    target = from_3p(_N3(3, 5), p) if p == 5 else from_3p(_N3(6, 5, 3), p)
    if mullineux(source, p) != target:
        _fail(source, "image of the worked triple placement is off")
    if p == 5:
        if mullineux_symbol((8, 6, 1), 5) != MullineuxSymbol((6, 5, 4), (3, 2, 2)):
            _fail((8, 6, 1), "symbol of (8,6,1) is off")
        if mullineux((5, 4, 3, 2, 1), 5) != (7, 5, 2, 1):
            _fail((5, 4, 3, 2, 1), "image of the staircase is off")
        second_layer = {(8, 6, 1), (6, 6, 1, 1, 1), (6, 4, 2, 2, 1),
                        (5, 5, 5), (5, 5, 3, 1, 1), (5, 4, 4, 2)}
        third_layer = {(5, 5, 4, 1), (7, 4, 2, 2), (6, 5, 2, 1, 1),
                       (9, 6), (8, 5, 2), (7, 6, 1, 1)}
        if {mullineux(la, 5) for la in second_layer} != third_layer:
            _fail(sorted(second_layer)[0], "the six-element layer does not map onto its twin")
    regulars = [la for la in enumerate_block(principal_block(p)) if is_p_regular(la, p)]
    for la in regulars:
        if mullineux(mullineux(la, p), p) != la:
            _fail(la, "not an involution on the block")
        if not check_good_node_compatibility(la, p):
            _fail(la, "good nodes do not pair off with negated residues")
    return f"worked symbols and images match; involution holds on {len(regulars)} block partitions"


def check_parity_flip(p: int) -> str:
    count = 0
    for la in enumerate_block(principal_block(p)):
        if not is_p_regular(la, p):
            continue
        count += 1
        if parity(mullineux(la, p), p) == parity(la, p):
            _fail(la, "image has the same parity")
    return f"parity flips under the involution for all {count} regular partitions"


def check_theta_table(p: int) -> str:
    # Restriction images of <i,1> and of spread-out <i,j>, in the target notation.
    for i in range(3, p):
        la = from_3p(_N3(i, 1), p)
        table = {2: _N2(i - 1), i: _N2(p, p - i + 2), i + 1: _N2(p, p - i + 1)}
        for s, expected in table.items():
            if theta(la, p, s) != decode_notation(expected, p, counts_223(p, s)):
                _fail(la, f"restriction of <{i},1> to B_{s} is not {expected}")
    for j in range(2, p):
        for i in range(j + 2, p):
            la = from_3p(_N3(i, j), p)
            gap = i - j
            table = {j: _N2(gap + 1), j + 1: _N2(gap),
                     i: _N2(p, p - gap + 1), i + 1: _N2(p, p - gap)}
            for s, expected in table.items():
                if theta(la, p, s) != decode_notation(expected, p, counts_223(p, s)):
                    _fail(la, f"restriction of <{i},{j}> to B_{s} is not {expected}")
    block = enumerate_block(principal_block(p))
    # Monotonicity on each normal-bead domain.
    for i in range(1, p + 1):
        members = [la for la in block if is_p_regular(la, p) and in_lambda_set(la, p, i)]
        members.sort(reverse=True)
        images = [theta(la, p, i) for la in members]
        for pos in range(len(images) - 1):
            if not images[pos] > images[pos + 1]:
                _fail(members[pos + 1], f"restriction to B_{i} is not order-preserving")
    # Regularity is preserved on the normal-bead domain (the bead criterion
    # applies verbatim to singular partitions).  A merely removable bead is
    # not enough: pushing it can erase the repeated part.
    for la in block:
        display = AbacusDisplay.from_partition(la, p, 3 * p)
        for m in display.normal_beads():
            i = display.runner(m)
            if is_p_regular(la, p) != is_p_regular(theta(la, p, i), p):
                _fail(la, f"regularity flips under restriction to B_{i}")
    return "restriction table, monotonicity and regularity preservation hold"


def _induced_pairs(p: int, i: int) -> dict[BeadNotation, tuple[BeadNotation, BeadNotation]]:
    if i == 2:
        return {_N2(2, 2): (_N3(2, 2, 2), _N3(1, 1, 1)),
                _N2(2): (_N3(2, 2, 1), _N3(2, 1, 1)),
                _N2(1): (_N3(2), _N3(1)),
                _N2(2, 1): (_N3(2, 2), _N3(1, 1))}
    if i == p:
        return {_N2(p, p): (_N3(p, p, p), _N3(p - 1, p - 1, p - 1)),
                _N2(p, p - 1): (_N3(p, p), _N3(p - 1, p - 1)),
                _N2(p - 1): (_N3(p), _N3(p - 1)),
                _N2(p - 1, p - 1): (_N3(p, p - 1), _N3(p - 1, p))}
    return {_N2(i, i): (_N3(i, i, i), _N3(i - 1, i - 1, i - 1)),
            _N2(i - 1): (_N3(i), _N3(i - 1)),
            _N2(i, i - 1): (_N3(i, i), _N3(i - 1, i - 1))}


def check_partner_counts(p: int) -> str:
    for i in range(1, p + 1):
        expected = 3 if i == 1 else 2
        for la_tilde in enumerate_block(restriction_block(p, i)):
            found = partners(la_tilde, p, i)
            if len(found) != expected:
                _fail(la_tilde, f"{len(found)} partners over B_{i}, expected {expected}")
    top = from_3p(_N3(p, p - 1), p)
    if sigma_partner(top, p, p) != from_3p(_N3(p - 1, p), p):
        _fail(top, "sigma partner of the <p,p-1> placement is off")
    for i in range(2, p + 1):
        counts = counts_42(p, i)
        for key, (upper, lower) in _induced_pairs(p, i).items():
            la_tilde = decode_notation(key, p, counts)
            expected_pair = (from_3p(upper, p), from_3p(lower, p))
            if partners(la_tilde, p, i) != expected_pair:
                _fail(la_tilde, f"induced pair over B_{i} for {key} is not ({upper}, {lower})")
    return "partner counts, the sigma example and all induced pairs match"


def check_loewy_partition(p: int) -> str:
    from .blocks import classify_3p

    families = loewy2_families(p)
    family_list = list(families.values())
    for a in range(len(family_list)):
        for b in range(a + 1, len(family_list)):
            overlap = family_list[a] & family_list[b]
            if overlap:
                _fail(str(sorted(overlap)[0]), "length-2 families overlap")
    length2 = {from_3p(nota, p) for members in families.values() for nota in members}
    if len(length2) != 3 * p + 2:
        _fail(sorted(length2)[0], "length-2 family has the wrong cardinality")

    block = enumerate_block(principal_block(p))
    classes: dict[int, set[Partition]] = {1: set(), 2: set(), 3: set(), 4: set()}
    for la in block:
        classes[loewy_length(la, p)].add(la)
    if sum(len(c) for c in classes.values()) != len(block):
        _fail(block[0], "classes do not partition the block")
    if classes[1] != {(3 * p,), (1,) * (3 * p)}:
        _fail(sorted(classes[1])[0], "length-1 class is not the extreme pair")
    if classes[2] != length2:
        _fail(sorted(classes[2] ^ length2)[0], "length-2 class differs from its families")
    both = {la for la in block if _both(classify_3p(la, p))}
    if classes[4] != both:
        _fail(sorted(classes[4] ^ both)[0], "length-4 class is not the regular&restricted set")
    spot = from_3p(_N3(p, p - 1, p - 2), p)
    if loewy_length(spot, p) != 3:
        _fail(spot, "the excluded triple placement should have length 3")
    if p == 5 and loewy_length((5, 4, 3, 2, 1), 5) != 4:
        _fail((5, 4, 3, 2, 1), "the staircase should have length 4")
    return (f"classes of sizes {[len(classes[k]) for k in (1, 2, 3, 4)]} "
            f"partition the {len(block)} block partitions")


def check_oracle_equivalence(p: int, max_n: int = 28) -> str:
    checked = 0
    for n in range(max_n + 1):
        for la in partitions_of(n):
            checked += 1
            if is_jm_direct(la, p) != is_jm_fayers(la, p):
                _fail(la, "power-diagram and quotient tests disagree")
    return f"both irreducibility tests agree on {checked} partitions (n <= {max_n})"


# ---------------------------------------------------------------------------
# Runner
# ---------------------------------------------------------------------------

CHECKS = {
    "jm-classification": check_jm_classification,
    "xi-sets": check_xi_sets,
    "prop31": check_prop31,
    "prop212": check_prop212,
    "lemma34": check_lemma34,
    "mullineux-conformance": check_mullineux_conformance,
    "parity-flip": check_parity_flip,
    "theta-table": check_theta_table,
    "partner-counts": check_partner_counts,
    "loewy-partition": check_loewy_partition,
    "oracle-equivalence": check_oracle_equivalence,
}


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    counterexample: str | None
    detail: str
    elapsed: float

    def to_json_dict(self) -> dict:
        return {"name": self.name, "status": "pass" if self.passed else "fail",
                "counterexample": self.counterexample, "detail": self.detail,
                "elapsed": round(self.elapsed, 3)}


@dataclass(frozen=True)
class VerificationReport:
    p: int
    checks: tuple[CheckResult, ...]

    @property
    def all_passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def to_json_dict(self) -> dict:
        return {"p": self.p, "checks": [c.to_json_dict() for c in self.checks]}


def run_checks(p: int, names=None) -> VerificationReport:
    """Run the named checks (all of them by default), ordered by check name."""
    if names is None:
        names = sorted(CHECKS)
    unknown = [name for name in names if name not in CHECKS]
    if unknown:
        raise ValueError(f"unknown checks: {', '.join(unknown)}")
    results = []
    for name in sorted(names):
        start = time.monotonic()
        try:
            detail = CHECKS[name](p)
            results.append(CheckResult(name, True, None, detail, time.monotonic() - start))
        except CheckFailure as failure:
            results.append(CheckResult(name, False, failure.counterexample,
                                       failure.message, time.monotonic() - start))
    return VerificationReport(p, tuple(results))
