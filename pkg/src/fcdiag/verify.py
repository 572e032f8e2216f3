"""Property sweeps behind the CLI ``verify`` subcommand.

Each suite re-checks the documented invariants of one module by exhaustive
enumeration (up to a rank cap) or seeded random sampling.  A failing check
reports its first counterexample.  Suites are deterministic for a fixed
``max_n``.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from typing import Callable

from . import counting, lattice, tl
from .bijection import (
    diagram_to_fc,
    dplus_condition,
    fc_to_diagram,
    fc_to_diagram_reference,
)
from .diagram import Diagram, concatenate, enumerate_diagrams
from .fc import (
    Classification,
    FCElement,
    enumerate_fc,
    inversions,
    is_321_avoiding,
    perm_left_descents,
    perm_right_descents,
)

TRIPLE_SAMPLES = 10_000


@dataclass
class CheckResult:
    suite: str
    name: str
    ok: bool
    detail: str = ""


class _Suite:
    def __init__(self, name: str):
        self.name = name
        self.results: list[CheckResult] = []

    def check(self, name: str, counterexample: str | None) -> None:
        self.results.append(
            CheckResult(self.name, name, counterexample is None, counterexample or "")
        )


def _fc_by_rank(n: int) -> list[FCElement]:
    return list(enumerate_fc(n))


# ----------------------------------------------------------------------
# fc_core


def verify_fc_core(max_n: int) -> list[CheckResult]:
    suite = _Suite("fc")

    bad = None
    for n in range(0, min(10, max_n) + 1):
        got = len(_fc_by_rank(n))
        want = counting.catalan(n + 1)
        if got != want:
            bad = f"rank {n}: {got} elements, expected catalan({n + 1}) = {want}"
            break
    suite.check("catalan-count", bad)

    bad = None
    for n in range(0, min(10, max_n) + 1):
        for w in enumerate_fc(n):
            d = w.dual()
            if d.dual() != w or d.size != n - w.size:
                bad = f"{w}: dual not involutive or wrong size"
                break
            if w.length() - d.length() != 2 * w.size - n:
                bad = f"{w}: length difference is not 2p - n"
                break
        if bad:
            break
    suite.check("dual-involution", bad)

    bad = None
    for n in range(1, min(9, max_n) + 1):
        thick = [w for w in enumerate_fc(n) if w.classify() is Classification.THICK]
        images = [w.shrink() for w in thick]
        target = [w for w in enumerate_fc(n - 1) if not w.is_identity()]
        if sorted(images, key=lambda w: w.pairs) != sorted(target, key=lambda w: w.pairs):
            bad = f"rank {n}: shrink is not onto the nonidentity elements of rank {n - 1}"
            break
        for w, v in zip(thick, images):
            if v.size != w.size or w.length() != v.length() + w.size or v.grow() != w:
                bad = f"{w}: shrink image {v} breaks size/length/inverse"
                break
        if bad:
            break
    suite.check("shrink-bijection", bad)

    bad = None
    for n in range(1, min(8, max_n) + 1):
        for w in enumerate_fc(n):
            if w.is_identity():
                continue
            perm = w.to_permutation()
            if w.length() != inversions(perm):
                bad = f"{w}: length differs from inversion count"
                break
            if w.left_descents() != perm_left_descents(perm):
                bad = f"{w}: left descents differ from the permutation test"
                break
            if w.right_descents() != perm_right_descents(perm):
                bad = f"{w}: right descents differ from the permutation test"
                break
        if bad:
            break
    suite.check("descent-formulas", bad)

    bad = None
    for n in range(1, min(8, max_n) + 1):
        classes = {Classification.IDENTITY: 0, Classification.THICK: 0, Classification.SLIM: 0}
        slim: list[FCElement] = []
        for w in enumerate_fc(n):
            classes[w.classify()] += 1
            if w.classify() is Classification.SLIM:
                slim.append(w)
        if classes[Classification.IDENTITY] != 1:
            bad = f"rank {n}: identity counted {classes[Classification.IDENTITY]} times"
            break
        built: list[FCElement] = []
        for i in range(1, n + 1):
            shifted_thick = [()] + [
                tuple((a + i, b + i) for a, b in g.pairs)
                for g in enumerate_fc(n - i)
                if g.classify() is Classification.THICK
            ]
            tails = [d.pairs for d in enumerate_fc(i - 1)]
            for left in shifted_thick:
                for right in tails:
                    built.append(FCElement(n, left + ((i, i),) + right))
        if sorted(built, key=lambda w: w.pairs) != sorted(slim, key=lambda w: w.pairs):
            bad = f"rank {n}: slim reconstruction does not hit each slim element once"
            break
        if len(built) != len(set(built)):
            bad = f"rank {n}: slim reconstruction produced duplicates"
            break
    suite.check("partition-thick-slim", bad)

    bad = None
    for n in range(1, min(8, max_n) + 1):
        for w in enumerate_fc(n):
            dd = w.delta_involution()
            if dd.delta_involution() != w:
                bad = f"{w}: delta_involution is not an involution"
                break
            if not w.is_identity():
                reflected = frozenset(n + 1 - s for s in w.left_descents())
                if dd.right_descents() != reflected:
                    bad = f"{w}: delta_involution does not reflect left descents"
                    break
        if bad:
            break
    suite.check("delta-involution", bad)

    bad = None
    for n in range(1, min(7, max_n) + 1):
        perms = [w.to_permutation() for w in enumerate_fc(n)]
        if len(set(perms)) != len(perms):
            bad = f"rank {n}: permutation images collide"
            break
        if not all(is_321_avoiding(p) for p in perms):
            bad = f"rank {n}: some image contains a 321 pattern"
            break
        avoiders = sum(
            1 for p in itertools.permutations(range(1, n + 2)) if is_321_avoiding(p)
        )
        if avoiders != len(perms):
            bad = f"rank {n}: {avoiders} avoiders but {len(perms)} FC elements"
            break
    suite.check("permutations-321", bad)

    return suite.results


# ----------------------------------------------------------------------
# counting


def _brute_counters(n: int):
    """One enumeration pass collecting every filter the formulas predict."""
    from collections import Counter

    by_size: Counter = Counter()
    by_start: Counter = Counter()
    by_end: Counter = Counter()
    by_first_block: Counter = Counter()
    by_last_block: Counter = Counter()
    by_start_size: Counter = Counter()
    by_size_end: Counter = Counter()
    by_start_end: Counter = Counter()
    for w in enumerate_fc(n):
        by_size[w.size] += 1
        if w.pairs:
            i1, j1 = w.pairs[0]
            ip, jp = w.pairs[-1]
            by_start[i1] += 1
            by_end[jp] += 1
            by_first_block[(i1, j1)] += 1
            by_last_block[(ip, jp)] += 1
            by_start_size[(i1, w.size)] += 1
            by_size_end[(w.size, jp)] += 1
            by_start_end[(i1, jp)] += 1
    return (
        by_size,
        by_start,
        by_end,
        by_first_block,
        by_last_block,
        by_start_size,
        by_size_end,
        by_start_end,
    )


def verify_counting(max_n: int) -> list[CheckResult]:
    suite = _Suite("counting")

    bad = None
    for n in range(0, 21):
        if sum(counting.narayana(n, p) for p in range(n + 1)) != counting.catalan(n + 1):
            bad = f"n={n}: Narayana row does not sum to catalan({n + 1})"
            break
    suite.check("narayana-row-sums", bad)

    bad = None
    for n in range(0, 21):
        for p in range(n + 1):
            if counting.narayana(n, p) != counting.narayana(n, n - p):
                bad = f"(n,p)=({n},{p}): symmetry fails"
                break
        if bad:
            break
    suite.check("narayana-symmetry", bad)

    bad = None
    for n in range(1, 16):
        for i in range(1, n + 1):
            lhs = counting.triangle_start(n, i)
            if lhs != counting.triangle_start(n, i - 1) + counting.triangle_start(n - 1, i):
                bad = f"(n,i)=({n},{i}): triangle recurrence fails"
                break
            if lhs != sum(counting.triangle_start(n - 1, k) for k in range(i + 1)):
                bad = f"(n,i)=({n},{i}): column-sum recurrence fails"
                break
        if bad:
            break
    suite.check("triangle-recurrence", bad)

    bad = None
    for n in range(1, 13):
        for p in range(1, n + 1):
            rhs = (
                counting.narayana(n - 1, p)
                + counting.narayana(n - 1, p - 1)
                + sum(
                    counting.narayana(n - i - 1, r - 1) * counting.narayana(i - 1, p - r)
                    for r in range(1, p + 1)
                    for i in range(1, n)
                )
            )
            if counting.narayana(n, p) != rhs:
                bad = f"(n,p)=({n},{p}): thick/slim recurrence fails"
                break
        if bad:
            break
    suite.check("thick-slim-recurrence", bad)

    bad = None
    for n in range(1, 13):
        for i in range(1, n + 1):
            rhs = counting.catalan(i) + sum(
                counting.triangle_start(n - k - 1, i - k) * counting.catalan(k)
                for k in range(i)
            )
            if counting.triangle_start(n, i) != rhs:
                bad = f"(n,i)=({n},{i}): mixed recurrence fails"
                break
        if bad:
            break
    suite.check("mixed-recurrence", bad)

    bad = None
    for n in range(0, 16):
        if counting.catalan(n + 1) != sum(
            counting.triangle_start(n, i) for i in range(n + 1)
        ):
            bad = f"n={n}: triangle rows do not sum to catalan({n + 1})"
            break
    suite.check("triangle-row-sums", bad)

    bad = None
    for n in range(0, min(10, max_n) + 1):
        (
            by_size,
            by_start,
            by_end,
            by_first,
            by_last,
            by_start_size,
            by_size_end,
            by_start_end,
        ) = _brute_counters(n)
        for p in range(n + 1):
            if counting.narayana(n, p) != by_size[p]:
                bad = f"narayana({n},{p}) != brute count {by_size[p]}"
                break
        if bad:
            break
        for i in range(1, n + 1):
            if counting.triangle_start(n, i) != by_start[i]:
                bad = f"triangle_start({n},{i}) != brute count {by_start[i]}"
                break
            if counting.triangle_end(n, i) != by_end[i]:
                bad = f"triangle_end({n},{i}) != brute count {by_end[i]}"
                break
        if bad:
            break
        for i in range(1, n + 1):
            for j in range(1, n + 1):
                if i <= j and counting.count_first_block(n, i, j) != by_first[(i, j)]:
                    bad = f"count_first_block({n},{i},{j}) != brute count"
                    break
                if i <= j and counting.count_last_block(n, i, j) != by_last[(i, j)]:
                    bad = f"count_last_block({n},{i},{j}) != brute count"
                    break
                got = counting.count_start_end(n, i, j)
                if got.value != by_start_end[(i, j)]:
                    bad = f"count_start_end({n},{i},{j}) != brute count"
                    break
                if got.closed_form != (j >= i - 1):
                    bad = f"count_start_end({n},{i},{j}): wrong closed-form flag"
                    break
            if bad:
                break
        if bad:
            break
        for i in range(1, n + 1):
            for p in range(1, n + 1):
                if counting.count_start_size(n, i, p) != by_start_size[(i, p)]:
                    bad = f"count_start_size({n},{i},{p}) != brute count"
                    break
                if counting.count_size_end(n, p, i) != by_size_end[(p, i)]:
                    bad = f"count_size_end({n},{p},{i}) != brute count"
                    break
            if bad:
                break
        if bad:
            break
    suite.check("formulas-vs-enumeration", bad)

    bad = None
    for n in range(0, 31):
        for p in range(n + 1):
            if not counting.appendix_binomial_identity_check(n, p):
                bad = f"(n,p)=({n},{p}): binomial identity fails"
                break
        if bad:
            break
    suite.check("binomial-identity", bad)

    return suite.results


# ----------------------------------------------------------------------
# diagram


def verify_diagram(max_n: int) -> list[CheckResult]:
    suite = _Suite("diagram")

    bad = None
    for k in range(1, min(9, max_n) + 2):
        diagrams = list(enumerate_diagrams(k))
        if len(diagrams) != counting.catalan(k):
            bad = f"{k} strings: {len(diagrams)} diagrams, expected catalan({k})"
            break
        if len(set(diagrams)) != len(diagrams):
            bad = f"{k} strings: duplicate diagrams emitted"
            break
    suite.check("catalan-count", bad)

    bad = None
    for k in range(1, min(6, max_n) + 2):
        e = Diagram.identity(k)
        for d in enumerate_diagrams(k):
            if concatenate(e, d) != (d, 0) or concatenate(d, e) != (d, 0):
                bad = f"{k} strings: identity is not neutral on {d}"
                break
        if bad:
            break
    suite.check("identity-neutral", bad)

    bad = None
    rng = random.Random(0)
    pools = {
        k: list(enumerate_diagrams(k)) for k in range(2, min(8, max_n) + 2)
    }
    for _ in range(TRIPLE_SAMPLES):
        k = rng.choice(list(pools))
        d1, d2, d3 = (rng.choice(pools[k]) for _ in range(3))
        left, m12 = concatenate(d1, d2)
        left, m_l = concatenate(left, d3)
        right, m23 = concatenate(d2, d3)
        right, m_r = concatenate(d1, right)
        if left != right or m12 + m_l != m23 + m_r:
            bad = f"associativity fails for {d1}, {d2}, {d3}"
            break
    suite.check("loop-additivity", bad)

    bad = None
    for k in range(1, min(8, max_n) + 2):
        for d in enumerate_diagrams(k):
            comp = d.components()
            if len(comp.top_arcs) != len(comp.bottom_arcs):
                bad = f"{d}: unequal top and bottom arc counts"
                break
            rebuilt = _rebuild_from_arcs(k, comp.top_arcs, comp.bottom_arcs)
            if rebuilt != d:
                bad = f"{d}: reconstruction from row arcs differs"
                break
        if bad:
            break
    suite.check("arc-reconstruction", bad)

    bad = None
    for k in range(2, min(5, max_n) + 2):
        diagrams = list(enumerate_diagrams(k))
        for d1 in diagrams:
            for d2 in diagrams:
                prod = concatenate(d1, d2)[0]
                pc = prod.components()
                if not d1.components().top_arcs <= pc.top_arcs:
                    bad = f"top arcs of {d1} lost in {d1} * {d2}"
                    break
                if not d2.components().bottom_arcs <= pc.bottom_arcs:
                    bad = f"bottom arcs of {d2} lost in {d1} * {d2}"
                    break
            if bad:
                break
        if bad:
            break
    suite.check("arc-persistence", bad)

    bad = None
    for k in range(1, min(7, max_n) + 2):
        for d in enumerate_diagrams(k):
            if d.flip_vertical().flip_vertical() != d:
                bad = f"{d}: vertical flip is not an involution"
                break
            if d.flip_horizontal().flip_horizontal() != d:
                bad = f"{d}: horizontal flip is not an involution"
                break
        if bad:
            break
    suite.check("flip-involutions", bad)

    return suite.results


def _rebuild_from_arcs(strings, top_arcs, bottom_arcs) -> Diagram:
    """Left-to-right rule: join free top dots to free bottom dots in order."""
    partner = [-1] * (2 * strings)
    for x, y in list(top_arcs) + list(bottom_arcs):
        partner[x], partner[y] = y, x
    free_top = [d for d in range(strings) if partner[d] == -1]
    free_bottom = [d for d in range(strings, 2 * strings) if partner[d] == -1]
    for a, b in zip(free_top, free_bottom, strict=True):
        partner[a], partner[b] = b, a
    return Diagram(strings, tuple(partner))


# ----------------------------------------------------------------------
# bijection


def verify_bijection(max_n: int) -> list[CheckResult]:
    suite = _Suite("bijection")

    bad = None
    for n in range(0, min(9, max_n) + 1):
        for w in enumerate_fc(n):
            if diagram_to_fc(fc_to_diagram(w)[0]) != w:
                bad = f"{w}: element roundtrip fails"
                break
        if bad:
            break
        for d in enumerate_diagrams(n + 1):
            if fc_to_diagram(diagram_to_fc(d))[0] != d:
                bad = f"{d}: diagram roundtrip fails"
                break
        if bad:
            break
    suite.check("roundtrips", bad)

    bad = None
    for n in range(0, min(8, max_n) + 1):
        for w in enumerate_fc(n):
            if fc_to_diagram(w)[0] != fc_to_diagram_reference(w):
                bad = f"{w}: direct algorithm differs from concatenation oracle"
                break
        if bad:
            break
    suite.check("oracle-equivalence", bad)

    bad = None
    for n in range(0, min(6, max_n) + 1):
        diagrams = list(enumerate_diagrams(n + 1))
        for w in enumerate_fc(n):
            i_set = frozenset(i for i, _ in w.pairs)
            j_set = frozenset(j for _, j in w.pairs)
            hits = [
                d
                for d in diagrams
                if d.components().starts == i_set and d.components().ends == j_set
            ]
            if len(hits) != 1:
                bad = f"{w}: {len(hits)} diagrams share its start/end data"
                break
        if bad:
            break
    suite.check("uniqueness", bad)

    bad = None
    for n in range(0, min(5, max_n) + 1):
        elements = list(enumerate_fc(n))
        diagrams = {w: fc_to_diagram(w)[0] for w in elements}
        for w1 in elements:
            for w2 in elements:
                prod, loops = concatenate(diagrams[w1], diagrams[w2])
                w3, m = tl.monomial_product(w1, w2)
                if m != loops or diagrams[w3] != prod:
                    bad = f"{w1} * {w2}: diagram product disagrees"
                    break
            if bad:
                break
        if bad:
            break
    suite.check("multiplication-compatible", bad)

    bad = None
    for n in range(0, min(8, max_n) + 1):
        for w in enumerate_fc(n):
            d, trace = fc_to_diagram(w)
            if d.components().size != w.size:
                bad = f"{w}: diagram size differs from element size"
                break
            if d.flip_vertical().flip_horizontal() != fc_to_diagram(w.delta_involution())[0]:
                bad = f"{w}: rotation does not match delta_involution"
                break
            positive_tails = {w.pairs[s - 1][0] for s, _ in trace.positive_pairs}
            for r in range(1, w.size + 1):
                cands, chosen = trace.top_sets[r - 1]
                if (not cands) != (w.pairs[r - 1][0] in positive_tails):
                    bad = f"{w}: empty candidate set mismatch at block {r}"
                    break
                if cands and chosen != min(cands):
                    bad = f"{w}: chosen top partner is not minimal at block {r}"
                    break
            if bad:
                break
            for (s, t) in trace.positive_pairs:
                if not dplus_condition(w, s, t):
                    bad = f"{w}: drawn positive arrow ({s},{t}) fails the predicate"
                    break
            if bad:
                break
        if bad:
            break
    suite.check("trace-consistency", bad)

    return suite.results


# ----------------------------------------------------------------------
# tl


def verify_tl(max_n: int) -> list[CheckResult]:
    suite = _Suite("tl")

    bad = None
    for n in range(1, min(10, max_n) + 1):
        gens = [FCElement(n, ((i, i),)) for i in range(1, n + 1)]
        for i, ei in enumerate(gens, start=1):
            w, m = tl.monomial_product(ei, ei)
            if (w, m) != (ei, 1):
                bad = f"n={n}: e_{i}^2 != delta e_{i}"
                break
            for j, ej in enumerate(gens, start=1):
                if abs(i - j) == 1:
                    w1, m1 = tl.monomial_product(ei, ej)
                    w2, m2 = tl.monomial_product(w1, ei)
                    if (w2, m1 + m2) != (ei, 0):
                        bad = f"n={n}: e_{i} e_{j} e_{i} != e_{i}"
                        break
                elif i != j:
                    if tl.monomial_product(ei, ej) != tl.monomial_product(ej, ei):
                        bad = f"n={n}: e_{i} and e_{j} do not commute"
                        break
            if bad:
                break
        if bad:
            break
    suite.check("presentation-relations", bad)

    bad = None
    rng = random.Random(1)
    pools = {n: list(enumerate_fc(n)) for n in range(1, min(6, max_n) + 1)}
    for _ in range(TRIPLE_SAMPLES):
        n = rng.choice(list(pools))
        x, y, z = (tl.TLElement.monomial(rng.choice(pools[n])) for _ in range(3))
        if (x * y) * z != x * (y * z):
            bad = f"associativity fails at rank {n}"
            break
    suite.check("associativity", bad)

    bad = None
    for n in range(1, min(8, max_n) + 1):
        for w in enumerate_fc(n):
            if w.is_identity():
                continue
            d, _ = fc_to_diagram(w)
            left, right = tl.descents_from_diagram(d)
            if left != w.left_descents() or right != w.right_descents():
                bad = f"{w}: diagram descents differ from canonical-form descents"
                break
            perm = w.to_permutation()
            if left != perm_left_descents(perm) or right != perm_right_descents(perm):
                bad = f"{w}: diagram descents differ from the permutation test"
                break
        if bad:
            break
    suite.check("descents-three-ways", bad)

    bad = None
    for n in range(1, min(7, max_n) + 1):
        diagrams_by_key: dict = {}
        for d in enumerate_diagrams(n + 1):
            diagrams_by_key.setdefault(tl.equivalence_key(d), 0)
            diagrams_by_key[tl.equivalence_key(d)] += 1
        for p in range(n + 1):
            classes = tl.census(n, p)
            if sum(size for _, size in classes) != counting.narayana(n, p):
                bad = f"(n,p)=({n},{p}): class sizes do not sum to the Narayana number"
                break
            for key, size in classes:
                if size != diagrams_by_key[key]:
                    bad = f"(n,p)=({n},{p}): class size differs from diagram recount"
                    break
                if size != tl.expected_class_size(n + 1, key):
                    bad = f"(n,p)=({n},{p}): class size is not the Catalan gap product"
                    break
            if bad:
                break
        if bad:
            break
    suite.check("census", bad)

    return suite.results


# ----------------------------------------------------------------------
# lattice


def verify_lattice(max_n: int) -> list[CheckResult]:
    suite = _Suite("lattice")

    bad = None
    for n in range(0, min(9, max_n) + 1):
        for w in enumerate_fc(n):
            path = lattice.fc_to_dyck(w)
            if lattice.dyck_to_fc(path) != w:
                bad = f"{w}: path roundtrip fails"
                break
            ballot = lattice.dyck_to_ballot(path)
            if lattice.ballot_to_dyck(ballot) != path:
                bad = f"{w}: ballot roundtrip fails"
                break
            if lattice.fc_to_ballot(w) != ballot:
                bad = f"{w}: direct ballot formula differs from the composition"
                break
        if bad:
            break
    suite.check("path-ballot-roundtrips", bad)

    bad = None
    for n in range(2, min(8, max_n) + 1):
        witness = None
        for w in enumerate_fc(n):
            d, _ = fc_to_diagram(w)
            if lattice.diagram_to_ballot(d) != lattice.fc_to_ballot(w):
                witness = w
                break
        if witness is None:
            bad = f"rank {n}: tail/head reading agrees with the block ballot everywhere"
            break
    suite.check("readings-disagree", bad)

    bad = None
    for k in range(1, min(8, max_n) + 2):
        seen = set()
        count = 0
        for d in enumerate_diagrams(k):
            seen.add(lattice.diagram_to_ballot(d))
            count += 1
        if len(seen) != count or count != counting.catalan(k):
            bad = f"{k} strings: tail/head reading is not injective onto ballots"
            break
    suite.check("diagram-ballot-bijective", bad)

    return suite.results


SUITES: dict[str, Callable[[int], list[CheckResult]]] = {
    "fc": verify_fc_core,
    "counting": verify_counting,
    "diagram": verify_diagram,
    "bijection": verify_bijection,
    "tl": verify_tl,
    "lattice": verify_lattice,
}


def run_suites(names: list[str], max_n: int) -> list[CheckResult]:
    results: list[CheckResult] = []
    for name in names:
        results.extend(SUITES[name](max_n))
    return results
