"""Corpus-wide consistency sweep used by ``symunits verify``."""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import asdict, dataclass

from . import corpus
from .goodness import (
    DEFAULT_SAMPLES,
    DEFAULT_SEED,
    EXACT_ORACLE_LIMIT,
    Inapplicable,
    check_condition_i,
    closure_oracle,
    involutions_central,
    is_good,
    theorem_rhs,
    verify_lemma1,
    verify_lemma2,
    xy_normal_form,
)
from .groups import Group, exponent, frattini_2group, quotient_coordinates
from .rings import GF


@dataclass
class Assertion:
    name: str
    passed: bool
    detail: str = ""
    mode: str = "exact"


def _good_nonabelian(groups, jobs):
    return [G for G in groups if not G.is_abelian and is_good(G, jobs=jobs).good]


def _map(fn, items, jobs):
    if jobs <= 1:
        return [fn(x) for x in items]
    with ThreadPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(fn, items))


def corpus_assertions(
    max_order: int = 16, samples: int = DEFAULT_SAMPLES, seed: int = DEFAULT_SEED, jobs: int = 1
) -> list[Assertion]:
    groups = corpus.small_2groups(min(max_order, 16))
    out = []

    small = [G for G in groups if G.order <= EXACT_ORACLE_LIMIT]
    bad = [G.label for G in small if is_good(G).good != closure_oracle(G).closed]
    out.append(Assertion("criterion agrees with exact closure oracle (|G| <= 8)", not bad, ", ".join(bad)))

    mid = [G for G in groups if EXACT_ORACLE_LIMIT < G.order <= 16]
    if mid:
        bad = [G.label for G in mid if is_good(G).good != closure_oracle(G, samples, seed).closed]
        out.append(Assertion("criterion agrees with sampled closure oracle (|G| = 16)", not bad, ", ".join(bad), "sampled"))

    nonab = [G for G in groups if not G.is_abelian]
    verdicts = _map(lambda G: (is_good(G, jobs=jobs).good, theorem_rhs(G).good), nonab, jobs)
    bad = [G.label for G, (a, b) in zip(nonab, verdicts) if a != b]
    good = [G.label for G, (a, _) in zip(nonab, verdicts) if a]
    out.append(Assertion("is_good equals theorem right-hand side", not bad, f"good: {good}; mismatches: {bad}"))

    bad = [G.label for G in groups if is_good(G, GF(2)).good != is_good(G, GF(2, 2)).good]
    out.append(Assertion("verdicts identical over GF(2) and GF(4)", not bad, ", ".join(bad)))

    good_na = _good_nonabelian(groups, jobs)
    out.extend(structural_assertions(good_na))

    if max_order >= 16:
        hits = [
            G.label
            for G in groups
            if not G.is_abelian
            and exponent(G) == 4
            and quotient_coordinates(G, frattini_2group(G))[1] == 2
            and involutions_central(G)
        ]
        both_i = all(check_condition_i(G) is not None for G in groups if G.label in hits)
        out.append(
            Assertion(
                "exactly two 2-generator nonabelian exponent-4 groups of order dividing 16 "
                "have central involutions, both satisfying (i)",
                len(hits) == 2 and both_i,
                f"found {hits}",
            )
        )
    return out


def structural_assertions(good_nonabelian: list[Group]) -> list[Assertion]:
    out = []
    bad = [G.label for G in good_nonabelian if not involutions_central(G)]
    out.append(Assertion("involutions central in good nonabelian groups", not bad, ", ".join(bad)))
    bad = [G.label for G in good_nonabelian if not verify_lemma1(G).passed]
    out.append(Assertion("2-generator subgroups are generalized quaternion or C_2^m x| C_4", not bad, ", ".join(bad)))
    bad = []
    for G in good_nonabelian:
        if exponent(G) == 4:
            continue
        try:
            verify_lemma2(G)
        except (Inapplicable, AssertionError):
            bad.append(G.label)
    out.append(Assertion("abelian index-2 subgroup inverted by an element of order 4 (exponent != 4)", not bad, ", ".join(bad)))
    bad = []
    for G in good_nonabelian:
        t = G.table
        for g in range(G.order):
            for h in range(g + 1, G.order):
                if t[g, h] != t[h, g] and xy_normal_form(G, g, h) is None:
                    bad.append(f"{G.label}({g},{h})")
    out.append(Assertion("noncommuting pairs admit (x, y) with x^y = x^-1, y^4 = 1", not bad, ", ".join(bad[:5])))
    return out


def family_assertions(max_order: int = 64, jobs: int = 1) -> list[Assertion]:
    out = []
    pos = [G for G in corpus.positive_families() if G.order <= max_order]
    bad = [
        G.label
        for G in pos
        if not (is_good(G, jobs=jobs).good and exponent(G) == 4 and frattini_2group(G).order == 4)
    ]
    out.append(Assertion("positive families good, exponent 4, Frattini order 4", not bad, ", ".join(bad)))
    for a in structural_assertions(_good_nonabelian(pos, jobs)):
        a.name += " [families]"
        out.append(a)
    neg = [G for G in corpus.negative_families() if G.order <= max_order]
    bad = []
    for G in neg:
        r = is_good(G, jobs=jobs)
        if r.good:
            bad.append(G.label)
            continue
        a, b = r.witness
        if (a.value * b.value) == (b.value * a.value):
            bad.append(G.label + " (witness commutes)")
    out.append(Assertion("negative families not good, with verified witnesses", not bad, ", ".join(bad)))
    odd = [G for G in corpus.odd_p_groups() if not G.is_abelian]
    bad = [G.label for G in odd if is_good(G, GF(3)).good]
    out.append(Assertion("nonabelian 3-groups are not good", not bad, ", ".join(bad)))
    return out


def run_verification(
    max_order: int = 64,
    families_only: bool = False,
    samples: int = DEFAULT_SAMPLES,
    seed: int = DEFAULT_SEED,
    jobs: int = 1,
) -> list[Assertion]:
    results = []
    if not families_only:
        results += corpus_assertions(max_order, samples, seed, jobs)
    results += family_assertions(max_order, jobs)
    return results


def summary(results: list[Assertion]) -> dict:
    return {
        "passed": all(r.passed for r in results),
        "assertions": [asdict(r) for r in results],
    }
