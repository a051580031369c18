"""Shared fixtures for the heavy sweeps, computed once per session."""

from __future__ import annotations

import random
import time

import pytest

from crystallograph import crystal, oracle


@pytest.fixture(scope="session")
def sweep3():
    """Exhaustive bijection sweep over all 4096 graphs on 3 nodes, timed."""
    start = time.monotonic()
    checked, crystallographs, quasi_count, failures = oracle.bijection_sweep(3)
    elapsed = time.monotonic() - start
    return {
        "checked": checked,
        "crystallographs": crystallographs,
        "quasi": quasi_count,
        "failures": failures,
        "elapsed": elapsed,
    }


@pytest.fixture(scope="session")
def sweep4():
    """Exhaustive bijection sweep over all 2^20 graphs on 4 nodes, timed."""
    start = time.monotonic()
    checked, crystallographs, quasi_count, failures = oracle.bijection_sweep(4)
    elapsed = time.monotonic() - start
    return {
        "checked": checked,
        "crystallographs": crystallographs,
        "quasi": quasi_count,
        "failures": failures,
        "elapsed": elapsed,
    }


@pytest.fixture(scope="session")
def crystallographs_small():
    """All crystallographs on 1, 2 and 3 nodes."""
    return {n: list(crystal.enumerate_crystallographs(n, "all")) for n in (1, 2, 3)}


@pytest.fixture(scope="session")
def exhaustive_pairs():
    """Every nested crystallograph pair (subgraph classical) at n <= 3."""
    pairs = []
    for n in (1, 2, 3):
        pairs.extend(oracle.nested_pairs_exhaustive(n))
    return pairs


@pytest.fixture(scope="session")
def sampled_pairs():
    """10^4 seeded random nested pairs at each of n = 4 and n = 5."""
    out = {}
    for n in (4, 5):
        rng = random.Random(oracle.RNG_DEFAULT_SEED + n)
        out[n] = [oracle.random_nested_pair(n, rng) for _ in range(10_000)]
    return out


@pytest.fixture(scope="session")
def pair_results(exhaustive_pairs, sampled_pairs):
    """One verification pass per nested pair, shared by several criteria.

    Each record carries the quotient-theorem verdict, whether the quotient
    is quasi, the projectification-compatibility verdict, and the restricted
    arrangement component tags.
    """
    from crystallograph.arrange import (
        classify_restricted_arrangement,
        verify_projectification_compatibility,
    )
    from crystallograph.crystal import is_quasi_crystallograph
    from crystallograph.quotient import quotient_graph, verify_quotient_theorem

    def examine(group, pairs):
        records = []
        for g, gp in pairs:
            quotient = quotient_graph(g, gp)
            records.append(
                {
                    "group": group,
                    "theorem": verify_quotient_theorem(g, gp),
                    "quasi": is_quasi_crystallograph(quotient),
                    "compatible": verify_projectification_compatibility(g, gp),
                    "tags": [
                        (c.type, c.params)
                        for c in classify_restricted_arrangement(g, gp).components
                    ],
                }
            )
        return records

    results = examine("exhaustive", exhaustive_pairs)
    results += examine("sampled4", sampled_pairs[4])
    results += examine("sampled5", sampled_pairs[5])
    return results
