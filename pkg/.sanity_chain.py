"""Exhaustive sanity check of the two-interval chain construction.

For small (N, t): every index vector, every bit pattern consistent with the
promise for z in {0,1}: oracle alpha must be exactly t (z=1) or 1 (z=0).
Also checks nesting report and separation.
"""
import itertools
import sys

sys.path.insert(0, "src")
from geostream.hardness import ChainInstance, chain_nesting_report, two_intervals_from_chain, validate_chain
from geostream.oracle import max_independent_set

def all_instances(N, t, z, limit_patterns=None):
    for indices in itertools.product(range(1, N + 1), repeat=t - 1):
        # enumerate bit patterns: each string has its sigma bit forced to z
        free_positions = [[j for j in range(1, N + 1) if j != indices[i]] for i in range(t - 1)]
        pattern_space = []
        for i in range(t - 1):
            pats = []
            for bits in itertools.product((0, 1), repeat=len(free_positions[i])):
                mask = (z << (indices[i] - 1))
                for pos, b in zip(free_positions[i], bits):
                    mask |= b << (pos - 1)
                pats.append(mask)
            pattern_space.append(pats)
        count = 0
        for strings in itertools.product(*pattern_space):
            yield ChainInstance(t=t, n_bits=N, strings=strings, indices=indices, z=z)
            count += 1
            if limit_patterns and count >= limit_patterns:
                break

def check(N, t, z, limit=None):
    bad = 0
    total = 0
    for inst in all_instances(N, t, z, limit):
        assert all(validate_chain(inst).values()), inst
        stream = two_intervals_from_chain(inst)
        alpha, wit = max_independent_set(stream.objects)
        expect = t if z == 1 else 1
        nest = chain_nesting_report(inst)
        total += 1
        if alpha != expect or not all(nest.values()):
            bad += 1
            if bad <= 5:
                print("FAIL", inst, "alpha", alpha, "expect", expect, "nest", nest)
    print(f"N={N} t={t} z={z}: {total} instances, {bad} failures")
    return bad

failures = 0
failures += check(2, 2, 0)
failures += check(2, 2, 1)
failures += check(3, 2, 0)
failures += check(3, 2, 1)
failures += check(4, 2, 0, limit=64)
failures += check(4, 2, 1, limit=64)
failures += check(2, 3, 0)
failures += check(2, 3, 1)
failures += check(3, 3, 0, limit=40)
failures += check(3, 3, 1, limit=40)
failures += check(2, 4, 0)
failures += check(2, 4, 1)
failures += check(2, 5, 0, limit=30)
failures += check(2, 5, 1, limit=30)
failures += check(3, 4, 0, limit=30)
failures += check(3, 4, 1, limit=30)
failures += check(4, 3, 0, limit=50)
failures += check(4, 3, 1, limit=50)
print("TOTAL FAILURES:", failures)
