"""Exhaustive + randomized check of the interval selector's 2-approximation.

Exhaustive: all orderings of all subsets of size <= 5 of the 21 intervals
with endpoints in {1..6}: final 2|stored| >= alpha, stored disjoint at all
times, |stored| <= alpha(prefix) after every arrival.
Randomized: 10^5 streams of length <= 20 with endpoints in {1..30}.
"""
import itertools
import random
import sys
import time

sys.path.insert(0, "src")
from geostream.geometry import Interval
from geostream.interval_selection import IntervalSelector


def greedy_alpha(pairs):
    # exact for intervals: sweep by right endpoint
    best = 0
    last_hi = None
    for lo, hi in sorted(pairs, key=lambda p: p[1]):
        if last_hi is None or lo > last_hi:
            best += 1
            last_hi = hi
    return best


def subset_alpha_table(pairs):
    # alpha for every submask of the tuple of pairs
    k = len(pairs)
    table = [0] * (1 << k)
    for mask in range(1, 1 << k):
        table[mask] = greedy_alpha([pairs[i] for i in range(k) if (mask >> i) & 1])
    return table


def stored_disjoint(sel):
    ivs = sel.result()
    for a, b in itertools.combinations(ivs, 2):
        if a.lo <= b.hi and b.lo <= a.hi:
            return False
    return True


def run_exhaustive():
    base_pairs = [(a, b) for a in range(1, 7) for b in range(a, 7)]
    base_objs = {p: Interval(*p) for p in base_pairs}
    bad = []
    t0 = time.time()
    total = 0
    for k in range(0, 6):
        for combo in itertools.combinations(base_pairs, k):
            table = subset_alpha_table(combo)
            full_alpha = table[(1 << k) - 1]
            for perm in itertools.permutations(range(k)):
                sel = IntervalSelector()
                mask = 0
                ok = True
                for idx in perm:
                    sel.process(base_objs[combo[idx]])
                    mask |= 1 << idx
                    if len(sel) > table[mask]:
                        ok = False
                        break
                if ok and (2 * len(sel) < full_alpha or not stored_disjoint(sel)):
                    ok = False
                total += 1
                if not ok:
                    bad.append((combo, perm))
                    if len(bad) <= 5:
                        print("FAIL", [combo[i] for i in perm])
    print(f"exhaustive: {total} streams, {len(bad)} failures, {time.time()-t0:.1f}s")
    return len(bad)


def run_random(n_streams=100_000, seed=7):
    rng = random.Random(seed)
    bad = 0
    t0 = time.time()
    for _ in range(n_streams):
        length = rng.randint(1, 20)
        pairs = []
        for _ in range(length):
            a = rng.randint(1, 30)
            b = rng.randint(a, 30)
            pairs.append((a, b))
        sel = IntervalSelector()
        ok = True
        for i, p in enumerate(pairs):
            sel.process(Interval(*p))
            if len(sel) > greedy_alpha(pairs[: i + 1]):
                ok = False
                break
        if ok:
            alpha = greedy_alpha(pairs)
            if 2 * len(sel) < alpha or not stored_disjoint(sel):
                ok = False
        if not ok:
            bad += 1
            if bad <= 5:
                print("FAIL", pairs)
    print(f"random: {n_streams} streams, {bad} failures, {time.time()-t0:.1f}s")
    return bad


fails = run_exhaustive() + run_random()
print("TOTAL FAILURES:", fails)
