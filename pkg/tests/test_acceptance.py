"""Acceptance criteria 1-10, one test each.

Every test records a ``PASS``/``FAIL`` line (printed in the pytest terminal
summary) before asserting, so a failing criterion still reports its numbers.
"""

import itertools
import json
import random
import sys
import time

import pytest

from braidcross import (
    BraidWord,
    CrossingMatrix,
    ORSet,
    ORSetError,
    Permutation,
    Realizable,
    SearchConfig,
    SearchMode,
    VirtuallyTotallyBlocked,
    allowed_divisions,
    classify,
    crossing_matrix,
    crossing_product,
    in_sr_plus,
    is_totally_blocked,
    mirror,
    mirror_word,
    or_set,
    permutation_from_or_set,
    sr_decompose,
    tableau_parse,
    tableau_render,
)
from braidcross.division import blocked_cells, divide_along, divide_by_transposition
from braidcross.oracle import (
    brute_force_realizations,
    enumerate_sr_plus,
    enumerate_symmetric_t0,
    random_pure_word,
    random_word,
)
from braidcross.permutations import all_permutations

from known_matrices import A, G, K, V, V1_TABLEAU, blockage_r0bs

RESULTS: dict[int, str] = {}


def record(num: int, ok: bool, detail: str) -> None:
    line = f"criterion {num:2d}: {'PASS' if ok else 'FAIL'}  {detail}"
    RESULTS[num] = line
    print(line)


class Clock:
    def __enter__(self):
        self.start = time.perf_counter()
        return self

    def __exit__(self, *exc):
        self.seconds = time.perf_counter() - self.start


def criterion5_corpus():
    yield from enumerate_sr_plus(3, 3, max_sum=6)
    yield from enumerate_sr_plus(4, 3, max_sum=5)


ALL = SearchConfig(mode=SearchMode.ALL)


def test_criterion_01_blocked_examples():
    problems = []
    times = []
    v1 = tableau_parse(V1_TABLEAU)
    for name, m in (("G", G), ("K", K)):
        with Clock() as c:
            res = classify(m)
        times.append(c.seconds)
        if not (isinstance(res, VirtuallyTotallyBlocked) and res.path == () and res.terminal == m
                and is_totally_blocked(m)):
            problems.append(f"{name}: {res.to_json()}")
    with Clock() as c:
        res = classify(V)
    times.append(c.seconds)
    if allowed_divisions(V) != [1]:
        problems.append(f"V allowed divisions {allowed_divisions(V)}")
    if not (isinstance(res, VirtuallyTotallyBlocked) and res.path == (1,) and res.terminal == v1):
        problems.append(f"V: {res.to_json()}")
    slow = [t for t in times if t >= 1.0]
    ok = not problems and not slow
    record(1, ok, f"G, K depth 0; V via tau_1 to V1; max {max(times):.3f}s  {problems}")
    assert ok


def test_criterion_02_tableau_fidelity():
    with Clock() as c:
        sr_decompose(A)
        cells = tableau_render(A).replace("\n", "|").split("|")
    expected = ["R", "2S+R", "R", "0", "S", "-S+R"]
    ok = cells == expected and c.seconds < 0.1
    record(2, ok, f"cells {cells} in {c.seconds * 1e3:.2f}ms")
    assert ok


def test_criterion_03_or_set_round_trip():
    with Clock() as c:
        bad = [p for p in all_permutations(5) if permutation_from_or_set(or_set(p)) != p]
        pairs = list(itertools.combinations(range(1, 5), 2))
        accepted = set()
        for mask in range(1 << len(pairs)):
            s = frozenset(pr for b, pr in enumerate(pairs) if mask >> b & 1)
            try:
                permutation_from_or_set(ORSet(4, s))
            except ORSetError:
                continue
            accepted.add(s)
        or_sets = {or_set(p).pairs for p in all_permutations(4)}
    ok = not bad and accepted == or_sets and c.seconds < 1.0
    record(3, ok, f"S5 failures {len(bad)}; n=4 accepted {len(accepted)} of 64 = {len(or_sets)} OR sets; "
                  f"{c.seconds:.3f}s")
    assert ok


def test_criterion_04_product_law():
    rng = random.Random(2024)
    failures = 0
    with Clock() as c:
        for _ in range(1000):
            n = rng.randint(2, 6)
            u = random_word(n, rng.randint(0, 8), rng.randrange(1 << 30))
            v = random_word(n, rng.randint(0, 8), rng.randrange(1 << 30))
            if crossing_matrix(u + v) != crossing_product(crossing_matrix(u), crossing_matrix(v)):
                failures += 1
    ok = failures == 0 and c.seconds < 5.0
    record(4, ok, f"1000 signed pairs, {failures} failures, {c.seconds:.2f}s")
    assert ok


def test_criterion_05_oracle_equivalence():
    checked = mismatches = realizable = 0
    examples = []
    with Clock() as c:
        for a in criterion5_corpus():
            checked += 1
            res = classify(a, ALL)
            found = sorted(w.letters for w in res.witnesses) if isinstance(res, Realizable) else []
            count = res.count if isinstance(res, Realizable) else 0
            brute = sorted(w.letters for w in brute_force_realizations(a))
            realizable += bool(brute)
            if found != brute or count != len(brute):
                mismatches += 1
                examples.append(a.to_json())
    ok = mismatches == 0 and c.seconds < 600
    record(5, ok, f"{checked} SR+ matrices ({realizable} realizable), {mismatches} mismatches, "
                  f"{c.seconds:.1f}s  {examples[:3]}")
    assert ok


def test_criterion_06_symmetric_t0_sweep():
    checked = 0
    failures = []
    with Clock() as c:
        for a in enumerate_symmetric_t0(4, 2):
            checked += 1
            if not isinstance(classify(a), Realizable):
                failures.append(a.to_json())
    ok = not failures and checked > 0 and c.seconds < 300
    record(6, ok, f"{checked} symmetric T0 4x4 matrices, {len(failures)} unrealizable, {c.seconds:.2f}s")
    assert ok


def test_criterion_07_blocked_division():
    checked = 0
    findings = []
    with Clock() as c:
        for a in criterion5_corpus():
            cells = blocked_cells(a)
            for i in range(1, a.n):
                if a.entry(i, i + 1) < 1:
                    continue
                checked += 1
                disallowed = not in_sr_plus(divide_by_transposition(a, i))
                if disallowed != ((i, i + 1) in cells):
                    findings.append({"matrix": a.to_json(), "i": i, "disallowed": disallowed})
    for f in findings:
        print("FINDING", json.dumps(f))
    ok = not findings
    record(7, ok, f"{checked} divisions checked, {len(findings)} discrepancies, {c.seconds:.2f}s")
    assert ok


def _trace(b):
    def s(c):
        return "" if c == 1 else str(c)

    out = [f"R,0,{s(b)}S"]
    for t in range(b - 1, -1, -1):
        out.append(f"0,R,{s(t)}S+R" if t else "0,R,R")
        out.append(f"R,0,{s(t)}S" if t else "R,0,0")
    return out


def test_criterion_08_blockage_elimination():
    details = []
    ok = True
    with Clock() as c:
        for b in (1, 2, 3):
            res = classify(blockage_r0bs(b), ALL)
            if not isinstance(res, Realizable):
                ok = False
                details.append(f"b={b} not realizable")
                continue
            word = res.witnesses[0]
            trace = [tableau_render(m).replace("\n", ",").replace("|", ",")
                     for m in divide_along(blockage_r0bs(b), word.letters)]
            # the blockage is gone once 0,R,R appears
            stop = trace.index("0,R,R") + 1 if "0,R,R" in trace else len(trace)
            good = trace[:stop] == _trace(b)[:stop] and trace[stop - 1] == "0,R,R" and trace[-1] == "0,0,0"
            ok &= good
            details.append(f"b={b} word '{word}' {' -> '.join(trace[:stop])}")
    ok = ok and c.seconds < 1.0
    record(8, ok, f"{c.seconds:.3f}s; " + "; ".join(details))
    assert ok


def test_criterion_09_structural_invariants():
    rng = random.Random(99)
    problems = []
    with Clock() as c:
        for _ in range(2000):
            n = rng.randint(2, 7)
            m = crossing_matrix(random_word(n, rng.randint(0, 12), rng.randrange(1 << 30))).rows
            if any(m[i][i] for i in range(n)) or any(
                    m[i][j] - m[j][i] not in (0, 1) for i in range(n) for j in range(i + 1, n)):
                problems.append("signed-word entries")
        for _ in range(500):
            n = rng.randint(2, 6)
            p = random_pure_word(n, rng.randint(0, 4), rng.randrange(1 << 30))
            q = random_pure_word(n, rng.randint(0, 4), rng.randrange(1 << 30))
            if not crossing_matrix(p).is_symmetric():
                problems.append("pure word not symmetric")
            if not crossing_matrix(p + q + p.inverse() + q.inverse()).is_zero():
                problems.append("commutator not zero")
        corpus = 0
        for a in criterion5_corpus():
            corpus += 1
            if mirror(mirror(a)) != a:
                problems.append("mirror not an involution")
            res, mres = classify(a, ALL), classify(mirror(a), ALL)
            if res.kind != mres.kind:
                problems.append(f"mirror changes realizability of {a.to_json()}")
            elif isinstance(res, Realizable) and (
                    sorted(mirror_word(w).letters for w in res.witnesses)
                    != sorted(w.letters for w in mres.witnesses)):
                problems.append(f"mirror witnesses differ for {a.to_json()}")
    ok = not problems and c.seconds < 60
    record(9, ok, f"2000 signed words, 500 pure pairs, {corpus} mirrored matrices, {len(problems)} problems, "
                  f"{c.seconds:.1f}s")
    assert ok


def test_criterion_10_memo_speedup():
    corpus = list(enumerate_symmetric_t0(4, 2))
    on_cfg = SearchConfig(mode=SearchMode.COUNT)
    off_cfg = SearchConfig(mode=SearchMode.COUNT, memoize=False)
    with Clock() as c:
        counts = [classify(a, on_cfg).count for a in corpus]
    on = c.seconds
    # the reference is stopped once it has used ten times the memoized time;
    # reaching that point already proves the ratio
    deadline = 10 * on
    done = 0
    start = time.perf_counter()
    for a, expected in zip(corpus, counts):
        got = classify(a, off_cfg).count
        assert got == expected
        done += 1
        if time.perf_counter() - start > deadline:
            break
    off = time.perf_counter() - start
    ratio = off / on
    ok = ratio >= 10
    bound = "lower bound, reference stopped" if done < len(corpus) else "exact"
    record(10, ok, f"memo on {on:.2f}s, off {off:.2f}s over {done}/{len(corpus)} matrices, "
                   f"speedup {ratio:.1f}x ({bound})")
    assert ok


if __name__ == "__main__":
    code = pytest.main([__file__, "-q", "-p", "no:cacheprovider"])
    print("\n".join(RESULTS[k] for k in sorted(RESULTS)))
    sys.exit(code)
