"""Brute-force oracle for the golden values frozen in the C++ tests.

Written independently of the C++ sources: plain Python sets, no bit tricks.
Run: python3 tests/oracles/extremal_oracle.py [max_n]
"""
import itertools
import sys


def lines_of(n, edges):
    out = set()
    for u, v in itertools.combinations(range(n), 2):
        line = {u, v}
        for e in edges:
            if u in e and v in e:
                line |= e
        out.add(frozenset(line))
    return out


def closure(edges, s):
    s = set(s)
    changed = True
    while changed:
        changed = False
        for e in edges:
            if len(e & s) >= 2 and not e <= s:
                s |= e
                changed = True
    return frozenset(s)


def closure_lines_of(n, edges):
    return {closure(edges, {u, v}) for u, v in itertools.combinations(range(n), 2)}


def extremal(n, closure_mode):
    triples = [frozenset(t) for t in itertools.combinations(range(n), 3)]
    best = {}  # max size -> min count
    for mask in range(1 << len(triples)):
        edges = [t for i, t in enumerate(triples) if mask >> i & 1]
        fam = closure_lines_of(n, edges) if closure_mode else lines_of(n, edges)
        s = max(len(l) for l in fam)
        c = len(fam)
        if s not in best or c < best[s]:
            best[s] = c
    res = {}
    for k in range(2, n + 1):
        vals = [c for s, c in best.items() if s <= k]
        res[k] = min(vals) if vals else None
    return res


def main():
    max_n = int(sys.argv[1]) if len(sys.argv) > 1 else 5
    pent = [frozenset(t) for t in ({0, 1, 2}, {1, 2, 3}, {2, 3, 4}, {3, 4, 0}, {4, 0, 1})]
    print("pentagon lines:", len(lines_of(5, pent)))
    fano = [frozenset({i % 7, (i + 1) % 7, (i + 3) % 7}) for i in range(7)]
    print("fano lines:", len(lines_of(7, fano)), "closure lines:", len(closure_lines_of(7, fano)))
    for n in range(3, max_n + 1):
        print("n=%d m:" % n, extremal(n, False), "mbar:", extremal(n, True))


if __name__ == "__main__":
    main()
