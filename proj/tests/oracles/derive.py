"""Independent oracle for the derived constants frozen in the C++ tests.

Uses exact rational arithmetic and high-precision root finding only; shares no
code with the library. Run: python3 tests/oracles/derive.py
"""

import bisect
from fractions import Fraction
from itertools import product

import mpmath as mp

mp.mp.dps = 40


def moran(ratios):
    return mp.findroot(lambda s: sum(mp.mpf(r) ** s for r in ratios) - 1, 1.2)


def spectral_dimension(weighted):
    # weighted(s) returns an mpmath matrix; solve rho = 1 by bisection
    def rho(s):
        return max(abs(e) for e in mp.eig(weighted(s))[0])

    return mp.findroot(lambda s: rho(s) - 1, (mp.mpf("0.01"), mp.mpf(3)), solver="bisect")


def words(alphabet, k, forbidden=(), window=0):
    out = []
    for w in product(range(alphabet), repeat=k):
        if any(tuple(w[i:i + window]) in forbidden for i in range(k - window + 1)):
            continue
        out.append(w)
    return out


def count_fibonacci(k):
    return sum(1 for w in product((0, 1), repeat=k) if all(not (a == 1 and b == 1) for a, b in zip(w, w[1:])))


def wsp_min_deviation(max_len, eps=Fraction(6, 100)):
    """Exact search over {x/2, x/3, x/2+1/2}: smallest deviation of S_i^{-1} S_j
    from the identity over distinct maps with words of length <= max_len.
    The deviation is at least |r_j/r_i - 1|/2, so ratio pairs beyond 2*eps
    cannot beat eps."""
    maps = [(Fraction(1, 2), Fraction(0)), (Fraction(1, 3), Fraction(0)), (Fraction(1, 2), Fraction(1, 2))]
    seen = {}
    frontier = {(Fraction(1), Fraction(0)): ()}
    for _ in range(max_len):
        nxt = {}
        for (r, t), w in frontier.items():
            for sym, (ri, ti) in enumerate(maps):
                key = (r * ri, r * ti + t)
                if key not in seen and key not in nxt:
                    nxt[key] = w + (sym,)
        seen.update(nxt)
        frontier = nxt
    by_ratio = {}
    for (r, t), w in seen.items():
        by_ratio.setdefault(r, []).append((t, w))
    best = None
    ratios = sorted(by_ratio)
    for ri in ratios:
        column = sorted(by_ratio[ri])
        keys = [t for t, _ in column]
        for rj in ratios:
            c = rj / ri - 1
            if abs(c) > 2 * eps:
                continue
            # S_i^{-1} S_j x - x = c x + u with u = (tj - ti)/ri; the sup over
            # x in {0, 1} is max(|u|, |c + u|), smallest near u = -c/2, so only
            # the ti next to tj + c ri / 2 can be optimal.
            for tj, wj in by_ratio[rj]:
                k = bisect.bisect_left(keys, tj + c * ri / 2)
                for ti, wi in column[max(0, k - 2):k + 2]:
                    if ri == rj and ti == tj:
                        continue
                    u = (tj - ti) / ri
                    d = max(abs(u), abs(c + u))
                    if best is None or d < best[0]:
                        best = (d, wi, wj)
    return best


def main():
    print("log2/log3 =", mp.nstr(mp.log(2) / mp.log(3), 20))
    phi = (1 + mp.sqrt(5)) / 2
    print("log(phi)/log3 =", mp.nstr(mp.log(phi) / mp.log(3), 20))
    print("moran(1/2,1/3,1/2) =", mp.nstr(moran([mp.mpf(1) / 2, mp.mpf(1) / 3, mp.mpf(1) / 2]), 20))
    print("moran(0.4,0.4,0.4) =", mp.nstr(moran([mp.mpf("0.4")] * 3), 20))

    # two_vertex_graph.json: 0->0 ratio 1/2, 0->1 ratio 1/4, 1->0 ratio 1/4
    def two_vertex(s):
        x = mp.mpf(2) ** (-s)
        return mp.matrix([[x, x * x], [x * x, 0]])

    print("two-vertex graph dimension =", mp.nstr(spectral_dimension(two_vertex), 20))

    # no_triple_ones.json: entropy of binary sequences avoiding 111, ratio 0.4
    trib = mp.findroot(lambda x: x ** 3 - x ** 2 - x - 1, 1.8)
    print("no-111 dimension =", mp.nstr(mp.log(trib) / mp.log(mp.mpf("2.5")), 20))

    counts = [len(words(2, n, {(1, 1, 1)}, 3)) for n in range(2, 9)]
    print("no-111 word counts n=2..8 =", counts)
    print("golden-mean word counts k=1..6 =", [count_fibonacci(k) for k in range(1, 7)])

    for m in (1, 2, 5, 20):
        total = sum(Fraction(1, 2 ** k) for k in range(1, m + 1))
        print(f"exhaustion sum M={m} =", total, "= 1 - 2^-M:", total == 1 - Fraction(1, 2 ** m))

    for n, s in ((2, mp.mpf("1.5")), (2, mp.mpf(2)), (3, mp.mpf(2))):
        t = (s - 1) / (n - 1)
        print(f"product construction n={n} s={s}: t={mp.nstr(t, 10)} r={mp.nstr(mp.mpf(2) ** (-1 / t), 10)}")

    for length in (8, 10, 13):
        d, wi, wj = wsp_min_deviation(length)
        print(f"wsp min deviation (len<={length}) =", d, "=", float(d), "words", wi, wj)


if __name__ == "__main__":
    main()
