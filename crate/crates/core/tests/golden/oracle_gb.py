#!/usr/bin/env python3
"""Independent Groebner-basis oracle (sympy) for the engine-equivalence test.

Regenerate with:
    python3 oracle_gb.py small > grevlex_random.txt
    python3 oracle_gb.py dense > grevlex_dense.txt

Each case is produced from `random.Random(seed)`:
  * 1..3 variables drawn in order from x, y, z
  * 1..3 generators, each with 1..4 terms ("small") or 3..6 terms
    over exactly 3 variables and 3 generators ("dense")
  * every term has total degree <= 3 and a nonzero coefficient in [-3, 3]
The reduced grevlex basis is computed over QQ by sympy and written term by
term in the polynomial text syntax read by the Rust test.
"""
import random
import sys

import sympy
from sympy import Poly, groebner, symbols

PROFILES = {
    # name: (seeds, nvars range, ngens range, term count range)
    "small": (range(1000, 1020), (1, 3), (1, 3), (1, 4)),
    "dense": (range(2000, 2020), (3, 3), (3, 3), (3, 6)),
}
NAMES = ["x", "y", "z"]


def random_poly(rng, nvars, nterms):
    terms = {}
    for _ in range(rng.randint(*nterms)):
        while True:
            exps = tuple(rng.randint(0, 3) for _ in range(nvars))
            if sum(exps) <= 3:
                break
        coeff = rng.choice([c for c in range(-3, 4) if c != 0])
        terms[exps] = terms.get(exps, 0) + coeff
    terms = {e: c for e, c in terms.items() if c != 0}
    return terms


def fmt_rat(c):
    c = sympy.Rational(c)
    return str(c.p) if c.q == 1 else f"{c.p}/{c.q}"


def fmt_terms(terms, names):
    """terms: list of (exps, coeff) in the printed order"""
    if not terms:
        return "0"
    out = []
    for k, (exps, c) in enumerate(terms):
        c = sympy.Rational(c)
        neg = c < 0
        a = -c if neg else c
        if k == 0:
            out.append("-" if neg else "")
        else:
            out.append(" - " if neg else " + ")
        factors = [n if e == 1 else f"{n}^{e}" for n, e in zip(names, exps) if e > 0]
        if not factors:
            out.append(fmt_rat(a))
        elif a == 1:
            out.append("*".join(factors))
        else:
            out.append(fmt_rat(a) + "*" + "*".join(factors))
    return "".join(out)


def main(profile):
    seeds, nv, ng, nt = PROFILES[profile]
    print(f"# generated by `oracle_gb.py {profile}` with sympy {sympy.__version__}")
    for seed in seeds:
        rng = random.Random(seed)
        nvars = rng.randint(*nv)
        names = NAMES[:nvars]
        syms = symbols(names)
        ngens = rng.randint(*ng)
        gens = []
        while len(gens) < ngens:
            t = random_poly(rng, nvars, nt)
            if t:
                gens.append(t)
        exprs = [sum(c * sympy.prod([s**e for s, e in zip(syms, ex)]) for ex, c in g.items()) for g in gens]
        gb = groebner(exprs, *syms, order="grevlex", domain="QQ")
        print(f"case seed={seed}")
        print("vars " + ",".join(names))
        for g in gens:
            print("gen " + fmt_terms(sorted(g.items(), reverse=True), names))
        for b in gb.exprs:
            p = Poly(b, *syms, domain="QQ")
            print("basis " + fmt_terms(p.terms(order="grevlex"), names))
        print("end")


if __name__ == "__main__":
    main(sys.argv[1] if len(sys.argv) > 1 else "small")
