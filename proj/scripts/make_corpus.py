#!/usr/bin/env python3
"""Generate the bundled number-field corpus under data/corpus/.

Every record is produced from first principles with exact integer/rational
arithmetic and re-verified before emission:

  * real quadratic fundamental units via minimal Pell solutions,
  * unit norms via exact Sylvester resultants,
  * polynomial discriminants via fraction-free Bareiss determinants,
  * subfield witnesses checked by exact polynomial composition mod f,
  * regulators evaluated at 60 decimal digits with mpmath (hints only).

Run from the repository root:  python3 scripts/make_corpus.py
"""

import itertools
import json
import math
import os
from fractions import Fraction

import mpmath as mp

mp.mp.dps = 60

GENERATED = "2026-08-09"
ORACLE = "scripts/make_corpus.py"
OUT_DIR = os.path.join(os.path.dirname(__file__), "..", "data", "corpus")


# ----------------------------------------------------------------------
# exact polynomial helpers (little-endian coefficient lists)
# ----------------------------------------------------------------------

def trim(p):
    p = list(p)
    while len(p) > 1 and p[-1] == 0:
        p.pop()
    return p


def poly_mul(a, b):
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += Fraction(x) * Fraction(y)
    return out


def poly_mod(a, f):
    # f monic
    a = [Fraction(x) for x in a]
    d = len(f) - 1
    while len(a) > d:
        c = a[-1]
        if c != 0:
            for i in range(d):
                a[len(a) - 1 - d + i] -= c * Fraction(f[i])
        a.pop()
    while len(a) < d:
        a.append(Fraction(0))
    return a


def resultant(f, g):
    """Res(f, g) for integer polynomials, exact (Bareiss on Sylvester)."""
    fl = trim(f)[::-1]
    gl = trim(g)[::-1]
    n = len(fl) - 1
    m = len(gl) - 1
    if m < 0 or gl == [0]:
        return 0
    if m == 0:
        return gl[0] ** n
    N = n + m
    M = [[0] * N for _ in range(N)]
    for i in range(m):
        for j, c in enumerate(fl):
            M[i][i + j] = c
    for i in range(n):
        for j, c in enumerate(gl):
            M[m + i][i + j] = c
    sign, prev = 1, 1
    for k in range(N - 1):
        if M[k][k] == 0:
            for s in range(k + 1, N):
                if M[s][k] != 0:
                    M[k], M[s] = M[s], M[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, N):
            for j in range(k + 1, N):
                M[i][j] = (M[i][j] * M[k][k] - M[i][k] * M[k][j]) // prev
            M[i][k] = 0
        prev = M[k][k]
    return sign * M[N - 1][N - 1]


def poly_disc(f):
    f = trim(f)
    d = len(f) - 1
    fp = trim([i * f[i] for i in range(1, d + 1)])
    res = resultant(f, fp)
    s = -1 if (d * (d - 1) // 2) % 2 else 1
    assert f[-1] == 1
    return s * res


def norm_of(f, coords):
    """Norm of the element with the given power-basis integer coords."""
    return resultant(f, list(coords))


def embeddings(f):
    rs = mp.polyroots([mp.mpf(c) for c in trim(f)[::-1]], maxsteps=400, extraprec=400)
    return sorted(rs, key=lambda z: (mp.re(z), mp.im(z)))


def embed(coords, root):
    return mp.polyval([mp.mpf(str(c)) if isinstance(c, int) else mp.mpf(c.numerator) / c.denominator
                       for c in list(coords)[::-1]], root)


def signature_of(f):
    rs = embeddings(f)
    r1 = sum(1 for z in rs if abs(mp.im(z)) < mp.mpf(10) ** -40)
    return (r1, (len(rs) - r1) // 2)


def place_reps(f):
    """One root per archimedean place with local degree."""
    rs = embeddings(f)
    reps = []
    for z in rs:
        if abs(mp.im(z)) < mp.mpf(10) ** -40:
            reps.append((z, 1))
        elif mp.im(z) > 0:
            reps.append((z, 2))
    return reps


def det(rows):
    a = [list(r) for r in rows]
    n = len(a)
    out = mp.mpf(1)
    for k in range(n):
        p = max(range(k, n), key=lambda i: abs(a[i][k]))
        if abs(a[p][k]) == 0:
            return mp.mpf(0)
        if p != k:
            a[k], a[p] = a[p], a[k]
            out = -out
        out *= a[k][k]
        for i in range(k + 1, n):
            m = a[i][k] / a[k][k]
            for j in range(k, n):
                a[i][j] -= m * a[k][j]
    return out


def regulator(f, units):
    reps = place_reps(f)
    r = len(reps) - 1
    assert len(units) == r
    if r == 0:
        return mp.mpf(1)
    rows = []
    for z, dw in reps[:r]:
        rows.append([dw * mp.log(abs(embed(u, z))) for u in units])
    return abs(det(rows))


def slug(f):
    """Compact polynomial label, e.g. x3+x2-2x-1."""
    d = len(f) - 1
    parts = []
    for i in range(d, -1, -1):
        c = f[i]
        if c == 0:
            continue
        if i == d:
            term = "x%d" % i if i > 1 else ("x" if i == 1 else "1")
            parts.append(term)
            continue
        sign = "+" if c > 0 else "-"
        a = abs(c)
        if i == 0:
            body = str(a)
        elif i == 1:
            body = "x" if a == 1 else "%dx" % a
        else:
            body = "x%d" % i if a == 1 else "%dx%d" % (a, i)
        parts.append(sign + body)
    return "".join(parts)


def rat_str(q):
    q = Fraction(q)
    return str(q.numerator) if q.denominator == 1 else "%d/%d" % (q.numerator, q.denominator)


def emit(record):
    os.makedirs(OUT_DIR, exist_ok=True)
    path = os.path.join(OUT_DIR, record["label"] + ".json")
    with open(path, "w") as fh:
        json.dump(record, fh, indent=2)
        fh.write("\n")
    print("wrote", path)


def make_record(f, disc, torsion, units, subfields=(), edges=(), extensions=(),
                basis=None, reg=None):
    d = len(f) - 1
    sig = signature_of(f)
    assert sig[0] + 2 * sig[1] == d, (f, sig)
    pd = poly_disc(f) if d > 1 else 1
    if d > 1:
        idx2, rem = divmod(pd, disc)
        assert rem == 0 and int(math.isqrt(idx2)) ** 2 == idx2, (f, pd, disc)
    if basis is None:
        basis = [[Fraction(1 if i == j else 0) for j in range(d)] for i in range(d)]
    for u in units:
        den = 1
        for c in u:
            den = den * Fraction(c).denominator // math.gcd(den, Fraction(c).denominator)
        scaled = [int(Fraction(c) * den) for c in u]
        n = norm_of(f, scaled)
        assert abs(n) == den ** d, (f, u, n)
    r = sig[0] + sig[1] - 1
    assert len(units) == r, (f, len(units), r)
    if reg is None:
        reg = regulator(f, units)
    if r > 0:
        assert reg > mp.mpf("0.2"), (f, reg)
    rec = {
        "label": slug(f) if d > 1 else "q",
        "provenance": {"oracle": ORACLE, "generated": GENERATED},
        "poly": list(f),
        "discriminant": disc,
        "signature": list(sig),
        "integral_basis": [[rat_str(x) for x in row] for row in basis],
        "torsion_order": torsion,
        "fundamental_units": [[rat_str(x) for x in u] for u in units],
        "regulator_hint": mp.nstr(reg, 30),
        "subfields": [dict(s) for s in subfields],
        "lattice_edges": [list(e) for e in edges],
    }
    if extensions:
        rec["extensions"] = list(extensions)
    return rec


def verify_subfield_witness(f, sub_poly, witness):
    """Exact check: sub_poly(witness) == 0 in Z[x]/(f)."""
    acc = [Fraction(0)] * (len(f) - 1)
    power = [Fraction(1)] + [Fraction(0)] * (len(f) - 2)
    for c in sub_poly:
        acc = [a + Fraction(c) * p for a, p in zip(acc, power)]
        power = poly_mod(poly_mul(power, [Fraction(x) for x in witness]), f)
    assert all(a == 0 for a in acc), (f, sub_poly, witness)


def unit_box_search(f, bound):
    d = len(f) - 1
    out = []
    for c in itertools.product(range(-bound, bound + 1), repeat=d):
        if all(x == 0 for x in c):
            continue
        if abs(norm_of(f, list(c))) == 1:
            out.append(list(c))
    return out


def height(f, u):
    d = len(f) - 1
    s = mp.mpf(0)
    for z in embeddings(f):
        a = abs(embed(u, z))
        if a > 1:
            s += mp.log(a)
    return s / d


def is_torsion(f, u):
    return all(abs(abs(embed(u, z)) - 1) < mp.mpf(10) ** -40 for z in embeddings(f))


def minimal_unit_system(f, bound):
    """Smallest-regulator independent system among box-search units."""
    sig = signature_of(f)
    r = sig[0] + sig[1] - 1
    units = [u for u in unit_box_search(f, bound) if not is_torsion(f, u)]
    units.sort(key=lambda u: (height(f, u), u))
    units = units[:48]
    reps = place_reps(f)
    best = None
    for combo in itertools.combinations(units, r):
        rows = []
        for z, dw in reps[:r]:
            rows.append([dw * mp.log(abs(embed(u, z))) for u in combo])
        dd = abs(det(rows))
        if dd > mp.mpf(10) ** -30 and (best is None or dd < best[0] * (1 - mp.mpf(10) ** -30)):
            best = (dd, combo)
    assert best is not None, f
    return list(best[1]), best[0]


# ----------------------------------------------------------------------
# the rationals
# ----------------------------------------------------------------------

def rationals_record():
    return {
        "label": "q",
        "provenance": {"oracle": ORACLE, "generated": GENERATED},
        "poly": [0, 1],
        "discriminant": 1,
        "signature": [1, 0],
        "integral_basis": [["1"]],
        "torsion_order": 2,
        "fundamental_units": [],
        "regulator_hint": "1",
        "subfields": [],
        "lattice_edges": [],
    }


# ----------------------------------------------------------------------
# quadratic fields
# ----------------------------------------------------------------------

REAL_QUAD_M = [2, 3, 5, 6, 7, 10, 11, 13, 14, 15, 17, 19, 21, 22, 23, 26, 29, 30, 31, 33]


def pell_fundamental(m):
    """Minimal (x, y), y >= 1 with x^2 - m y^2 = +-4 (m = 1 mod 4) or +-1."""
    targets = (4,) if m % 4 == 1 else (1,)
    y = 1
    while True:
        for t in targets:
            for s in (-t, t):
                x2 = m * y * y + s
                if x2 > 0:
                    x = math.isqrt(x2)
                    if x * x == x2 and (m % 4 != 1 or (x - y) % 2 == 0):
                        return x, y
        y += 1


def real_quadratic(m):
    if m % 4 == 1:
        f = [-(m - 1) // 4, -1, 1]          # x^2 - x - (m-1)/4, theta = (1+sqrt m)/2
        disc = m
        x, y = pell_fundamental(m)
        unit = [(x - y) // 2, y]
    else:
        f = [-m, 0, 1]
        disc = 4 * m
        x, y = pell_fundamental(m)
        unit = [x, y]
    ext = None
    if m in (2, 3, 5, 6, 7):
        ext = {
            "base_label": "q",
            "embedding_matrix": [["1"], ["0"]],
            "relative_units": [[rat_str(c) for c in unit]],
        }
    return make_record(f, disc, 2, [unit], extensions=[ext] if ext else ())


IMAG_QUADS = [
    ([1, 0, 1], -4, 4),     # Q(i)
    ([1, -1, 1], -3, 6),    # Q(zeta_3)
    ([5, 0, 1], -20, 2),    # Q(sqrt -5)
]


# ----------------------------------------------------------------------
# cubic fields
# ----------------------------------------------------------------------

def cubic_records():
    out = []
    # maximal real subfield of Q(zeta_7): units theta, theta^2 - 2
    out.append(make_record([-1, -2, 1, 1], 49, 2, [[0, 1, 0], [-2, 0, 1]]))
    # discriminant -23 cubic: unit theta
    out.append(make_record([-1, -1, 0, 1], -23, 2, [[0, 1, 0]]))
    # Q(cbrt 2): unit theta - 1
    out.append(make_record([-2, 0, 0, 1], -108, 2, [[-1, 1, 0]]))
    return out


# ----------------------------------------------------------------------
# quartic fields
# ----------------------------------------------------------------------

def biquadratic_record():
    f = [1, 0, -10, 0, 1]          # theta = sqrt2 + sqrt3
    basis = [
        [Fraction(1), Fraction(0), Fraction(0), Fraction(0)],
        [Fraction(0), Fraction(-9, 2), Fraction(0), Fraction(1, 2)],    # sqrt2
        [Fraction(0), Fraction(11, 2), Fraction(0), Fraction(-1, 2)],   # sqrt3
        [Fraction(-5, 4), Fraction(-9, 4), Fraction(1, 4), Fraction(1, 4)],  # (sqrt2+sqrt6)/2
    ]
    sqrt2 = basis[1]
    verify_subfield_witness(f, [-2, 0, 1], sqrt2)
    verify_subfield_witness(f, [-3, 0, 1], basis[2])
    units = [
        [Fraction(1), Fraction(-9, 2), Fraction(0), Fraction(1, 2)],    # 1 + sqrt2
        [Fraction(0), Fraction(1), Fraction(0), Fraction(0)],           # sqrt2 + sqrt3
        basis[3],                                                       # (sqrt2+sqrt6)/2
    ]
    subf = [
        {"label": "x2-2", "poly": [-2, 0, 1], "discriminant": 8, "signature": [2, 0]},
        {"label": "x2-3", "poly": [-3, 0, 1], "discriminant": 12, "signature": [2, 0]},
        {"label": "x2-6", "poly": [-6, 0, 1], "discriminant": 24, "signature": [2, 0]},
    ]
    ext = {
        "base_label": "x2-2",
        "embedding_matrix": [[rat_str(Fraction(1) if i == 0 else Fraction(0)),
                              rat_str(sqrt2[i])] for i in range(4)],
        "relative_units": [[rat_str(c) for c in units[1]],
                           [rat_str(c) for c in units[2]]],
    }
    reg = regulator(f, units)
    return make_record(f, 2304, 2, units, subfields=subf, extensions=[ext],
                       basis=basis, reg=reg)


def zeta5_record():
    f = [1, 1, 1, 1, 1]
    phi = [0, 0, -1, -1]           # (1+sqrt5)/2 = -zeta^2 - zeta^3
    verify_subfield_witness(f, [-1, -1, 1], phi)
    subf = [{"label": "x2-x-1", "poly": [-1, -1, 1], "discriminant": 5, "signature": [2, 0]}]
    return make_record(f, 125, 10, [phi], subfields=subf)


def zeta16_plus_record():
    f = [2, 0, -4, 0, 1]           # theta = 2 cos(pi/8)
    units, reg = minimal_unit_system(f, 3)
    verify_subfield_witness(f, [-2, 0, 1], [-2, 0, 1, 0])   # sqrt2 = theta^2 - 2
    subf = [{"label": "x2-2", "poly": [-2, 0, 1], "discriminant": 8, "signature": [2, 0]}]
    return make_record(f, 2048, 2, units, subfields=subf, reg=reg)


def x4m2_record():
    f = [-2, 0, 0, 0, 1]
    units, reg = minimal_unit_system(f, 3)
    verify_subfield_witness(f, [-2, 0, 1], [0, 0, 1, 0])
    subf = [{"label": "x2-2", "poly": [-2, 0, 1], "discriminant": 8, "signature": [2, 0]}]
    return make_record(f, -2048, 2, units, subfields=subf, reg=reg)


# ----------------------------------------------------------------------
# Friedman's sextic of discriminant -10051
# ----------------------------------------------------------------------

def sextic_record():
    f = [1, -1, 2, -2, 2, -2, 1]
    units, reg = minimal_unit_system(f, 2)
    assert abs(reg - mp.mpf("0.2052164610")) < mp.mpf(10) ** -9, reg
    witness = [1, -1, 1, -2, 1, 0]
    verify_subfield_witness(f, [-1, -1, 0, 1], witness)
    subf = [{"label": "x3-x-1", "poly": [-1, -1, 0, 1], "discriminant": -23,
             "signature": [1, 1]}]
    return make_record(f, -10051, 2, units, subfields=subf, reg=reg)


def main():
    records = [rationals_record()]
    for m in REAL_QUAD_M:
        records.append(real_quadratic(m))
    for f, disc, tor in IMAG_QUADS:
        records.append(make_record(f, disc, tor, []))
    records.extend(cubic_records())
    records.append(biquadratic_record())
    records.append(zeta5_record())
    records.append(zeta16_plus_record())
    records.append(x4m2_record())
    records.append(sextic_record())
    labels = [r["label"] for r in records]
    assert len(labels) == len(set(labels))
    for r in records:
        emit(r)
    print(len(records), "records")


if __name__ == "__main__":
    main()
