"""Independent sympy oracle for the split-octonion tables.

Recomputes, with symbolic algebra, the values frozen into the C++ tests:
derivation/stabilizer dimensions, the Engel pairing scale, and the
degenerate-form regression fixture.
"""
import itertools
import sympy as sp

I, s2 = sp.I, sp.sqrt(2)

# Multiplication table in basis (y2,y3,y4,y5,y6,y1,y7); entries as
# (real, {y_index: coeff}) with y indices 1..7.
order2 = [2, 3, 4, 5, 6, 1, 7]
raw = {
    (2, 3): (0, {1: -s2}), (2, 4): (0, {6: s2}), (2, 5): (-1, {7: I}), (2, 7): (0, {2: -I}),
    (3, 2): (0, {1: s2}), (3, 4): (0, {5: -s2}), (3, 6): (-1, {7: I}), (3, 7): (0, {3: -I}),
    (4, 2): (0, {6: -s2}), (4, 3): (0, {5: s2}), (4, 1): (-1, {7: I}), (4, 7): (0, {4: -I}),
    (5, 2): (-1, {7: -I}), (5, 6): (0, {4: -s2}), (5, 1): (0, {3: s2}), (5, 7): (0, {5: I}),
    (6, 3): (-1, {7: -I}), (6, 5): (0, {4: s2}), (6, 1): (0, {2: -s2}), (6, 7): (0, {6: I}),
    (1, 4): (-1, {7: -I}), (1, 5): (0, {3: -s2}), (1, 6): (0, {2: s2}), (1, 7): (0, {1: I}),
    (7, 2): (0, {2: I}), (7, 3): (0, {3: I}), (7, 4): (0, {4: I}), (7, 5): (0, {5: -I}),
    (7, 6): (0, {6: -I}), (7, 1): (0, {1: -I}), (7, 7): (-1, {}),
}


def table_y():
    """8x8x8 structure constants on (1, y1..y7)."""
    T = [[[0] * 8 for _ in range(8)] for _ in range(8)]
    for a in range(8):
        T[0][a][a] = 1
        T[a][0][a] = 1
    for (a, b), (re, im) in raw.items():
        T[a][b][0] = re
        for k, c in im.items():
            T[a][b][k] = c
    return T


def mul(T, x, y):
    out = [0] * 8
    for a in range(8):
        if x[a] == 0:
            continue
        for b in range(8):
            if y[b] == 0:
                continue
            for k in range(8):
                if T[a][b][k] != 0:
                    out[k] += x[a] * y[b] * T[a][b][k]
    return [sp.nsimplify(sp.expand(v)) for v in out]


def unit(i):
    v = [0] * 8
    v[i] = 1
    return v


T = table_y()

# Alternativity check on basis: (xx)y = x(xy) for x = sums of pairs.
def is_alternative(T):
    for a, b in itertools.product(range(1, 8), repeat=2):
        for c in range(1, 8):
            x = [0] * 8
            x[a] += 1
            x[b] += 1
            y = unit(c)
            lhs = mul(T, mul(T, x, x), y)
            rhs = mul(T, x, mul(T, x, y))
            if any(sp.simplify(l - r) != 0 for l, r in zip(lhs, rhs)):
                return False, (a, b, c)
    return True, None


def derivations(T, invariant_subspaces=()):
    syms = sp.symbols("d0:49")
    D = sp.Matrix(7, 7, syms)  # column j = D(y_{j+1}) in y-coords

    def Dv(v):  # v over (1,y1..y7), D(1)=0
        im = sp.Matrix(v[1:])
        r = D * im
        return [0] + list(r)

    eqs = []
    for a in range(1, 8):
        for b in range(1, 8):
            lhs = Dv(mul(T, unit(a), unit(b)))
            r1 = mul(T, Dv(unit(a)), unit(b))
            r2 = mul(T, unit(a), Dv(unit(b)))
            for k in range(8):
                e = sp.expand(lhs[k] - r1[k] - r2[k])
                if e != 0:
                    eqs.append(e)
    for W in invariant_subspaces:
        for j in W:
            for i in range(1, 8):
                if i not in W:
                    eqs.append(D[i - 1, j - 1])
    A, _ = sp.linear_eq_to_matrix(eqs, syms)
    return 49 - A.rank(simplify=True)


def omega(T, a, b, c):
    p = mul(T, mul(T, unit(a), unit(b)), unit(c))
    return sp.simplify(-p[0])


def engel(form):
    # form: dict sorted triple -> value (indices 0..6)
    def val(i, j, k):
        idx = [i, j, k]
        if len(set(idx)) < 3:
            return 0
        perm_sign = sp.combinatorics.Permutation([sorted(idx).index(t) for t in idx]).signature()
        return perm_sign * form.get(tuple(sorted(idx)), 0)

    def contract(x):
        return {(a, b): val(x, a, b) for a in range(7) for b in range(a + 1, 7)}

    def coeff(al, be):
        total = 0
        for (a, b), va in al.items():
            if va == 0:
                continue
            for (c, d), vb in be.items():
                if vb == 0 or len({a, b, c, d}) < 4:
                    continue
                rest = tuple(sorted(set(range(7)) - {a, b, c, d}))
                vg = form.get(rest, 0)
                if vg == 0:
                    continue
                seq = [a, b, c, d, *rest]
                sign = sp.combinatorics.Permutation(seq).signature()
                total += sign * va * vb * vg
        return sp.simplify(total)

    return sp.Matrix(7, 7, lambda x, y: coeff(contract(x), contract(y)))


if __name__ == "__main__":
    import sympy.combinatorics  # noqa: F401
    print("alternative:", is_alternative(T))
    print("derivation dim:", derivations(T))
    print("sl3 stabilizer dim:", derivations(T, [(2, 3, 4), (5, 6, 1)]))
    print("so4 stabilizer dim:", derivations(T, [(1, 2, 4, 5), (3, 6, 7)]))
    for basis, order in (("B2", order2), ("B3", [1, 2, 4, 5, 3, 6, 7])):
        nz = {}
        for i, j, k in itertools.combinations(range(7), 3):
            v = omega(T, order[i], order[j], order[k])
            if v != 0:
                nz[(order[i], order[j], order[k])] = v
        print(basis, "nonzero omega:", nz)
    # Engel pairing in B1 index order (y1..y7).
    form = {}
    for i, j, k in itertools.combinations(range(7), 3):
        v = omega(T, i + 1, j + 1, k + 1)
        if v != 0:
            form[(i, j, k)] = v
    B = engel(form)
    print("B_omega (B1):", B)
    print("det:", sp.simplify(B.det()))
    form6 = {t: v for t, v in form.items() if 6 not in t}
    B6 = engel(form6)
    print("B_omega without y7 entries:", B6, "det", sp.simplify(B6.det()))
    # In B2 ordering
    form2 = {}
    for i, j, k in itertools.combinations(range(7), 3):
        v = omega(T, order2[i], order2[j], order2[k])
        if v != 0:
            form2[(i, j, k)] = v
    B2m = engel(form2)
    print("B_omega (B2):", B2m)
    form2_6 = {t: v for t, v in form2.items() if 6 not in t}
    print("B2 without index 7 det:", sp.simplify(engel(form2_6).det()))


def b0_table():
    """Transport the y-table to e-coordinates through P (columns are y_j in e)."""
    h = s2 / 2
    P = sp.Matrix([
        [0, 1, 0, 0, 1, 0, 0],
        [1, 0, 0, 1, 0, 0, 0],
        [0, 0, 1, 0, 0, 1, 0],
        [0, -I, 0, 0, I, 0, 0],
        [-I, 0, 0, I, 0, 0, 0],
        [0, 0, -I, 0, 0, I, 0],
        [0, 0, 0, 0, 0, 0, s2],
    ]) * h
    Pinv = sp.simplify(P.inv())
    out = {}
    for a in range(7):
        for b in range(7):
            ya = [0] + list(Pinv[:, a])
            yb = [0] + list(Pinv[:, b])
            prod = mul(T, ya, yb)
            e = sp.simplify(P * sp.Matrix(prod[1:]))
            out[(a + 1, b + 1)] = (sp.simplify(prod[0]), list(e))
    return P, out


def fano_report():
    _, tab = b0_table()
    lines = set()
    for (a, b), (re, im) in tab.items():
        if a < b:
            nz = [(k + 1, v) for k, v in enumerate(im) if v != 0]
            assert re == 0 and len(nz) == 1, (a, b, re, im)
            lines.add(tuple(sorted((a, b, nz[0][0]))))
            print(f"e{a}e{b} = {nz[0][1]} e{nz[0][0]}")
    print("lines:", sorted(lines))
