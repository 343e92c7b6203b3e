"""Brute-force reference values for the frozen expectations in the Rust tests.

Builds everything from first principles with sympy: the Sutherland operator
in its differential form acting on explicit symmetric monomials, and the
Cherednik-type operators acting on explicit monomials. Nothing here shares
code with the Rust implementation.

Run: python3 jack_sympy.py
"""
import itertools
import sympy as sp

b = sp.Symbol("b")


def partitions(n, maxlen, maxpart=None):
    if maxpart is None:
        maxpart = n
    if n == 0:
        yield ()
        return
    if maxlen == 0:
        return
    for k in range(min(n, maxpart), 0, -1):
        for rest in partitions(n - k, maxlen - 1, k):
            yield (k,) + rest


def m_sym(lam, zs):
    e = list(lam) + [0] * (len(zs) - len(lam))
    return sp.Add(*[sp.Mul(*[z**k for z, k in zip(zs, p)]) for p in set(itertools.permutations(e))])


def H(f, zs):
    n = len(zs)
    e = lambda g, z: z * sp.diff(g, z)
    out = sum(e(e(f, z), z) for z in zs)
    for j in range(n):
        for k in range(j + 1, n):
            out += b * sp.cancel((zs[j] + zs[k]) * (e(f, zs[j]) - e(f, zs[k])) / (zs[j] - zs[k]))
    return sp.expand(out)


def m_coords(f, zs, deg):
    poly = sp.Poly(sp.expand(f), *zs)
    return {lam: sp.factor(poly.coeff_monomial(sp.Mul(*[z**k for z, k in zip(zs, lam)])))
            for lam in partitions(deg, len(zs))}


def jack(lam, nv):
    zs = sp.symbols(f"z1:{nv+1}")
    n = sum(lam)
    basis = [mu for mu in partitions(n, nv)]
    cs = sp.symbols(f"c0:{len(basis)}")
    f = sum(c * m_sym(mu, zs) for c, mu in zip(cs, basis))
    eps = sum(l * l + b * (nv + 1 - 2 * (j + 1)) * l for j, l in enumerate(lam))
    resid = m_coords(H(f, zs) - eps * f, zs, n)
    eqs = list(resid.values()) + [cs[basis.index(tuple(lam))] - 1]
    # dominance-triangular unknowns only
    def dominated(mu, la):
        s1 = s2 = 0
        for i in range(max(len(mu), len(la))):
            s1 += mu[i] if i < len(mu) else 0
            s2 += la[i] if i < len(la) else 0
            if s1 > s2:
                return False
        return True
    for c, mu in zip(cs, basis):
        if not dominated(mu, lam):
            eqs.append(c)
    sol = sp.solve(eqs, cs, dict=True)[0]
    return {mu: sp.factor(sol[c]) for c, mu in zip(cs, basis)}


def dunkl(f, i, zs):
    out = sp.diff(f, zs[i])
    for j in range(len(zs)):
        if j != i:
            sw = f.subs({zs[i]: zs[j], zs[j]: zs[i]}, simultaneous=True)
            out += b * sp.cancel((f - sw) / (zs[i] - zs[j]))
    return sp.expand(out)


def hatD(f, i, zs):
    out = sp.expand(zs[i] * dunkl(f, i, zs)) + b * i * f
    for j in range(i):
        sw = f.subs({zs[i]: zs[j], zs[j]: zs[i]}, simultaneous=True)
        out -= b * (f - sw)
    return sp.expand(out)


def nonsym(lam, nv):
    zs = sp.symbols(f"z1:{nv+1}")
    n = sum(lam)
    comps = [c for c in itertools.product(range(n + 1), repeat=nv) if sum(c) == n]
    cs = {c: (1 if c == tuple(lam) else sp.Symbol("u_" + "_".join(map(str, c)))) for c in comps}
    f = sum(cs[c] * sp.Mul(*[z**k for z, k in zip(zs, c)]) for c in comps)
    eqs = []
    for i in range(nv):
        d = lam[i] + b * (nv - 1 - i)
        r = sp.Poly(sp.expand(hatD(f, i, zs) - d * f), *zs)
        eqs += r.coeffs()
    unknowns = [v for v in cs.values() if v != 1]
    sol = sp.solve(eqs, unknowns, dict=True)[0]
    return {c: sp.factor(sp.sympify(v).subs(sol)) for c, v in cs.items() if sp.sympify(v).subs(sol) != 0}


if __name__ == "__main__":
    print("J(2) N=2:", jack((2,), 2))
    print("J(2,1) N=3:", jack((2, 1), 3))
    print("J(3,1) N=3:", jack((3, 1), 3))
    print("J(2,2) N=3:", jack((2, 2), 3))
    print("J(3) N=2:", jack((3,), 2))
    zs = sp.symbols("z1:3")
    print("H m2 N=2:", m_coords(H(m_sym((2,), zs), zs), zs, 2))
    print("chi(1,0) N=2:", nonsym((1, 0), 2))
    print("chi(2,1,0) N=3:", nonsym((2, 1, 0), 3))
