"""Independent sympy reconstructions used as oracles by several test files."""

import sympy

qs = sympy.Symbol("q", positive=True)
A, Bc, E = sympy.symbols("A B E")

# explicit odd products z·T̄_n(α), keyed by (family, index, eps)
EXPLICIT_ODD = {
    1: {("C", 1, 0): qs, ("C", 0, 0): 1 / qs},
    3: {("C", 2, 0): qs**3, ("C", -1, 0): qs**-3, ("B", 0, 1): qs + 1 / qs},
    5: {("C", 3, 0): qs**5, ("C", -2, 0): qs**-5,
        ("B", 0, 1): qs**3 + qs**-3, ("B", 1, 1): qs + 1 / qs},
}


def odd_disk_product(n, a=A, b=Bc, e=E):
    """z·T̄_n(α) for odd n, rewritten with the crossing rule ``(a, b, e)``."""
    x, p = sympy.symbols("x p")
    tbar = sympy.expand(2 * sympy.chebyshevt(n, x / 2))
    odd = sympy.expand(sympy.cancel(tbar / x))
    in_p = sympy.Poly(sympy.expand(odd.subs(x, sympy.sqrt(p + 2))), p)

    def times_p(elem):
        out = {}

        def bump(key, val):
            out[key] = sympy.expand(out.get(key, 0) + val)

        for (fam, k, eps), c in elem.items():
            if fam == "C":
                bump(("C", k + 1, 0), a * c)
                bump(("C", k - 1, 0), b * c)
                bump(("B", 0, 1), e * c)
            else:
                bump(("B", k + 1, eps), c)
        return out

    total = {}
    cur = {("C", 1, 0): qs, ("C", 0, 0): 1 / qs}
    for j in range(in_p.degree() + 1):
        cj = in_p.coeff_monomial(p**j)
        for key, val in cur.items():
            total[key] = sympy.expand(total.get(key, 0) + cj * val)
        cur = times_p(cur)
    return {k: v for k, v in total.items() if sympy.simplify(v) != 0}


def crossing_rule_solutions():
    """Every (A, B, E) reproducing the explicit n = 1, 3, 5 products."""
    eqs = []
    for n, want in EXPLICIT_ODD.items():
        got = odd_disk_product(n)
        for key in set(got) | set(want):
            eqs.append(sympy.expand(got.get(key, 0) - want.get(key, 0)))
    eqs = [eq for eq in eqs if eq != 0]
    return sympy.solve(eqs, [A, Bc, E], dict=True)


def is_standard_rule(sol):
    return (
        sympy.simplify(sol[A] - qs**2) == 0
        and sympy.simplify(sol[Bc] - qs**-2) == 0
        and sympy.simplify(sol[E] - 1) == 0
    )
