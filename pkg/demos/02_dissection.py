"""Walk-through of the 3-dissection machinery.

Splitting a series by residue class of the exponent mod 3 is the engine
behind the new closed forms: the bilateral Appell-Lerch sum attached to
omega splits into three components, each of which is either an eta
quotient or a smaller Appell-Lerch sum, and the constants assemble to
-2i/sqrt(3).
"""

from mockq import Cyc24, euler_E
from mockq.dissect import (
    Y_components,
    Y_sums,
    e_quotients,
    eta3diss_sides,
    mudiss_sides,
    newomega_assembly_constant,
    zeta_bracket_sides,
)

ORDER = 20
CAP = 24 * ORDER + 48


def show(label, ok):
    print("%-46s %s" % (label, "ok" if ok else "MISMATCH"))


def main():
    print("== dissect() on a plain series ==")
    E = euler_E(1, CAP)
    parts = [E.dissect(3, j) for j in range(3)]
    rebuilt = None
    for j, p in enumerate(parts):
        piece = p.compose_power(3).shift(24 * j).truncate(24 * ORDER)
        rebuilt = piece if rebuilt is None else rebuilt + piece
    ok, _ = rebuilt.eq_to(E.truncate(24 * ORDER), ORDER - 2)
    show("(q;q)_inf reassembles from its three parts", ok)

    print()
    print("== eta-quotient 3-dissection ==")
    lhs, rhs = eta3diss_sides(CAP)
    ok, _ = lhs.eq_to(rhs, ORDER)
    show("E(q)^2/E(q^2) splits into e0 - 2q e1 + q^2 e2", ok)
    e0, e1, e2 = e_quotients(24 * 6 + 1)
    print("   e0 starts:", [int(e0.coeff(24 * n).as_rational()) for n in range(5)])
    print("   e1 starts:", [int(e1.coeff(24 * n).as_rational()) for n in range(5)])
    print("   e2 starts:", [int(e2.coeff(24 * n).as_rational()) for n in range(5)])

    print()
    print("== Appell-Lerch sum dissection ==")
    ys = Y_sums(CAP)
    yk = Y_components(CAP)
    for j in range(3):
        rebuilt = None
        for k in range(3):
            piece = yk[(j, k)].compose_power(3).shift(24 * k)
            piece = piece.truncate(24 * ORDER)
            rebuilt = piece if rebuilt is None else rebuilt + piece
        ok, _ = rebuilt.eq_to(ys[j].truncate(rebuilt.cap), ORDER - 2)
        show("Y_%d rebuilt from its three components" % j, ok)
    for part in ("i", "ii", "iii", "iv", "v", "vi"):
        oks = []
        for lhs, rhs in mudiss_sides(part, CAP):
            ok, _ = lhs.eq_to(rhs, ORDER)
            oks.append(ok)
        show("component relation (%s)" % part, all(oks))

    print()
    print("== roots of unity do the bookkeeping ==")
    lhs, rhs = zeta_bracket_sides(CAP)
    ok, _ = lhs.eq_to(rhs, ORDER)
    show("zeta3-bracket picks out one residue class", ok)
    c = newomega_assembly_constant()
    show("constant terms cancel to zero exactly", c == Cyc24(0))


if __name__ == "__main__":
    main()
