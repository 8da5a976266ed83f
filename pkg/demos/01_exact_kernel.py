"""Tour of the exact computation kernel.

Coefficients live in the degree-8 power basis of the 24th cyclotomic field,
so roots of unity, sqrt(3), and i are all exact.  Series exponents live on a
1/24 grid, which lets eta prefactors and mock theta normalizations stay in
the same object as the integer-power expansions.
"""

from fractions import Fraction

from mockq import (
    Cyc24,
    QSeries,
    euler_E,
    f_eulerian,
    omega_eulerian,
    verify,
    zeta_pow,
)


def main():
    print("== cyclotomic constants ==")
    i = zeta_pow(6)
    zeta3 = zeta_pow(8)
    sqrt3 = 2 * zeta_pow(2) - zeta_pow(6)
    print("i^2          =", i * i)
    print("zeta3^3      =", zeta3 * zeta3 * zeta3)
    print("sqrt3^2      =", sqrt3 * sqrt3)
    print("-2i/sqrt3    =", (Cyc24(-2) * i) / sqrt3)

    print()
    print("== q-series on the 1/24 grid ==")
    E = euler_E(Fraction(1), 24 * 10 + 1)
    print("1/(q;q)_inf  starts:", E.inv().dump().splitlines()[0])
    print("partition numbers  :",
          [int(E.inv().coeff(24 * n).as_rational()) for n in range(10)])

    print()
    print("== third order mock theta functions ==")
    f = f_eulerian(24 * 8 + 1)
    om = omega_eulerian(24 * 8 + 1)
    print("f(q)     :", [int(f.coeff(24 * n).as_rational()) for n in range(9)])
    print("omega(q) :", [int(om.coeff(24 * n).as_rational()) for n in range(9)])

    print()
    print("== identity verification through the registry ==")
    for rec_id in ("FIDWAT", "OMEGAWATSON", "NEWOMEGA", "NEWOMEGA2", "NEWF"):
        rep = verify(rec_id, order=60)
        print("%-12s order %3d  %s  (%d ms)"
              % (rep.id, rep.order, rep.status, rep.ms))

    print()
    print("== what a failure looks like ==")
    a = QSeries.from_terms([(0, 1), (24, 2)], 24 * 4)
    b = QSeries.from_terms([(0, 1), (24, 2), (48, 1)], 24 * 4)
    ok, witness = a.eq_to(b, 3)
    grid_e, lhs_c, rhs_c = witness
    print("equal:", ok, " first mismatch at q^(%s/24): %s vs %s"
          % (grid_e, lhs_c, rhs_c))


if __name__ == "__main__":
    main()
