"""Print the worked examples: numerals of 102, small h*-polynomials, the base-4 case."""

from numsimplex.baser import apply_H, hstar_coeff_via_comps, section_sequence, symmetric_decomposition
from numsimplex.numsys import BaseR, Factoradic, Fibonacci, encode
from numsimplex.reflexive import mixed_radix_divisor_system, q_from_divisors
from numsimplex.simplex import QSimplex, hstar, is_reflexive, omega
from numsimplex.stats import digit_stats, maxdes_poly


def main():
    for name, system in [("binary", BaseR(2)), ("ternary", BaseR(3)), ("fibonacci", Fibonacci())]:
        print(f"102 in {name}: {encode(system, 102)}")

    print()
    for q in [(1, 2, 4), (3, 8, 12), (3, 12, 48)]:
        s = QSimplex(q)
        print(f"q={q}: h* = {hstar(s)}  reflexive={is_reflexive(s)}")
    print(f"omega((3,8,12), 23) = {omega(QSimplex((3, 8, 12)), 23)}")

    print()
    fact = mixed_radix_divisor_system(Factoradic(), 5)
    print(f"factoradic divisors: {fact.d}")
    for n in range(1, 6):
        s = q_from_divisors(fact, n)
        print(f"  n={n} q={s.q} h*={hstar(s)}")
    print(f"max-descent B_4 = {maxdes_poly(4)}")

    print()
    for b in (19, 22, 31):
        ds = digit_stats(b, 4, 3)
        heights = {i: str(h) for i, h in sorted(ds.heights.items())}
        print(f"b={b} ({encode(BaseR(4), b, 3)}): support={sorted(ds.support)} heights={heights} nasc={ds.nasc}")

    a, b = symmetric_decomposition(4, 3)
    print(f"a = {a}, b = {b}")
    print("coefficients via compositions:", [hstar_coeff_via_comps(4, 3, k) for k in range(4)])
    seq = section_sequence(4, 3)
    print("sections (2,1,0):", [str(p) for p in seq])
    print("strictly interlacing:", seq.is_interlacing())
    print("last entry of H * sections:", apply_H(4, list(seq))[-1])


if __name__ == "__main__":
    main()
