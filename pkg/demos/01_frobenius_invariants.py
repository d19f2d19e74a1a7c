"""Walk through the Frobenius invariants of a Drinfeld module.

We work over k = F_729 (q = 3, n = 6) with characteristic prime
p = T^2+T+2, take phi_T = t + tau^4, and read off the minimal
polynomial of pi = tau^6, its bivariate rewrite, the height, and the
local-maximality verdict for the minimal order A[pi].
"""

from drinfeld import APoly, DrinfeldModule, FieldTower, SkewPoly, first_irreducible, roots_in_k


def main() -> None:
    base = FieldTower(3, 1, [0, 1], 1, [0, 1])
    g = first_irreducible(base.fq, 6)
    tower = FieldTower(3, 1, [0, 1], 6, list(g.coeffs))
    print(f"k = F_{tower.q ** tower.n} defined by {g.text()}")

    prime = APoly(tower.fq, [2, 1, 1])
    t = roots_in_k(tower, prime)[0]
    print(f"characteristic prime {prime.text()}, chosen root t = {t.text()}")

    phi = DrinfeldModule(tower, SkewPoly(tower, [t] + [tower.zero] * 3 + [tower.one]))
    print(f"phi_T = {phi.phi_t.text()}   (rank {phi.rank})")

    image = phi(prime)
    print(f"phi_p = {image.text()}")
    print(f"tau-valuation {image.tau_valuation()} = H*d with d = {phi.d}, so H = {phi.height}")

    prof = phi.profile()
    print(f"m(x)  = {prof.min_poly_text()}    [Ftilde:F] = {prof.s}")
    print(f"m~(x) = {prof.m_tilde_text()}    [Ftilde:K] = {prof.nk}")
    print(
        f"ceil(n/(H*d)) = {prof.lhs}  vs  [Ftilde:K]/d = {prof.rhs}  ->  "
        f"A[pi] locally maximal at pi: {prof.is_locally_maximal}"
    )
    print(f"ramification solutions (e_K, e_F, f_F, f_K): {sorted(prof.invariant_solutions)}")


if __name__ == "__main__":
    main()
