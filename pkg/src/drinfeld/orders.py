"""A-orders in the Frobenius field and their fractional ideals.

Two coordinate systems coexist, with a tested change of basis:

* skew realizations in k{tau}, where endomorphism rings are extracted
  as centralizers and where the ideal action operates;
* power-basis coordinates in F[x]/(m(x)), where ideal arithmetic,
  indices, trace duals and all equality tests live.

An order carries an A-basis (as ExtElems; for endomorphism rings also
as skew polynomials, with the first basis element equal to 1), its
multiplication table over A, and the canonical HNF lattice of the basis
in power coordinates. Fractional ideals store HNF lattices in the
coordinates of their ambient order's basis, so the ambient order itself
is always the identity lattice.
"""

from __future__ import annotations

import itertools

from .apoly import APoly, RatFunc, mat_adjugate, mat_det
from .errors import (
    EmptyIdeal,
    InseparableExtension,
    InternalError,
    NonCommutativeEndomorphisms,
    TooLarge,
)
from .extfield import ExtElem, ExtensionField, _solve_over_f
from .lattices import ALattice, lattice_index
from .linalg import TrailingEchelon, nullspace, solve_linear
from .modules import DrinfeldModule
from .skew import SkewPoly


def _flatten_skew(sp: SkewPoly, height_deg: int) -> list[int]:
    n = sp.tower.n
    out = [0] * ((height_deg + 1) * n)
    for dg, coeff in enumerate(sp.coeffs):
        base = dg * n
        for comp, v in enumerate(coeff.coeffs):
            out[base + comp] = v
    return out


def _unflatten_skew(module: DrinfeldModule, vec: list[int]) -> SkewPoly:
    tower = module.tower
    n = tower.n
    coeffs = []
    for dg in range(len(vec) // n):
        coeffs.append(tower.elem(vec[dg * n : (dg + 1) * n]))
    return SkewPoly(tower, coeffs)


def centralizer_basis(module: DrinfeldModule, s: int) -> list[SkewPoly]:
    """A-basis of the centralizer of phi_T in k{tau}, first element 1.

    Works degree by degree up to the cap n*s and keeps a dimension
    ledger: at every degree the F_q-dimension of the solution space must
    match the dimension predicted by phi_{T^j}-multiples of the basis
    found so far. A mismatch is a hard error, never a silent truncation.
    """
    tower = module.tower
    fq = tower.fq
    n, r = module.n, module.rank
    cap = n * s
    ncols = (cap + 1) * n
    eq_height = cap + r

    # solution space of u phi_T - phi_T u = 0, deg u <= cap
    columns = []
    for i in range(cap + 1):
        for comp in range(n):
            coeffs = [0] * n
            coeffs[comp] = 1
            u = SkewPoly.tau_power(tower, i, tower.elem(coeffs))
            columns.append(_flatten_skew(u * module.phi_t - module.phi_t * u, eq_height))
    rows = [[columns[c][i] for c in range(ncols)] for i in range((eq_height + 1) * n)]
    sols = nullspace(fq, rows, ncols)

    ech = TrailingEchelon(fq, ncols)
    for v in sols:
        ech.insert(v)
    if ech.dim != len(sols):
        raise InternalError("centralizer solution space degenerated")
    ordered = [ech.rows[p] for p in sorted(ech.rows)]

    basis = [SkewPoly.one(tower)]
    span = TrailingEchelon(fq, ncols)
    for j in range(cap // r + 1):
        span.insert(_flatten_skew(module.phi_t_power(j), cap))
    for vec in ordered:
        res = span.reduce(vec)
        piv = span._pivot(res)
        if piv < 0:
            continue
        inv = fq.inv(res[piv])
        if inv != 1:
            res = [fq.mul(inv, v) for v in res]
        b = _unflatten_skew(module, res)
        basis.append(b)
        if len(basis) > s:
            raise InternalError("more basis elements than the predicted rank")
        for j in range((cap - b.degree) // r + 1):
            span.insert(_flatten_skew(module.phi_t_power(j) * b, cap))
    if len(basis) != s:
        raise InternalError(
            f"extracted {len(basis)} basis elements, expected {s}; degree cap too small"
        )
    if span.dim != len(sols):
        raise InternalError("degree ledger mismatch in centralizer extraction")
    return basis


def coords_in_skew_basis(
    module: DrinfeldModule, basis: list[SkewPoly], u: SkewPoly
) -> list[APoly] | None:
    """A-coordinates of u in an extracted basis, or None if u is not in
    its A-span. Degree-bounded: valid because the extraction ledger
    certifies that coordinates respect degrees up to the cap."""
    tower = module.tower
    fq = tower.fq
    r = module.rank
    cap = module.n * len(basis)
    if not u:
        return [APoly.zero(fq) for _ in basis]
    if u.degree > cap:
        raise InternalError("membership test beyond the verified degree cap")
    cols = []
    slots = []  # (basis index, T-power)
    for j, b in enumerate(basis):
        if b.degree > u.degree:
            continue
        top = (u.degree - b.degree) // r
        for a in range(top + 1):
            slots.append((j, a))
            cols.append(_flatten_skew(module.phi_t_power(a) * b, u.degree))
    if not cols:
        return None
    height = len(cols[0])
    rows = [[cols[c][i] for c in range(len(cols))] for i in range(height)]
    rhs = _flatten_skew(u, u.degree)
    sol, _ = solve_linear(fq, rows, rhs)
    if sol is None:
        return None
    polys: list[dict[int, int]] = [dict() for _ in basis]
    for (j, a), v in zip(slots, sol):
        if v:
            polys[j][a] = v
    result = []
    for j in range(len(basis)):
        if polys[j]:
            deg = max(polys[j])
            result.append(APoly(fq, [polys[j].get(i, 0) for i in range(deg + 1)]))
        else:
            result.append(APoly.zero(fq))
    return result


class AOrder:
    """An A-order in the Frobenius field, with basis and multiplication
    table over A."""

    def __init__(
        self,
        ext: ExtensionField,
        basis_ext: list[ExtElem],
        module: DrinfeldModule | None = None,
        skew_basis: list[SkewPoly] | None = None,
        tag: str = "order",
    ):
        self.ext = ext
        self.fq = ext.fq
        self.s = ext.s
        self.basis_ext = list(basis_ext)
        self.module = module
        self.skew_basis = list(skew_basis) if skew_basis is not None else None
        self.tag = tag
        gens = []
        dens = APoly.one(self.fq)
        for b in self.basis_ext:
            dens = dens * b.den
        for b in self.basis_ext:
            scale = dens.exact_div(b.den)
            gens.append([v * scale for v in b.nums])
        self.pi_lattice = ALattice.from_generators(self.fq, self.s, gens, dens)
        self.table = self._build_table()
        one = self.coords_of(ext.one())
        if one is None or any(not c.is_integral() for c in one):
            raise InternalError("order does not contain 1")
        self.one_coords = [c.to_apoly() for c in one]

    # -- coordinates --

    def coords_of(self, x: ExtElem) -> list[RatFunc] | None:
        """Coordinates of x with respect to basis_ext (None never occurs
        for a true F-basis; kept for symmetry)."""
        dens = x.den
        for b in self.basis_ext:
            dens = dens * b.den
        rows = []
        rhs = []
        for i in range(self.s):
            rows.append(
                [b.nums[i] * dens.exact_div(b.den) for b in self.basis_ext]
            )
            rhs.append(x.nums[i] * dens.exact_div(x.den))
        return _solve_over_f(rows, rhs)

    def elem_from_coords(self, coords: list[APoly], den: APoly | None = None) -> ExtElem:
        acc = self.ext.zero()
        for c, b in zip(coords, self.basis_ext):
            if c:
                acc = acc + b * self.ext.from_scalar(c)
        if den is not None and den.degree >= 0:
            return ExtElem(self.ext, list(acc.nums), acc.den * den)
        return acc

    def mul_coords(self, a: list[APoly], b: list[APoly]) -> list[APoly]:
        """Product of two integral coordinate vectors, via the table."""
        out = [APoly.zero(self.fq) for _ in range(self.s)]
        for i, ai in enumerate(a):
            if not ai:
                continue
            for j, bj in enumerate(b):
                if bj:
                    prod = ai * bj
                    vec = self.table[i][j]
                    for m in range(self.s):
                        if vec[m]:
                            out[m] = out[m] + prod * vec[m]
        return out

    def _build_table(self) -> list[list[list[APoly]]]:
        table: list[list] = [[None] * self.s for _ in range(self.s)]
        for i in range(self.s):
            for j in range(i, self.s):
                prod = self.basis_ext[i] * self.basis_ext[j]
                coords = self.coords_of(prod)
                if coords is None:
                    raise InternalError("basis product escaped the F-span")
                if any(not c.is_integral() for c in coords):
                    raise InternalError("order is not closed under multiplication")
                table[i][j] = [c.to_apoly() for c in coords]
                table[j][i] = table[i][j]
        return table

    def contains(self, x: ExtElem) -> bool:
        coords = self.coords_of(x)
        return coords is not None and all(c.is_integral() for c in coords)

    def unit_ideal(self) -> FracIdeal:
        return FracIdeal(self, ALattice.identity(self.fq, self.s))

    def basis_matrix_rows(self) -> tuple[list[list[APoly]], APoly]:
        """Rows of the basis-to-power-coordinates matrix plus denominator."""
        dens = APoly.one(self.fq)
        for b in self.basis_ext:
            dens = dens * b.den
        rows = []
        for i in range(self.s):
            rows.append([b.nums[i] * dens.exact_div(b.den) for b in self.basis_ext])
        return rows, dens

    def ideal_lattice_to_pi(self, lat: ALattice) -> ALattice:
        rows, dens = self.basis_matrix_rows()
        return lat.transform(rows, dens)

    def index_over(self, sub: AOrder) -> RatFunc:
        """chi(self / sub) for a suborder, in power coordinates."""
        return lattice_index(self.pi_lattice, sub.pi_lattice)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, AOrder)
            and self.ext == other.ext
            and self.pi_lattice == other.pi_lattice
        )

    def __hash__(self) -> int:
        return hash((self.ext, self.pi_lattice))

    def __repr__(self) -> str:
        return f"AOrder({self.tag}, s={self.s})"


def endomorphism_ring(module: DrinfeldModule) -> AOrder:
    """End_k(phi) as an A-order with explicit skew realizations.

    Requires the endomorphism ring to be commutative, which holds
    exactly when [Ftilde:F] equals the rank.
    """
    cached = getattr(module, "_end_ring", None)
    if cached is not None:
        return cached
    prof = module.profile()
    if prof.s != module.rank:
        raise NonCommutativeEndomorphisms(
            f"[Ftilde:F] = {prof.s} < rank {module.rank}"
        )
    s = prof.s
    basis_skew = centralizer_basis(module, s)
    for b in basis_skew:
        if b * module.phi_t != module.phi_t * b:
            raise InternalError("extracted element does not commute with phi_T")
    for i in range(s):
        for j in range(i + 1, s):
            if basis_skew[i] * basis_skew[j] != basis_skew[j] * basis_skew[i]:
                raise InternalError("endomorphism basis is not commutative")
    ext = prof.extension_field()
    fq = module.tower.fq
    n = module.n
    p_rows = []
    for i in range(s):
        coords = coords_in_skew_basis(module, basis_skew, SkewPoly.tau_power(module.tower, n * i))
        if coords is None:
            raise InternalError("pi power is not in the extracted basis span")
        p_rows.append(coords)
    det = mat_det(p_rows)
    if not det:
        raise InternalError("pi powers are not an F-basis")
    p_t = [[p_rows[j][i] for j in range(s)] for i in range(s)]
    adj_t = mat_adjugate(p_t)
    basis_ext = []
    for j in range(s):
        basis_ext.append(ExtElem(ext, [adj_t[i][j] for i in range(s)], det))
    order = AOrder(ext, basis_ext, module=module, skew_basis=basis_skew, tag="End")
    order.profile = prof  # type: ignore[attr-defined]
    module._end_ring = order  # type: ignore[attr-defined]
    return order


def minimal_frobenius_order(profile, module: DrinfeldModule) -> AOrder:
    """A[pi] = A[x]/(m(x)) in its power basis; skew basis tau^(n*i)."""
    ext = profile.extension_field()
    basis_ext = [ext.gen() ** i for i in range(ext.s)]
    skew = [SkewPoly.tau_power(module.tower, module.n * i) for i in range(ext.s)]
    return AOrder(ext, basis_ext, module=module, skew_basis=skew, tag="A[pi]")


def order_from_pi_lattice(
    ext: ExtensionField, lat: ALattice, module: DrinfeldModule | None = None, tag: str = "order"
) -> AOrder:
    basis_ext = [ExtElem(ext, list(col), lat.den) for col in lat.cols]
    return AOrder(ext, basis_ext, module=module, tag=tag)


class FracIdeal:
    """A fractional ideal of an order, as an HNF lattice in the order's
    basis coordinates (the order itself is the identity lattice)."""

    __slots__ = ("order", "lattice")

    def __init__(self, order: AOrder, lattice: ALattice):
        self.order = order
        self.lattice = lattice

    @staticmethod
    def from_generators(order: AOrder, vectors, den: APoly | None = None) -> FracIdeal:
        """Ideal generated (as an order module) by coordinate vectors."""
        vecs = [list(v) for v in vectors]
        if not any(any(c for c in v) for v in vecs):
            raise EmptyIdeal("no nonzero generators")
        gens = []
        for v in vecs:
            for i in range(order.s):
                basis_vec = [APoly.zero(order.fq)] * order.s
                basis_vec[i] = APoly.one(order.fq)
                gens.append(order.mul_coords(basis_vec, v))
        lat = ALattice.from_generators(order.fq, order.s, gens, den)
        return FracIdeal(order, lat)

    def is_integral(self) -> bool:
        return self.lattice.den.degree == 0

    def scaled_integral(self) -> FracIdeal:
        if self.is_integral():
            return self
        return self.scale(RatFunc(self.lattice.den))

    def scale(self, r: RatFunc) -> FracIdeal:
        return FracIdeal(self.order, self.lattice.scale(r))

    def norm(self) -> RatFunc:
        """chi(order / I), extended multiplicatively to fractional ideals."""
        return RatFunc(self.lattice.det(), self.lattice.den ** self.order.s).monic_normalized()

    def norm_poly(self) -> APoly:
        return self.norm().to_apoly()

    def contains(self, coords, den: APoly | None = None) -> bool:
        return self.lattice.contains(coords, den)

    def contains_one(self) -> bool:
        return self.lattice.contains(self.order.one_coords)

    def mul(self, other: FracIdeal) -> FracIdeal:
        if self.order is not other.order and self.order != other.order:
            raise InternalError("ideal product across different orders")
        gens = []
        for a in self.lattice.cols:
            for b in other.lattice.cols:
                gens.append(self.order.mul_coords(list(a), list(b)))
        lat = ALattice.from_generators(
            self.order.fq, self.order.s, gens, self.lattice.den * other.lattice.den
        )
        return FracIdeal(self.order, lat)

    def mul_elem(self, coords: list[APoly], den: APoly | None = None) -> FracIdeal:
        """The ideal I * u for an element u given in order coordinates."""
        if not any(coords):
            raise EmptyIdeal("multiplication by zero element")
        gens = [self.order.mul_coords(list(a), coords) for a in self.lattice.cols]
        d = self.lattice.den if den is None else self.lattice.den * den
        return FracIdeal(self.order, ALattice.from_generators(self.order.fq, self.order.s, gens, d))

    def colon(self, other: FracIdeal) -> FracIdeal:
        """(self : other) = {x in Ftilde : x * other <= self}."""
        if self.order is not other.order and self.order != other.order:
            raise InternalError("colon across different orders")
        order = self.order
        fq = order.fq
        s = order.s
        # make the divisor integral; (I : bJ) = b * (I : J)
        b_den = other.lattice.den
        j_int = other.scaled_integral()
        chi = j_int.norm_poly()
        if chi.degree == 0:
            # divisor is the unit ideal
            result = FracIdeal(order, self.lattice)
        else:
            cols_i = [list(c) for c in self.lattice.cols]
            gcols = [list(c) for c in j_int.lattice.cols]
            # rho[j][k] = coordinates of iota_j * g_k in the basis of self
            rho = []
            for j in range(s):
                row = []
                for k in range(s):
                    prod = order.mul_coords(cols_i[j], gcols[k])
                    coords = self.lattice.solve(prod)
                    if any(not c.is_integral() for c in coords):
                        raise InternalError("ideal is not a module over its order")
                    row.append([c.to_apoly() for c in coords])
                rho.append(row)
            degc = chi.degree
            nunk = s * degc
            # condition: sum_j w_j * rho[j][k] = 0 mod chi, per k and coordinate
            cols_sys = []
            for j in range(s):
                for a in range(degc):
                    colvec = []
                    ta = APoly(fq, [0] * a + [1])
                    for k in range(s):
                        for m in range(s):
                            entry = (rho[j][k][m] * ta) % chi
                            colvec.extend([entry[i] for i in range(degc)])
                    cols_sys.append(colvec)
            height = len(cols_sys[0])
            rows_sys = [[cols_sys[c][i] for c in range(nunk)] for i in range(height)]
            kernel = nullspace(fq, rows_sys, nunk)
            gens = []
            for w in kernel:
                wpolys = [APoly(fq, w[j * degc : (j + 1) * degc]) for j in range(s)]
                vec = [APoly.zero(fq)] * s
                for j in range(s):
                    if wpolys[j]:
                        for m in range(s):
                            if cols_i[j][m]:
                                vec[m] = vec[m] + wpolys[j] * cols_i[j][m]
                gens.append(vec)
            for j in range(s):
                gens.append([chi * v for v in cols_i[j]])
            lat = ALattice.from_generators(fq, s, gens, chi * self.lattice.den)
            result = FracIdeal(order, lat)
        if b_den.degree > 0:
            result = result.scale(RatFunc(b_den))
        return result

    def multiplicator_ring(self) -> AOrder:
        """O_I = (I : I), an overorder of the ambient order."""
        oi = self.colon(self)
        pi_lat = self.order.ideal_lattice_to_pi(oi.lattice)
        return order_from_pi_lattice(self.order.ext, pi_lat, module=self.order.module, tag="O_I")

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, FracIdeal)
            and self.order == other.order
            and self.lattice == other.lattice
        )

    def __hash__(self) -> int:
        return hash(self.lattice)

    def __repr__(self) -> str:
        return f"FracIdeal(norm={self.norm().text()})"


# -- Gorenstein testing through the trace dual --


def trace_dual(order: AOrder) -> FracIdeal:
    """The lattice {x : Tr(x * order) <= A} in order coordinates."""
    if not order.ext.is_separable():
        raise InseparableExtension("trace form degenerates; dual undefined")
    s = order.s
    traces = []
    for b in order.basis_ext:
        tr = b.trace()
        if not tr.is_integral():
            raise InternalError("trace of an integral element escaped A")
        traces.append(tr.to_apoly())
    tmat = []
    for i in range(s):
        row = []
        for j in range(s):
            acc = APoly.zero(order.fq)
            for m in range(s):
                c = order.table[i][j][m]
                if c:
                    acc = acc + c * traces[m]
            row.append(acc)
        tmat.append(row)
    det = mat_det(tmat)
    if not det:
        raise InseparableExtension("trace form is singular")
    adj = mat_adjugate(tmat)
    cols = [[adj[i][j] for i in range(s)] for j in range(s)]
    lat = ALattice.from_generators(order.fq, s, cols, det)
    return FracIdeal(order, lat)


def gorenstein_conductor(order: AOrder) -> APoly:
    """chi(order / C) for C = dual * (order : dual); the order is
    Gorenstein at ell exactly when ell does not divide this index."""
    dual = trace_dual(order)
    c = dual.mul(order.unit_ideal().colon(dual))
    if not c.is_integral():
        raise InternalError("Gorenstein conductor ideal is not integral")
    return c.norm_poly()

def is_gorenstein_at(order: AOrder, ell: APoly) -> bool:
    if not ell.is_irreducible():
        raise ValueError("Gorenstein test requires a prime of A")
    return bool(gorenstein_conductor(order) % ell)


def is_gorenstein(order: AOrder) -> bool:
    return gorenstein_conductor(order).degree == 0


# -- bounded enumeration and linear equivalence --


def integral_ideals(order: AOrder, max_norm_deg: int):
    """Every integral ideal I with deg chi(order/I) <= max_norm_deg,
    exactly once, in a deterministic order."""
    s = order.s
    fq = order.fq
    q = fq.q
    one = APoly.one(fq)
    zero = APoly.zero(fq)
    basis_vecs = []
    for i in range(s):
        v = [zero] * s
        v[i] = one
        basis_vecs.append(v)
    for total in range(max_norm_deg + 1):
        for diag_degs in _compositions(total, s):
            offslots = []
            for i in range(s):
                for j in range(i + 1, s):
                    offslots.append((i, j, diag_degs[i]))
            work = q ** (sum(diag_degs) + sum(sl[2] for sl in offslots))
            if work > 10**6:
                raise TooLarge("ideal enumeration beyond desk scale")
            diag_iters = [list(_monic_of_degree(fq, d)) for d in diag_degs]
            off_iters = [list(_polys_below_degree(fq, d)) for (_, _, d) in offslots]
            for diag in itertools.product(*diag_iters):
                for offs in itertools.product(*off_iters):
                    cols = [[zero] * s for _ in range(s)]
                    for i in range(s):
                        cols[i][i] = diag[i]
                    for (slot, (i, j, _)) in zip(offs, offslots):
                        cols[j][i] = slot
                    if not _closed_under_order(order, cols, basis_vecs):
                        continue
                    lat = ALattice(fq, s, [tuple(c) for c in cols], one)
                    yield FracIdeal(order, lat)


def _compositions(total: int, parts: int):
    if parts == 1:
        yield (total,)
        return
    for first in range(total + 1):
        for rest in _compositions(total - first, parts - 1):
            yield (first,) + rest


def _monic_of_degree(fq, d: int):
    for tail in itertools.product(range(fq.q), repeat=d):
        yield APoly(fq, list(tail) + [1])


def _polys_below_degree(fq, d: int):
    if d == 0:
        yield APoly.zero(fq)
        return
    for tup in itertools.product(range(fq.q), repeat=d):
        yield APoly(fq, list(tup))


def _closed_under_order(order: AOrder, cols, basis_vecs) -> bool:
    lat = ALattice(order.fq, order.s, [tuple(c) for c in cols], APoly.one(order.fq))
    for bv in basis_vecs:
        for c in cols:
            prod = order.mul_coords(bv, list(c))
            if not lat.contains(prod):
                return False
    return True


def lin_equiv(ideal: FracIdeal, other: FracIdeal, bound_deg: int = 2):
    """Linear equivalence test: ("yes", u) with ideal = other * u exactly,
    ("no", None) certified by failure of weak equivalence, or
    ("unknown", None) when the search bound is exhausted."""
    order = ideal.order
    if ideal == other:
        return "yes", order.ext.one()
    quot = ideal.colon(other)
    quot_rev = other.colon(ideal)
    if not quot.mul(quot_rev).contains_one():
        return "no", None
    target = (ideal.norm() / other.norm()).monic_normalized()
    s = order.s
    fq = order.fq
    count = fq.q ** (s * (bound_deg + 1))
    if count > 5 * 10**5:
        raise TooLarge("linear-equivalence search space beyond desk scale")
    cols = [list(c) for c in quot.lattice.cols]
    den = quot.lattice.den
    coeff_space = list(itertools.product(range(fq.q), repeat=bound_deg + 1))
    for combo in itertools.product(coeff_space, repeat=s):
        if all(all(v == 0 for v in c) for c in combo):
            continue
        coords = [APoly.zero(fq)] * s
        for idx in range(s):
            c = APoly(fq, list(combo[idx]))
            if c:
                for m in range(s):
                    if cols[idx][m]:
                        coords[m] = coords[m] + c * cols[idx][m]
        if not any(coords):
            continue
        u = order.elem_from_coords(coords, den)
        if not u:
            continue
        if u.norm().monic_normalized() != target:
            continue
        if other.mul_elem(coords, den) == ideal:
            return "yes", u
    return "unknown", None


def is_principal(ideal: FracIdeal, bound_deg: int = 2):
    return lin_equiv(ideal, ideal.order.unit_ideal(), bound_deg)
