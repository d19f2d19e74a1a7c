"""Drinfeld modules over k and their elementary invariants.

A module is determined by the image of T, a skew polynomial whose
constant coefficient t generates the A-characteristic: the minimal
polynomial of t over F_q is the characteristic prime, of degree d
dividing n. The height is read off the tau-valuation of the image of
that prime, which is the procedure the worked examples follow.
"""

from __future__ import annotations

from functools import cached_property

from .apoly import APoly, minimal_poly_over_fq
from .errors import ContextError, InternalError
from .fields import FieldTower, KElem
from .skew import SkewPoly


class DrinfeldModule:
    def __init__(self, tower: FieldTower, phi_t: SkewPoly):
        if phi_t.tower != tower:
            raise ContextError("phi_T does not live over the given tower")
        if phi_t.degree < 1:
            raise ValueError("phi_T must have positive tau-degree")
        self.tower = tower
        self.phi_t = phi_t
        self.rank = phi_t.degree
        self.t: KElem = phi_t[0]
        self.char_prime: APoly = minimal_poly_over_fq(self.t)
        self.d = self.char_prime.degree
        self.n = tower.n
        if self.n % self.d:
            raise InternalError("degree of the characteristic prime must divide n")
        self._phi_t_powers: list[SkewPoly] = [SkewPoly.one(tower), phi_t]

    @staticmethod
    def from_coeffs(tower: FieldTower, coeffs) -> DrinfeldModule:
        return DrinfeldModule(tower, SkewPoly(tower, [tower.elem(c) if not isinstance(c, KElem) else c for c in coeffs]))

    def phi_t_power(self, j: int) -> SkewPoly:
        while len(self._phi_t_powers) <= j:
            self._phi_t_powers.append(self._phi_t_powers[-1] * self.phi_t)
        return self._phi_t_powers[j]

    def __call__(self, a: APoly) -> SkewPoly:
        """The image of a under the ring homomorphism A -> k{tau}."""
        out = SkewPoly.zero(self.tower)
        for j, c in enumerate(a.coeffs):
            if c:
                out = out + self.phi_t_power(j).left_scale(self.tower.embed_fq(c))
        return out

    @cached_property
    def frobenius(self) -> SkewPoly:
        """pi = tau^n, central in k{tau}."""
        return SkewPoly.tau_power(self.tower, self.n)

    @cached_property
    def height(self) -> int:
        """tau-valuation of the image of the characteristic prime over d."""
        img = self(self.char_prime)
        v = img.tau_valuation()
        if v < 0 or v % self.d:
            raise InternalError("tau-valuation of phi_p is not a multiple of d")
        return v // self.d

    @property
    def is_ordinary(self) -> bool:
        return self.height == 1

    def coeff_vector(self) -> tuple[KElem, ...]:
        """phi_T coefficients padded to length rank + 1."""
        return tuple(self.phi_t[i] for i in range(self.rank + 1))

    def twist(self, c: KElem) -> DrinfeldModule:
        """The isomorphic module c phi c^{-1}; g_i maps to c^(1-q^i) g_i."""
        if not c:
            raise ZeroDivisionError("twist by zero")
        cinv = c.inv()
        coeffs = []
        for i in range(self.rank + 1):
            g = self.phi_t[i]
            coeffs.append(c * g * cinv.frobq(i) if g else g)
        return DrinfeldModule(self.tower, SkewPoly(self.tower, coeffs))

    def profile(self):
        """Frobenius invariants of this module (computed once, cached)."""
        prof = getattr(self, "_profile", None)
        if prof is None:
            from .invariants import FrobeniusProfile

            prof = FrobeniusProfile(self)
            self._profile = prof
        return prof

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, DrinfeldModule)
            and self.tower == other.tower
            and self.phi_t == other.phi_t
        )

    def __hash__(self) -> int:
        return hash(self.phi_t)

    def __repr__(self) -> str:
        return f"DrinfeldModule(phi_T = {self.phi_t.text()})"


def is_isogeny(u: SkewPoly, phi: DrinfeldModule, psi: DrinfeldModule) -> bool:
    """Nonzero u with u phi_T = psi_T u."""
    if phi.tower != psi.tower or u.tower != phi.tower:
        raise ContextError("isogeny test across different towers")
    if not u:
        return False
    return u * phi.phi_t == psi.phi_t * u


def find_isomorphism(phi: DrinfeldModule, psi: DrinfeldModule) -> KElem | None:
    """Search k^x exhaustively for c with c phi_T c^{-1} = psi_T."""
    if phi.tower != psi.tower:
        raise ContextError("isomorphism test across different towers")
    if phi.rank != psi.rank:
        return None
    for c in phi.tower.elements():
        if not c:
            continue
        if is_isogeny(SkewPoly.constant(c), phi, psi):
            return c
    return None


def same_isogeny_class(phi: DrinfeldModule, psi: DrinfeldModule) -> bool:
    """Isogeny classes are separated by the minimal polynomial of pi."""
    if phi.tower != psi.tower:
        raise ContextError("isogeny-class test across different towers")
    if phi.rank != psi.rank:
        return False
    return phi.profile().min_poly == psi.profile().min_poly
