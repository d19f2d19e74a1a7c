"""JSON schemas and report assembly for the command-line tools.

Field spec:   {"p": 2, "e": 1, "h": [0, 1], "n": 4, "g": [1, 1, 0, 0, 1]}
Module spec:  {"field": {...}, "phi_T": [[...], [...], ...]}
Ideal spec:   {"generators": [[...], ...]}  (A-coordinate vectors
              relative to the computed endomorphism basis, in the order
              the endring report emits it)

Coefficient arrays are little-endian. F_q scalars are plain integers
mod p when e = 1 and little-endian arrays over F_p otherwise.
"""

from __future__ import annotations

import json

from .apoly import APoly
from .errors import InseparableExtension
from .fields import FieldTower, KElem
from .invariants import FrobeniusProfile
from .lattices import lattice_index
from .modules import DrinfeldModule
from .orders import (
    AOrder,
    FracIdeal,
    endomorphism_ring,
    gorenstein_conductor,
    minimal_frobenius_order,
)
from .apoly import prime_divisors
from .skew import SkewPoly


def dumps_canonical(obj) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))


# -- scalars --


def scalar_to_json(tower_or_fq, v: int):
    fq = getattr(tower_or_fq, "fq", tower_or_fq)
    if fq.e == 1:
        return v
    return fq._digits(v)


def scalar_from_json(fq, data) -> int:
    if isinstance(data, int):
        if fq.e == 1:
            return data % fq.q
        return fq._encode([data % fq.p] + [0] * (fq.e - 1))
    digits = [int(c) % fq.p for c in data]
    if len(digits) > fq.e:
        raise ValueError("scalar has too many base-field digits")
    return fq._encode(digits + [0] * (fq.e - len(digits)))


def kelem_to_json(tower: FieldTower, x: KElem):
    return [scalar_to_json(tower.fq, c) for c in x.coeffs]


def kelem_from_json(tower: FieldTower, data) -> KElem:
    if isinstance(data, int):
        data = [data]
    coeffs = [scalar_from_json(tower.fq, c) for c in data]
    if len(coeffs) > tower.n:
        raise ValueError("element has more coordinates than [k : F_q]")
    return tower.elem(coeffs)


def apoly_to_json(a: APoly):
    return [scalar_to_json(a.fq, c) for c in a.coeffs]


def apoly_from_json(fq, data) -> APoly:
    if isinstance(data, int):
        data = [data]
    return APoly(fq, [scalar_from_json(fq, c) for c in data])


# -- towers and modules --


def field_to_json(tower: FieldTower) -> dict:
    return {
        "p": tower.p,
        "e": tower.e,
        "h": list(tower.fq.h),
        "n": tower.n,
        "g": [scalar_to_json(tower.fq, c) for c in tower.g],
    }


def field_from_json(data: dict) -> FieldTower:
    p = int(data["p"])
    e = int(data["e"])
    n = int(data["n"])
    h = [int(c) % p for c in data["h"]]
    # g coefficients may be ints (e = 1) or digit arrays
    from .fields import Fq

    fq = Fq(p, e, tuple(h))
    g = [scalar_from_json(fq, c) for c in data["g"]]
    return FieldTower(p, e, h, n, g)


def module_to_json(module: DrinfeldModule) -> dict:
    return {
        "field": field_to_json(module.tower),
        "phi_T": [kelem_to_json(module.tower, c) for c in module.coeff_vector()],
    }


def module_from_json(data: dict) -> DrinfeldModule:
    tower = field_from_json(data["field"])
    coeffs = [kelem_from_json(tower, c) for c in data["phi_T"]]
    return DrinfeldModule(tower, SkewPoly(tower, coeffs))


def ideal_generators_from_json(order: AOrder, data: dict) -> FracIdeal:
    gens = []
    for vec in data["generators"]:
        if len(vec) > order.s:
            raise ValueError("generator vector longer than the basis")
        coords = [apoly_from_json(order.fq, c) for c in vec]
        coords += [APoly.zero(order.fq)] * (order.s - len(coords))
        gens.append(coords)
    return FracIdeal.from_generators(order, gens)


# -- reports --


def analyze_report(module: DrinfeldModule) -> dict:
    prof: FrobeniusProfile = module.profile()
    return {
        "p_char": module.char_prime.text(),
        "m": prof.min_poly_text(),
        "m_coeffs": [apoly_to_json(c) for c in prof.min_poly],
        "m_tilde": prof.m_tilde_text(),
        "m_tilde_coeffs": [apoly_to_json(c) for c in prof.m_tilde],
        "s": prof.s,
        "NK": prof.nk,
        "H": prof.height,
        "d": prof.d,
        "n": prof.n,
        "r": prof.r,
        "ordinary": prof.is_ordinary,
        "locally_maximal": prof.is_locally_maximal,
        "lhs": prof.lhs,
        "rhs": prof.rhs,
        "invariant_solutions": sorted(list(t) for t in prof.invariant_solutions),
        "end_ring_commutative": prof.end_ring_commutative,
        "corollaries": prof.corollary_checks(),
    }


def endring_report(module: DrinfeldModule) -> dict:
    order = endomorphism_ring(module)
    prof = module.profile()
    minimal = minimal_frobenius_order(prof, module)
    index = lattice_index(order.pi_lattice, minimal.pi_lattice).to_apoly()
    basis = []
    for skew, ext in zip(order.skew_basis, order.basis_ext):
        basis.append(
            {
                "skew": skew.text(),
                "pi_coords": [c.text() for c in ext.nums],
                "den": ext.den.text(),
            }
        )
    table = [
        [[c.text() for c in order.table[i][j]] for j in range(order.s)]
        for i in range(order.s)
    ]
    report = {
        "rank": order.s,
        "basis": basis,
        "mult_table": table,
        "index_over_minimal": index.text(),
        # endomorphism rings are always locally maximal at pi; recorded,
        # not re-verified (completions are out of scope)
        "locally_maximal_at_pi": True,
    }
    try:
        cond = gorenstein_conductor(order)
        report["gorenstein"] = cond.degree == 0
        report["gorenstein_conductor"] = cond.text()
        singular = sorted(
            {p for p in prime_divisors(index) + prime_divisors(cond) if p.degree > 0},
            key=lambda q: (q.degree, q.text()),
        )
        report["gorenstein_at"] = {p.text(): bool(cond % p) for p in singular}
    except InseparableExtension:
        report["gorenstein"] = None
        report["gorenstein_conductor"] = None
        report["gorenstein_at"] = {}
        report["gorenstein_note"] = "inseparable Frobenius field; verdict undecided"
    return report


def ideal_act_report(module: DrinfeldModule, ideal_data: dict) -> dict:
    from .action import act

    order = endomorphism_ring(module)
    ideal = ideal_generators_from_json(order, ideal_data)
    result = act(module, ideal)
    tower = module.tower
    report = {
        "u": result.u.text(),
        "u_degree": result.u.degree,
        "psi_T": [kelem_to_json(tower, c) for c in result.image.coeff_vector()],
        "psi_T_text": result.image.phi_t.text(),
        "ideal_norm": result.ideal.norm_poly().text(),
        "kernel": result.is_kernel,
        "witness": [c.text() for c in result.witness] if result.witness else None,
        "annihilator_norm": result.annihilator.norm_poly().text(),
    }
    return report


def kernel_test_report(module: DrinfeldModule, ideal_data: dict) -> dict:
    report = ideal_act_report(module, ideal_data)
    return {
        "kernel": report["kernel"],
        "witness": report["witness"],
        "ideal_norm": report["ideal_norm"],
        "annihilator_norm": report["annihilator_norm"],
    }


def render_text(report: dict, indent: int = 0) -> str:
    """Plain-text rendering of a JSON report."""
    lines = []
    pad = "  " * indent
    for key in report:
        val = report[key]
        if isinstance(val, dict):
            lines.append(f"{pad}{key}:")
            lines.append(render_text(val, indent + 1))
        elif isinstance(val, list) and val and isinstance(val[0], dict):
            lines.append(f"{pad}{key}:")
            for item in val:
                lines.append(render_text(item, indent + 1))
                lines.append(pad + "  -")
        else:
            lines.append(f"{pad}{key}: {val}")
    return "\n".join(lines)
