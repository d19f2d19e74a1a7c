"""Canonical text renderings shared by reports and golden files."""

from __future__ import annotations

from .apoly import APoly


def poly_in_x_text(coeffs: list[APoly], var: str = "x", coeff_var: str = "T") -> str:
    """Render sum coeffs[i] * var^i with parenthesized composite coefficients."""
    terms = []
    for i in range(len(coeffs) - 1, -1, -1):
        c = coeffs[i]
        if not c:
            continue
        ct = c.text(coeff_var)
        if i == 0:
            terms.append(f"({ct})" if "+" in ct else ct)
            continue
        v = var if i == 1 else f"{var}^{i}"
        if c.degree == 0 and c.lc() == 1:
            terms.append(v)
        elif "+" in ct:
            terms.append(f"({ct})*{v}")
        else:
            terms.append(f"{ct}*{v}")
    return "+".join(terms) if terms else "0"
