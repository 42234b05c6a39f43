from __future__ import annotations

from dataclasses import dataclass

from .scalars import format_scalar, is_zero


@dataclass(frozen=True)
class Polynomial:
    """Polynomial with coefficients in ascending degree order."""

    coeffs: tuple

    def __post_init__(self):
        coeffs = tuple(self.coeffs)
        # drop exact zero leading terms; float near-zeros are kept
        while len(coeffs) > 1 and coeffs[-1] == 0:
            coeffs = coeffs[:-1]
        object.__setattr__(self, "coeffs", coeffs)

    @property
    def degree(self) -> int:
        if len(self.coeffs) == 1 and self.coeffs[0] == 0:
            return -1
        return len(self.coeffs) - 1

    @property
    def leading(self):
        return self.coeffs[-1]

    def is_monic(self, tol=None) -> bool:
        if tol is None:
            return self.leading == 1
        return is_zero(self.leading - 1, tol)

    def __call__(self, x):
        acc = self.coeffs[-1] * 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __str__(self):
        terms = []
        for k in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[k]
            if c == 0 and len(self.coeffs) > 1:
                continue
            mono = "" if k == 0 else ("x" if k == 1 else f"x^{k}")
            terms.append(f"{format_scalar(c)}{'*' if mono else ''}{mono}")
        return " + ".join(terms) if terms else "0"
