"""Shifts that stay symbolic in the dimension."""
from __future__ import annotations

import re
from dataclasses import dataclass
from functools import total_ordering


@total_ordering
@dataclass(frozen=True)
class ShiftExpr:
    """The integer ``a + b*n``, kept symbolic in the dimension ``n``."""

    a: int = 0
    b: int = 0

    def __add__(self, other: "ShiftExpr") -> "ShiftExpr":
        return ShiftExpr(self.a + other.a, self.b + other.b)

    def __neg__(self) -> "ShiftExpr":
        return ShiftExpr(-self.a, -self.b)

    def __sub__(self, other: "ShiftExpr") -> "ShiftExpr":
        return self + (-other)

    def __lt__(self, other: "ShiftExpr") -> bool:
        return (self.b, self.a) < (other.b, other.a)

    def evaluate(self, n: int) -> int:
        return self.a + self.b * n

    def __str__(self):
        if self.b == 0:
            return str(self.a)
        nterm = {1: "n", -1: "-n"}.get(self.b, f"{self.b}n")
        if self.a == 0:
            return nterm
        if self.b > 0:
            return f"{nterm}{self.a:+d}"
        return f"{self.a}{nterm}"

    @classmethod
    def parse(cls, text: str) -> "ShiftExpr":
        """Inverse of ``str``: accepts forms like ``-1``, ``1-n``, ``2n+3``."""
        compact = text.replace(" ", "").replace("*", "")
        if not compact or not re.fullmatch(r"([+-]?\d*n?)+", compact):
            raise ValueError(f"not a shift expression: {text!r}")
        a = b = 0
        for sign, digits, has_n in re.findall(r"([+-]?)(\d*)(n?)", compact):
            if not digits and not has_n:
                if sign:
                    raise ValueError(f"not a shift expression: {text!r}")
                continue
            value = int(digits) if digits else 1
            if sign == "-":
                value = -value
            if has_n:
                b += value
            else:
                a += value
        return cls(a, b)
