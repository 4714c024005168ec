"""Positional numeral scales: the names natural numbers are given."""

from __future__ import annotations

from dataclasses import dataclass

from .errors import BadNumeral


@dataclass(frozen=True)
class NumeralScale:
    base: int
    digits: tuple[str, ...]

    def __post_init__(self):
        object.__setattr__(self, "digits", tuple(self.digits))
        if self.base < 2:
            raise ValueError("base must be at least 2")
        if len(self.digits) != self.base or len(set(self.digits)) != self.base:
            raise ValueError(f"need {self.base} distinct digits, got {self.digits!r}")
        if any(len(d) != 1 for d in self.digits):
            raise ValueError("digits must be single characters")

    @classmethod
    def of_base(cls, base: int) -> "NumeralScale":
        alphabet = "0123456789abcdefghijklmnopqrstuvwxyz"
        if not 2 <= base <= len(alphabet):
            raise ValueError(f"no built-in digit alphabet for base {base}")
        return cls(base, tuple(alphabet[:base]))

    @property
    def zero(self) -> str:
        return self.digits[0]

    def render(self, n: int) -> str:
        """Canonical numeral of ``n``: no leading zeros, a single zero digit for 0."""
        if n < 0:
            raise ValueError("natural numbers only")
        if n == 0:
            return self.zero
        out = []
        while n:
            n, d = divmod(n, self.base)
            out.append(self.digits[d])
        return "".join(reversed(out))

    def value(self, numeral: str) -> int:
        """Integer named by a canonical numeral; raises :class:`BadNumeral`."""
        self.check(numeral)
        index = {d: i for i, d in enumerate(self.digits)}
        n = 0
        for ch in numeral:
            n = n * self.base + index[ch]
        return n

    def check(self, numeral: str) -> str:
        if not isinstance(numeral, str) or not numeral:
            raise BadNumeral(f"empty numeral in base {self.base}")
        bad = [ch for ch in numeral if ch not in self.digits]
        if bad:
            raise BadNumeral(f"{numeral!r} is not a base-{self.base} numeral (bad digit {bad[0]!r})")
        if len(numeral) > 1 and numeral[0] == self.zero:
            raise BadNumeral(f"{numeral!r} has a leading zero")
        return numeral

    def is_numeral(self, numeral: str) -> bool:
        try:
            self.check(numeral)
        except BadNumeral:
            return False
        return True


DECIMAL = NumeralScale(10, tuple("0123456789"))
BINARY = NumeralScale(2, ("0", "1"))
