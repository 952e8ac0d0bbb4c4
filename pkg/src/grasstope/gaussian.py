"""Exact Gaussian-rational scalars and small dense exact linear algebra.

Entries are a + b*i with Fraction parts, so equality with zero is decidable
and |z|^2 = a^2 + b^2 is an exact rational. Nothing here ever rounds.
"""

from __future__ import annotations

import re
from fractions import Fraction


class GaussianRational:
    __slots__ = ("re", "im")

    def __init__(self, re: Fraction | int = 0, im: Fraction | int = 0):
        self.re = re if isinstance(re, Fraction) else Fraction(re)
        self.im = im if isinstance(im, Fraction) else Fraction(im)

    @staticmethod
    def _coerce(value) -> "GaussianRational | None":
        if isinstance(value, GaussianRational):
            return value
        if isinstance(value, (int, Fraction)):
            return GaussianRational(value)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return GaussianRational(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return GaussianRational(self.re - o.re, self.im - o.im)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return GaussianRational(o.re - self.re, o.im - self.im)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return GaussianRational(
            self.re * o.re - self.im * o.im, self.re * o.im + self.im * o.re
        )

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        d = o.abs2()
        if not d:
            raise ZeroDivisionError("division by zero Gaussian rational")
        return GaussianRational(
            (self.re * o.re + self.im * o.im) / d,
            (self.im * o.re - self.re * o.im) / d,
        )

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o / self

    def __neg__(self):
        return GaussianRational(-self.re, -self.im)

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.re == o.re and self.im == o.im

    def __hash__(self):
        return hash((self.re, self.im))

    def __bool__(self):
        return bool(self.re) or bool(self.im)

    def conjugate(self) -> "GaussianRational":
        return GaussianRational(self.re, -self.im)

    def abs2(self) -> Fraction:
        """Exact squared modulus re^2 + im^2."""
        return self.re * self.re + self.im * self.im

    def __str__(self):
        if not self.im:
            return str(self.re)
        if not self.re:
            return _imag_str(self.im)
        sign = "+" if self.im > 0 else "-"
        return f"{self.re}{sign}{_imag_str(abs(self.im))}"

    def __repr__(self):
        return f"GaussianRational({self.re!r}, {self.im!r})"


def _imag_str(f: Fraction) -> str:
    if f == 1:
        return "i"
    if f == -1:
        return "-i"
    return f"{f}i"


G_ZERO = GaussianRational(0)
G_ONE = GaussianRational(1)

_REAL = r"[+-]?\d+(?:/\d+)?"
_FULL_RE = re.compile(rf"({_REAL})([+-](?:\d+(?:/\d+)?)?)i\Z")
_IMAG_RE = re.compile(r"([+-]?(?:\d+(?:/\d+)?)?)i\Z")
_REAL_RE = re.compile(rf"{_REAL}\Z")


def parse_gaussian(text: str) -> GaussianRational:
    """Parse `a`, `a/b`, `ci`, `a+ci`, `a/b+c/di` and signed variants."""
    s = text.strip()
    try:
        m = _FULL_RE.match(s)
        if m:
            return GaussianRational(Fraction(m.group(1)), _parse_imag(m.group(2)))
        m = _IMAG_RE.match(s)
        if m:
            return GaussianRational(0, _parse_imag(m.group(1)))
        if _REAL_RE.match(s):
            return GaussianRational(Fraction(s))
    except ZeroDivisionError as exc:
        raise ValueError(f"zero denominator in entry {text!r}") from exc
    raise ValueError(f"bad entry {text!r}")


def _parse_imag(part: str) -> Fraction:
    if part in ("", "+"):
        return Fraction(1)
    if part == "-":
        return Fraction(-1)
    return Fraction(part)


def identity_matrix(k: int) -> list[list[GaussianRational]]:
    return [[GaussianRational(int(r == c)) for c in range(k)] for r in range(k)]


def matmul(a, b) -> list[list[GaussianRational]]:
    """Product of rectangular matrices over exact scalars."""
    inner = len(b)
    width = len(b[0]) if inner else 0
    out = []
    for row in a:
        acc = [GaussianRational(0)] * width
        for t, x in enumerate(row):
            if not x:
                continue
            brow = b[t]
            for c in range(width):
                if brow[c]:
                    acc[c] = acc[c] + x * brow[c]
        out.append(acc)
    return out


def exact_rank(rows) -> int:
    """Rank by fraction-preserving elimination; entries need exact division."""
    mat = [list(r) for r in rows]
    if not mat:
        return 0
    ncols = len(mat[0])
    rank = 0
    for c in range(ncols):
        piv = next((r for r in range(rank, len(mat)) if mat[r][c]), None)
        if piv is None:
            continue
        mat[rank], mat[piv] = mat[piv], mat[rank]
        prow = mat[rank]
        pval = prow[c]
        for r in range(rank + 1, len(mat)):
            if mat[r][c]:
                f = mat[r][c] / pval
                row = mat[r]
                for cc in range(c, ncols):
                    row[cc] = row[cc] - f * prow[cc]
        rank += 1
        if rank == len(mat):
            break
    return rank


def exact_det(rows) -> GaussianRational:
    """Determinant of a square Gaussian-rational matrix by elimination."""
    size = len(rows)
    if size == 0:
        return GaussianRational(1)
    mat = [list(r) for r in rows]
    sign = 1
    for c in range(size):
        piv = next((r for r in range(c, size) if mat[r][c]), None)
        if piv is None:
            return GaussianRational(0)
        if piv != c:
            mat[c], mat[piv] = mat[piv], mat[c]
            sign = -sign
        prow = mat[c]
        pval = prow[c]
        for r in range(c + 1, size):
            if mat[r][c]:
                f = mat[r][c] / pval
                row = mat[r]
                for cc in range(c, size):
                    row[cc] = row[cc] - f * prow[cc]
    det = GaussianRational(sign)
    for c in range(size):
        det = det * mat[c][c]
    return det
