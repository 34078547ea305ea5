"""Exact polynomials in q and symmetric functions in the Schur basis."""

from __future__ import annotations

import re
from functools import lru_cache
from math import factorial
from typing import Iterable, Mapping, Sequence

from .shapes import Partition, SkewShape, as_partition, partitions
from .tableaux import Tableau, _fillings, kostka_number, rectify


class QPoly:
    """Integer polynomial in ``q``; zero coefficients are never stored."""

    __slots__ = ("_c",)

    def __init__(self, coeffs: Mapping[int, int] | Iterable[tuple[int, int]] | int = ()):
        if isinstance(coeffs, int):
            coeffs = {0: coeffs}
        items = coeffs.items() if isinstance(coeffs, Mapping) else coeffs
        c: dict[int, int] = {}
        for e, v in items:
            if e < 0:
                raise ValueError("negative q exponent")
            c[e] = c.get(e, 0) + int(v)
        self._c = {e: v for e, v in sorted(c.items()) if v}

    @classmethod
    def monomial(cls, exponent: int, coeff: int = 1) -> "QPoly":
        return cls({exponent: coeff})

    @property
    def coeffs(self) -> dict[int, int]:
        return dict(self._c)

    def __iter__(self):
        return iter(self._c.items())

    def __getitem__(self, e: int) -> int:
        return self._c.get(e, 0)

    def __bool__(self) -> bool:
        return bool(self._c)

    @property
    def degree(self) -> int:
        """Largest exponent; ``-1`` for the zero polynomial."""
        return max(self._c) if self._c else -1

    @property
    def min_degree(self) -> int:
        return min(self._c) if self._c else -1

    def is_nonnegative(self) -> bool:
        return all(v > 0 for v in self._c.values())

    def at_one(self) -> int:
        return sum(self._c.values())

    def scale_by_q(self, k: int = 1) -> "QPoly":
        return QPoly({e + k: v for e, v in self._c.items()})

    def reverse(self, top: int) -> "QPoly":
        """``q^top * p(1/q)``."""
        return QPoly({top - e: v for e, v in self._c.items()})

    def _coerce(self, other) -> "QPoly":
        if isinstance(other, QPoly):
            return other
        if isinstance(other, int):
            return QPoly(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self._c)
        for e, v in other._c.items():
            out[e] = out.get(e, 0) + v
        return QPoly(out)

    __radd__ = __add__

    def __neg__(self):
        return QPoly({e: -v for e, v in self._c.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out: dict[int, int] = {}
        for e1, v1 in self._c.items():
            for e2, v2 in other._c.items():
                out[e1 + e2] = out.get(e1 + e2, 0) + v1 * v2
        return QPoly(out)

    __rmul__ = __mul__

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return False
        return self._c == other._c

    def __hash__(self):
        return hash(tuple(self._c.items()))

    def __repr__(self):
        return f"QPoly({self})"

    def __str__(self):
        if not self._c:
            return "0"
        out = []
        for e, v in self._c.items():
            mono = "1" if e == 0 else ("q" if e == 1 else f"q^{e}")
            mag = abs(v)
            term = mono if mag == 1 else (str(mag) if e == 0 else f"{mag}*{mono}")
            if not out:
                out.append(term if v > 0 else f"-{term}")
            else:
                out.append(("+ " if v > 0 else "- ") + term)
        return " ".join(out)


q = QPoly.monomial(1)

_TERM_RE = re.compile(r"^(\d+)?\*?(q(?:\^(\d+))?)?$")


def parse_qpoly(text: str) -> QPoly:
    """Inverse of ``str(QPoly)``: ``"1 + 2*q^3 - q"``."""
    s = "".join(text.split())
    if s in ("", "0"):
        return QPoly()
    s = s.replace("-", "+-")
    coeffs: dict[int, int] = {}
    for tok in filter(None, s.split("+")):
        sign = -1 if tok.startswith("-") else 1
        tok = tok.lstrip("-")
        m = _TERM_RE.match(tok)
        if m is None or not tok:
            raise ValueError(f"malformed q-polynomial term {tok!r}")
        num, var, exp = m.groups()
        coeff = int(num) if num else 1
        e = 0 if var is None else (int(exp) if exp else 1)
        coeffs[e] = coeffs.get(e, 0) + sign * coeff
    return QPoly(coeffs)


class PositivityViolation(ArithmeticError):
    """A Schur coefficient had a negative q-coefficient where positivity is expected."""


class SchurExpansion:
    """Finite sum ``sum_lambda c_lambda(q) s_lambda`` with ``c_lambda`` in Z[q]."""

    __slots__ = ("_t",)

    def __init__(self, terms: Mapping[Sequence[int], QPoly | int] | None = None):
        out: dict[Partition, QPoly] = {}
        for lam, c in (terms or {}).items():
            lam = tuple(p for p in lam if p)
            c = c if isinstance(c, QPoly) else QPoly(c)
            out[lam] = out.get(lam, QPoly()) + c
        self._t = {lam: c for lam, c in out.items() if c}

    @classmethod
    def schur(cls, lam: Sequence[int], coeff: QPoly | int = 1) -> "SchurExpansion":
        return cls({tuple(lam): coeff})

    @property
    def terms(self) -> dict[Partition, QPoly]:
        return dict(self._t)

    def __getitem__(self, lam: Sequence[int]) -> QPoly:
        return self._t.get(tuple(p for p in lam if p), QPoly())

    def __len__(self):
        return len(self._t)

    def __iter__(self):
        return iter(self.ordered())

    def __bool__(self):
        return bool(self._t)

    def ordered(self) -> list[tuple[Partition, QPoly]]:
        """Terms with partitions in decreasing lexicographic order."""
        return sorted(self._t.items(), key=lambda kv: kv[0], reverse=True)

    def __add__(self, other: "SchurExpansion") -> "SchurExpansion":
        out = dict(self._t)
        for lam, c in other._t.items():
            out[lam] = out.get(lam, QPoly()) + c
        return SchurExpansion(out)

    def __neg__(self):
        return SchurExpansion({lam: -c for lam, c in self._t.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, QPoly)):
            return SchurExpansion({lam: c * other for lam, c in self._t.items()})
        if isinstance(other, SchurExpansion):
            out: dict[Partition, QPoly] = {}
            for mu, c1 in self._t.items():
                for nu, c2 in other._t.items():
                    prod = c1 * c2
                    for lam, n in lr_coefficients(mu, nu).items():
                        out[lam] = out.get(lam, QPoly()) + prod * n
            return SchurExpansion(out)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, QPoly)):
            return self * other
        return NotImplemented

    def __eq__(self, other):
        if not isinstance(other, SchurExpansion):
            return NotImplemented
        return self._t == other._t

    def __hash__(self):
        return hash(tuple(self.ordered()))

    def at_one(self) -> "SchurExpansion":
        return SchurExpansion({lam: QPoly(c.at_one()) for lam, c in self._t.items()})

    @property
    def q_degree(self) -> int:
        return max((c.degree for c in self._t.values()), default=-1)

    @property
    def min_q_degree(self) -> int:
        return min((c.min_degree for c in self._t.values()), default=-1)

    def is_schur_positive(self) -> bool:
        return all(c.is_nonnegative() for c in self._t.values())

    def omega(self) -> "SchurExpansion":
        from .shapes import conjugate_partition

        return SchurExpansion({conjugate_partition(lam): c for lam, c in self._t.items()})

    def reverse_q(self, top: int) -> "SchurExpansion":
        """Apply ``q -> 1/q`` then multiply by ``q^top``."""
        return SchurExpansion({lam: c.reverse(top) for lam, c in self._t.items()})

    def coefficient_difference(self, other: "SchurExpansion") -> dict[Partition, tuple[QPoly, QPoly]]:
        keys = set(self._t) | set(other._t)
        return {lam: (self[lam], other[lam]) for lam in sorted(keys, reverse=True) if self[lam] != other[lam]}

    def __repr__(self):
        return f"SchurExpansion({len(self._t)} terms)"

    def __str__(self):
        return format_expansion(self)

    def to_json(self) -> list[dict]:
        return [
            {"partition": list(lam), "coefficients": {str(e): v for e, v in c}}
            for lam, c in self.ordered()
        ]

    @classmethod
    def from_json(cls, data: list[dict]) -> "SchurExpansion":
        return cls({
            tuple(item["partition"]): QPoly({int(e): v for e, v in item["coefficients"].items()})
            for item in data
        })


def format_expansion(expansion: SchurExpansion) -> str:
    """One line per term: ``s[5,3,1]: q^4 + q^5``."""
    return "\n".join(f"s[{','.join(map(str, lam))}]: {c}" for lam, c in expansion.ordered())


_LINE_RE = re.compile(r"^s\[([\d,\s]*)\]\s*:\s*(.+)$")


def parse_expansion(text: str) -> SchurExpansion:
    terms: dict[Partition, QPoly] = {}
    for line in text.strip().splitlines():
        if not line.strip():
            continue
        m = _LINE_RE.match(line.strip())
        if m is None:
            raise ValueError(f"malformed expansion line {line!r}")
        lam = tuple(int(x) for x in m.group(1).split(",") if x.strip())
        terms[lam] = terms.get(lam, QPoly()) + parse_qpoly(m.group(2))
    return SchurExpansion(terms)


def kostka(lam: Sequence[int], mu: Sequence[int]) -> int:
    """``K_{lam, mu}``; ``mu`` may be any composition of ``|lam|``."""
    if sum(lam) != sum(mu):
        raise ValueError("kostka needs |lam| == |mu|")
    return kostka_number(lam, mu)


def monomials_to_schur(coeffs: Mapping[Sequence[int], QPoly | int], degree: int, num_vars: int) -> SchurExpansion:
    """Solve ``sum_mu c_mu m_mu = sum_lam a_lam s_lam`` over partitions with at most ``num_vars`` parts.

    Partitions are processed from the top of the dominance order down
    (decreasing lexicographic order is a linear extension of it).
    """
    remaining: dict[Partition, QPoly] = {}
    for mu, c in coeffs.items():
        mu = tuple(p for p in mu if p)
        if sum(mu) != degree:
            raise ValueError(f"monomial {mu} has the wrong degree")
        if len(mu) > num_vars:
            raise ValueError(f"monomial {mu} needs more than {num_vars} variables")
        remaining[mu] = remaining.get(mu, QPoly()) + (c if isinstance(c, QPoly) else QPoly(c))
    order = list(partitions(degree, max_parts=num_vars))
    result: dict[Partition, QPoly] = {}
    for k, lam in enumerate(order):
        a = remaining.pop(lam, QPoly())
        if not a:
            continue
        result[lam] = a
        for mu in order[k + 1:]:
            K = kostka_number(lam, mu)
            if K:
                remaining[mu] = remaining.get(mu, QPoly()) - a * K
    leftover = {mu: c for mu, c in remaining.items() if c}
    if leftover:
        raise ArithmeticError(f"monomial data is not symmetric: residue at {sorted(leftover)[:3]}")
    return SchurExpansion(result)


def schur_to_monomials(expansion: SchurExpansion, num_vars: int) -> dict[Partition, QPoly]:
    """Monomial coefficients ``c_mu`` at partitions ``mu`` with at most ``num_vars`` parts."""
    out: dict[Partition, QPoly] = {}
    for lam, c in expansion._t.items():
        for mu in partitions(sum(lam), max_parts=num_vars):
            K = kostka_number(lam, mu)
            if K:
                out[mu] = out.get(mu, QPoly()) + c * K
    return {mu: c for mu, c in out.items() if c}


@lru_cache(maxsize=4096)
def lr_coefficients(mu: Partition, nu: Partition) -> dict[Partition, int]:
    """``c^lam_{mu,nu}`` by counting SSYT of ``lam/nu`` that rectify to the superstandard ``mu`` tableau."""
    mu = tuple(p for p in mu if p)
    nu = tuple(p for p in nu if p)
    if not mu:
        return {nu: 1}
    if not nu:
        return {mu: 1}
    target = Tableau(tuple(tuple([k + 1] * p) for k, p in enumerate(mu)))
    letters = len(mu)
    out: dict[Partition, int] = {}
    n = sum(mu) + sum(nu)
    for lam in partitions(n):
        if len(lam) < len(nu) or any(lam[k] < nu[k] for k in range(len(nu))):
            continue
        if len(lam) > len(mu) + len(nu):
            continue
        shape = SkewShape(lam, nu)
        cells = shape.cells()
        count = 0
        for values in _fillings(shape, letters):
            if _content_of(values, letters) != mu:
                continue
            t = Tableau.from_cells(dict(zip(cells, values)), nu)
            if rectify(t) == target:
                count += 1
        if count:
            out[lam] = count
    return out


def _content_of(values: Sequence[int], letters: int) -> tuple[int, ...]:
    w = [0] * letters
    for x in values:
        w[x - 1] += 1
    return tuple(w)


def schur_product_lr(mu: Sequence[int], nu: Sequence[int]) -> SchurExpansion:
    return SchurExpansion(lr_coefficients(tuple(mu), tuple(nu)))


def product_of_schurs(parts: Iterable[Sequence[int]]) -> SchurExpansion:
    out = SchurExpansion.schur(())
    for lam in parts:
        out = out * SchurExpansion.schur(as_partition(lam))
    return out


def multinomial(counts: Sequence[int]) -> int:
    out = factorial(sum(counts))
    for c in counts:
        out //= factorial(c)
    return out
