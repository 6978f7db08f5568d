"""Magnitudes in ``[0, inf]`` extended with a wildcard element.

A :class:`Magnitude` is one of four variants: zero, a finite positive value,
infinity, or the wildcard ``*`` (an unknown value that matches anything).
Finite values are stored as natural logarithms so long products of extreme
ratios neither overflow nor underflow.

The integer codes in :class:`Kind` double as indices into the small lookup
tables :data:`MUL_TABLE` and :data:`INV_TABLE`, which the array-backed RPF
code uses to multiply and invert whole tables at once.
"""

from __future__ import annotations

import decimal
import enum
import math
from dataclasses import dataclass

import numpy as np

from .errors import DocumentError, IncomparableError

__all__ = [
    "Kind",
    "Magnitude",
    "ZERO",
    "ONE",
    "INF",
    "WILDCARD",
    "LOG_TOL",
    "MUL_TABLE",
    "INV_TABLE",
    "mw_mul",
    "mw_inverse",
    "mw_add",
    "matches",
    "inverse_odds",
    "odds",
    "render",
    "parse_value",
]

# Two finite magnitudes are equal when their logs differ by at most this much.
LOG_TOL = 1e-9


class Kind(enum.IntEnum):
    ZERO = 0
    FINITE = 1
    INF = 2
    WILD = 3


_Z, _F, _I, _W = Kind.ZERO, Kind.FINITE, Kind.INF, Kind.WILD

# MUL_TABLE[a, b] is the variant of a*b; FINITE*FINITE stays FINITE (logs add).
MUL_TABLE = np.array(
    [
        [_Z, _Z, _W, _W],
        [_Z, _F, _I, _W],
        [_W, _I, _I, _W],
        [_W, _W, _W, _W],
    ],
    dtype=np.int8,
)
INV_TABLE = np.array([_I, _F, _Z, _W], dtype=np.int8)


@dataclass(frozen=True, eq=False)
class Magnitude:
    """An element of ``[0, inf] U {*}``.

    ``log`` is meaningful only for ``Kind.FINITE`` and is ``0.0`` otherwise.
    Equality is exact on the variant and tolerance-based (:data:`LOG_TOL`) on
    the log of finite values.
    """

    kind: Kind
    log: float = 0.0

    def __post_init__(self):
        object.__setattr__(self, "kind", Kind(self.kind))
        if self.kind is Kind.FINITE:
            if not math.isfinite(self.log):
                raise ValueError(f"finite magnitude needs a finite log, got {self.log!r}")
            object.__setattr__(self, "log", float(self.log))
        elif self.log != 0.0:
            object.__setattr__(self, "log", 0.0)

    @classmethod
    def finite(cls, log: float) -> Magnitude:
        return cls(Kind.FINITE, log)

    @classmethod
    def of(cls, value) -> Magnitude:
        """Build a magnitude from a non-negative number, ``inf``, ``"*"`` or a Magnitude."""
        if isinstance(value, Magnitude):
            return value
        if isinstance(value, str):
            return parse_value(value)
        x = float(value)
        if math.isnan(x) or x < 0:
            raise ValueError(f"magnitudes are non-negative, got {value!r}")
        if x == 0:
            return ZERO
        if math.isinf(x):
            return INF
        return cls(Kind.FINITE, math.log(x))

    # variant predicates
    @property
    def is_zero(self) -> bool:
        return self.kind is Kind.ZERO

    @property
    def is_finite(self) -> bool:
        return self.kind is Kind.FINITE

    @property
    def is_inf(self) -> bool:
        return self.kind is Kind.INF

    @property
    def is_wildcard(self) -> bool:
        return self.kind is Kind.WILD

    @property
    def value(self) -> float:
        """Linear value; finite entries beyond float range become 0.0/inf, the wildcard nan."""
        if self.kind is Kind.FINITE:
            try:
                return math.exp(self.log)
            except OverflowError:
                return math.inf
        return (0.0, math.nan, math.inf, math.nan)[self.kind]

    def __float__(self) -> float:
        return self.value

    def __mul__(self, other) -> Magnitude:
        return mw_mul(self, Magnitude.of(other))

    __rmul__ = __mul__

    def __add__(self, other) -> Magnitude:
        return mw_add(self, Magnitude.of(other))

    __radd__ = __add__

    def __truediv__(self, other) -> Magnitude:
        return mw_mul(self, mw_inverse(Magnitude.of(other)))

    def inverse(self) -> Magnitude:
        return mw_inverse(self)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Magnitude):
            try:
                other = Magnitude.of(other)
            except (TypeError, ValueError, DocumentError):
                return NotImplemented
        if self.kind != other.kind:
            return False
        return self.kind is not Kind.FINITE or abs(self.log - other.log) <= LOG_TOL

    def __hash__(self) -> int:
        return hash(self.kind)

    def __repr__(self) -> str:
        if self.kind is Kind.FINITE:
            return f"Magnitude({render(self)})"
        return f"Magnitude({self.kind.name})"

    def __str__(self) -> str:
        return render(self)


ZERO = Magnitude(Kind.ZERO)
ONE = Magnitude(Kind.FINITE, 0.0)
INF = Magnitude(Kind.INF)
WILDCARD = Magnitude(Kind.WILD)


def mw_mul(a: Magnitude, b: Magnitude) -> Magnitude:
    kind = Kind(int(MUL_TABLE[a.kind, b.kind]))
    if kind is Kind.FINITE:
        return Magnitude(kind, a.log + b.log)
    return Magnitude(kind)


def mw_inverse(a: Magnitude) -> Magnitude:
    if a.kind is Kind.FINITE:
        return Magnitude(Kind.FINITE, -a.log)
    return Magnitude(Kind(int(INV_TABLE[a.kind])))


def mw_add(a: Magnitude, b: Magnitude) -> Magnitude:
    """Sum of two magnitudes; anything plus the wildcard is the wildcard."""
    if a.is_wildcard or b.is_wildcard:
        return WILDCARD
    if a.is_zero:
        return b
    if b.is_zero:
        return a
    if a.is_inf or b.is_inf:
        return INF
    return Magnitude(Kind.FINITE, float(np.logaddexp(a.log, b.log)))


def matches(param: Magnitude, constraint: Magnitude) -> bool:
    """True when ``param`` is matched by ``constraint``: equal, or the constraint is ``*``."""
    return constraint.is_wildcard or param == constraint


def inverse_odds(m: Magnitude) -> float:
    """Map ``[0, inf]`` onto ``[0, 1]`` by ``x -> x / (x + 1)``."""
    if m.is_wildcard:
        raise IncomparableError("inverse odds is undefined on the wildcard")
    if m.is_zero:
        return 0.0
    if m.is_inf:
        return 1.0
    if m.log >= 0:
        return 1.0 / (1.0 + math.exp(-m.log))
    e = math.exp(m.log)
    return e / (1.0 + e)


def odds(u: float) -> Magnitude:
    """Inverse of :func:`inverse_odds`: ``u -> u / (1 - u)``."""
    u = float(u)
    if not 0.0 <= u <= 1.0:
        raise ValueError(f"odds needs u in [0, 1], got {u!r}")
    if u == 0.0:
        return ZERO
    if u == 1.0:
        return INF
    return Magnitude(Kind.FINITE, math.log(u) - math.log1p(-u))


# ---------------------------------------------------------------------------
# text form: "0", "inf", "*", or a non-negative decimal

_DEC = decimal.Context(prec=40)
_SMALLEST_NORMAL = 2.2250738585072014e-308
# text may drop digits that only carry log/exp rounding noise
_RENDER_TOL = 1e-14


def _format_log(log: float) -> str:
    try:
        v = math.exp(log)
    except OverflowError:
        v = math.inf
    if _SMALLEST_NORMAL <= v < math.inf:
        for digits in range(1, 17):
            s = f"{v:.{digits}g}"
            if abs(math.log(float(s)) - log) <= _RENDER_TOL:
                return s
        s = repr(v)
        return s[:-2] if s.endswith(".0") else s
    # outside double range: work in Decimal, at most 17 significant digits
    d = _DEC.exp(decimal.Decimal(log))
    for digits in range(1, 18):
        s = format(d, f".{digits - 1}e")
        if abs(float(_DEC.ln(decimal.Decimal(s))) - log) <= _RENDER_TOL:
            break
    return s.replace("E", "e")


def _parse_finite_text(text: str) -> float:
    """Log of a positive decimal string, exact for anything outside float range too."""
    try:
        d = decimal.Decimal(text)
    except decimal.InvalidOperation:
        raise DocumentError(f"not a magnitude: {text!r}") from None
    if not d.is_finite() or d < 0:
        raise DocumentError(f"not a magnitude: {text!r}")
    if d == 0:
        return -math.inf
    v = float(d)
    if _SMALLEST_NORMAL <= v < math.inf:
        return math.log(v)
    return float(_DEC.ln(d))


def _canonical_text(log: float) -> str:
    # Follow text -> log -> text until it repeats; the smallest string on the
    # cycle is a fixed point reached from any member, so output is byte-stable.
    seen: list[str] = []
    s = _format_log(log)
    while s not in seen and len(seen) < 64:
        seen.append(s)
        s = _format_log(_parse_finite_text(s))
    cycle = seen[seen.index(s):] if s in seen else [s]
    return min(cycle, key=lambda t: (len(t), t))


def render(m: Magnitude) -> str:
    if m.is_zero:
        return "0"
    if m.is_inf:
        return "inf"
    if m.is_wildcard:
        return "*"
    return _canonical_text(m.log)


def parse_value(text) -> Magnitude:
    """Inverse of :func:`render`; also accepts plain JSON numbers."""
    if isinstance(text, bool):
        raise DocumentError(f"not a magnitude: {text!r}")
    if isinstance(text, (int, float)):
        if isinstance(text, float) and math.isnan(text):
            raise DocumentError("nan is not a magnitude")
        if text < 0:
            raise DocumentError(f"magnitudes are non-negative, got {text!r}")
        return Magnitude.of(text)
    if not isinstance(text, str):
        raise DocumentError(f"not a magnitude: {text!r}")
    s = text.strip()
    if s == "*":
        return WILDCARD
    if s.lower() in ("inf", "infinity"):
        return INF
    log = _parse_finite_text(s)
    if log == -math.inf:
        return ZERO
    return Magnitude(Kind.FINITE, log)
