"""Perversity values, constructions, comparisons, and the weight maps.

A perversity is either a function of stratum codimension (the classical
Goresky-MacPherson shape, extended to arbitrary integers) or an arbitrary
integer function on singular strata. Metric weights c_Y > 0 are exact
rationals; the bracket function [[x]] (greatest integer strictly below x) is
the only nonlinearity, and it is evaluated exactly. No floats anywhere: the
bracket is discontinuous at integers and float rounding would corrupt the
resulting perversities.
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping

from .errors import ConfigurationError, RealizabilityError
from .rationals import format_rational, parse_rational

BY_CODIM = "by-codim"
PER_STRATUM = "per-stratum"


@dataclass(frozen=True)
class Perversity:
    """An integer-valued perversity.

    kind "by-codim": values maps codimension k >= 1 to an integer.
    kind "per-stratum": values maps a stratum id to an integer.
    Negative values are legitimate; nothing is clamped.
    """

    kind: str
    values: Mapping

    def __post_init__(self):
        if self.kind not in (BY_CODIM, PER_STRATUM):
            raise ConfigurationError(f"unknown perversity kind {self.kind!r}")
        object.__setattr__(self, "values", dict(self.values))

    def value(self, stratum_id, codim):
        """Value on a stratum identified by id and codimension."""
        if self.kind == BY_CODIM:
            try:
                return self.values[codim]
            except KeyError:
                raise ConfigurationError(
                    f"perversity has no value at codimension {codim}"
                ) from None
        try:
            return self.values[stratum_id]
        except KeyError:
            raise ConfigurationError(
                f"perversity has no value on stratum {stratum_id!r}"
            ) from None

    def __eq__(self, other):
        return (
            isinstance(other, Perversity)
            and self.kind == other.kind
            and dict(self.values) == dict(other.values)
        )

    def __hash__(self):
        return hash((self.kind, tuple(sorted(self.values.items(), key=repr))))


def bracket(x) -> int:
    """Greatest integer strictly less than x, for positive rational x."""
    x = Fraction(x)
    if x <= 0:
        raise ValueError(f"bracket is only defined for positive rationals, got {x}")
    if x.denominator == 1:
        return x.numerator - 1
    return x.numerator // x.denominator


def zero_perversity(n) -> Perversity:
    return Perversity(BY_CODIM, {k: 0 for k in range(1, n + 1)})


def top_perversity(n) -> Perversity:
    """t(k) = k - 2 on codimensions 1..n (codimension-one strata included)."""
    if n < 1:
        raise ConfigurationError("ambient dimension must be at least 1")
    return Perversity(BY_CODIM, {k: k - 2 for k in range(1, n + 1)})


def middle_perversities(n):
    """(lower, upper) middle perversities on codimensions 1..n.

    upper(k) = floor((k-1)/2) and lower = t - upper, so at link dimension
    l = k - 1 the upper value is l/2 for even l and (l-1)/2 for odd l.
    """
    if n < 1:
        raise ConfigurationError("ambient dimension must be at least 1")
    upper = Perversity(BY_CODIM, {k: (k - 1) // 2 for k in range(1, n + 1)})
    lower = Perversity(BY_CODIM, {k: (k - 2) - (k - 1) // 2 for k in range(1, n + 1)})
    return lower, upper


def dual(p: Perversity, ambient=None) -> Perversity:
    """The complementary perversity t - p (an involution).

    By-codim perversities dualize on their own domain. Per-stratum
    perversities need codimensions: `ambient` may be a FilteredComplex or a
    mapping stratum_id -> codim.
    """
    if p.kind == BY_CODIM:
        return Perversity(BY_CODIM, {k: k - 2 - v for k, v in p.values.items()})
    codims = _codim_map(ambient)
    out = {}
    for sid, v in p.values.items():
        if sid not in codims:
            raise ConfigurationError(f"no codimension known for stratum {sid!r}")
        out[sid] = codims[sid] - 2 - v
    return Perversity(PER_STRATUM, out)


def _codim_map(ambient):
    if ambient is None:
        raise ConfigurationError("dualizing a per-stratum perversity needs codimensions")
    if hasattr(ambient, "strata"):
        return {sid: s.codim for sid, s in ambient.strata.items()}
    return dict(ambient)


def perversity_from_weights(strata, weights) -> Perversity:
    """The general perversity attached to a weighted conic metric.

    `strata` is a list of (stratum_id, link_dim) pairs; `weights` maps
    stratum_id to a positive rational. Link dimension zero always gives 0
    (the weight is metrically inert on codimension-one strata); even l gives
    l/2 + [[1/(2c)]]; odd l gives (l-1)/2 + [[1/2 + 1/(2c)]].
    """
    out = {}
    for sid, l in strata:
        if sid not in weights:
            raise ConfigurationError(f"stratum {sid!r} has no weight")
        c = Fraction(weights[sid])
        if c <= 0:
            raise ConfigurationError(f"weight for stratum {sid!r} must be positive")
        if l == 0:
            out[sid] = 0
        elif l % 2 == 0:
            out[sid] = l // 2 + bracket(Fraction(1, 2) / c)
        else:
            out[sid] = (l - 1) // 2 + bracket(Fraction(1, 2) + Fraction(1, 2) / c)
    return Perversity(PER_STRATUM, out)


def weights_from_perversity(p: Perversity, strata):
    """Weights realizing p exactly, for p at or above the upper middle.

    Canonical deterministic choice: with excess n = p(Y) - upper_middle(Y),
    even links get c = 1/(2n+1) and odd links get c = 1/(2n) (or c = 1 when
    the excess is zero). Round-trips through perversity_from_weights.
    """
    out = {}
    for sid, l in strata:
        codim = l + 1
        v = p.value(sid, codim)
        if l == 0:
            if v != 0:
                raise RealizabilityError(
                    f"stratum {sid!r} has link dimension 0 but perversity {v} != 0"
                )
            out[sid] = Fraction(1)
            continue
        floor_mid = l // 2 if l % 2 == 0 else (l - 1) // 2
        excess = v - floor_mid
        if excess < 0:
            raise RealizabilityError(
                f"stratum {sid!r}: perversity {v} is below the upper middle {floor_mid}"
            )
        if l % 2 == 0:
            out[sid] = Fraction(1, 2 * excess + 1)
        else:
            out[sid] = Fraction(1, 2 * excess) if excess >= 1 else Fraction(1)
    return out


def is_gm_perversity(p: Perversity) -> bool:
    """True iff p is a classical Goresky-MacPherson perversity.

    Checks p(2) = 0 and the growth condition p(k) <= p(k+1) <= p(k) + 1 over
    the by-codim domain {2..n}. A value at codimension 1 is ignored.
    """
    if p.kind != BY_CODIM:
        raise ConfigurationError("classicality is a by-codim notion")
    keys = sorted(k for k in p.values if k >= 2)
    if not keys:
        return True
    n = keys[-1]
    if keys != list(range(2, n + 1)):
        raise ConfigurationError("by-codim perversity must cover codimensions 2..n")
    if p.values[2] != 0:
        return False
    for k in range(2, n):
        if not (p.values[k] <= p.values[k + 1] <= p.values[k] + 1):
            return False
    return True


def hunsicker_shift_check(f: int, c) -> bool:
    """Consistency of the one-stratum edge reduction.

    For a single stratum with link dimension f and weight c, the dual of the
    weight perversity must equal the lower middle shifted down by [[1/(2c)]]
    for even f and by [[1/2 + 1/(2c)]] for odd f.
    """
    if f < 1:
        raise ConfigurationError("the edge reduction needs link dimension >= 1")
    c = Fraction(c)
    p = perversity_from_weights([("Y", f)], {"Y": c})
    q_val = dual(p, {"Y": f + 1}).values["Y"]
    lower_mid = (f + 1 - 2) // 2
    if f % 2 == 0:
        shift = bracket(Fraction(1, 2) / c)
    else:
        shift = bracket(Fraction(1, 2) + Fraction(1, 2) / c)
    return q_val == lower_mid - shift


def compare(p: Perversity, q: Perversity) -> str:
    """Pointwise comparison over the common domain.

    Returns "eq", "le", "ge", or "incomparable"; mixed signs are reported,
    not raised. Perversities of different kinds cannot be compared directly.
    """
    if p.kind != q.kind:
        raise ConfigurationError("cannot compare perversities of different kinds")
    common = set(p.values) & set(q.values)
    if not common:
        raise ConfigurationError("perversities share no domain")
    has_lt = any(p.values[k] < q.values[k] for k in common)
    has_gt = any(p.values[k] > q.values[k] for k in common)
    if has_lt and has_gt:
        return "incomparable"
    if has_lt:
        return "le"
    if has_gt:
        return "ge"
    return "eq"


def perversity_to_json(p: Perversity) -> dict:
    return {"kind": p.kind, "values": {str(k): v for k, v in p.values.items()}}


def perversity_from_json(doc) -> Perversity:
    if not isinstance(doc, dict) or "kind" not in doc or "values" not in doc:
        raise ConfigurationError("perversity document needs 'kind' and 'values'")
    kind = doc["kind"]
    raw = doc["values"]
    if kind == BY_CODIM:
        values = {int(k): int(v) for k, v in raw.items()}
    elif kind == PER_STRATUM:
        values = {str(k): int(v) for k, v in raw.items()}
    else:
        raise ConfigurationError(f"unknown perversity kind {kind!r}")
    return Perversity(kind, values)


def weights_to_json(weights) -> dict:
    return {str(sid): format_rational(c) for sid, c in weights.items()}


def weights_from_json(doc) -> dict:
    out = {}
    for sid, text in doc.items():
        c = parse_rational(text)
        if c <= 0:
            raise ConfigurationError(f"weight for stratum {sid!r} must be positive")
        out[str(sid)] = c
    return out
