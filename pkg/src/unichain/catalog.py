"""Constructors for standard t-norms, t-conorms and uninorm families.

Only chain-closed families are provided (min, max, Lukasiewicz, drastic,
and the U-min / U-max compositors that fill the off-diagonal region with
min resp. max around given underlying operations).  The product t-norm is
deliberately absent: it is not closed on an integer chain.

Families are also expressible as compact strings, e.g.
``idemmin(e=2,n=4)`` or ``umin(T=luk,S=max,e=2,n=4)``; see
:func:`parse_family_spec`.
"""

from __future__ import annotations

import string
from dataclasses import dataclass

from .core import ChainScale, OpTable, Uninorm, validate_uninorm
from .errors import ConstructionError, InternalConsistencyError, SpecSyntaxError

FAMILIES = (
    "min",
    "max",
    "lukasiewicz-tnorm",
    "lukasiewicz-tconorm",
    "drastic-tnorm",
    "drastic-tconorm",
    "umin-idempotent",
    "umax-idempotent",
    "umin-of",
    "umax-of",
)

_TNORM_FAMILIES = {"min", "lukasiewicz-tnorm", "drastic-tnorm"}
_TCONORM_FAMILIES = {"max", "lukasiewicz-tconorm", "drastic-tconorm"}
_PROPER_FAMILIES = {"umin-idempotent", "umax-idempotent", "umin-of", "umax-of"}


@dataclass(frozen=True)
class FamilySpec:
    """Parameters selecting one catalog table.

    ``t`` and ``s`` are the underlying t-norm (on L_e) and t-conorm (on
    L_{n-e}) and are only meaningful for the umin-of / umax-of compositors.
    """

    family: str
    scale: ChainScale
    e: int
    t: Uninorm | None = None
    s: Uninorm | None = None


def _tnorm_rows(name: str, n: int):
    if name == "min":
        return tuple(tuple(min(x, y) for y in range(n + 1)) for x in range(n + 1))
    if name == "lukasiewicz-tnorm":
        return tuple(tuple(max(0, x + y - n) for y in range(n + 1)) for x in range(n + 1))
    if name == "drastic-tnorm":
        return tuple(
            tuple(min(x, y) if max(x, y) == n else 0 for y in range(n + 1))
            for x in range(n + 1)
        )
    raise InternalConsistencyError(f"no t-norm rows for {name}")


def _tconorm_rows(name: str, n: int):
    if name == "max":
        return tuple(tuple(max(x, y) for y in range(n + 1)) for x in range(n + 1))
    if name == "lukasiewicz-tconorm":
        return tuple(tuple(min(n, x + y) for y in range(n + 1)) for x in range(n + 1))
    if name == "drastic-tconorm":
        return tuple(
            tuple(max(x, y) if min(x, y) == 0 else n for y in range(n + 1))
            for x in range(n + 1)
        )
    raise InternalConsistencyError(f"no t-conorm rows for {name}")


def _compose_rows(t: Uninorm, e: int, s: Uninorm, n: int, off_diag):
    def value(x, y):
        if x <= e and y <= e:
            return t(x, y)
        if x >= e and y >= e:
            return e + s(x - e, y - e)
        return off_diag(x, y)

    return tuple(tuple(value(x, y) for y in range(n + 1)) for x in range(n + 1))


def make(spec: FamilySpec) -> Uninorm:
    """Build the table selected by ``spec`` and verify it is a uninorm.

    Inconsistent parameters raise :class:`ConstructionError`; a constructor
    producing an invalid table would be a bug and raises
    :class:`InternalConsistencyError`.
    """
    family, n, e = spec.family, spec.scale.n, spec.e
    if family not in FAMILIES:
        raise ConstructionError(f"unknown family {family!r}")
    if family in _TNORM_FAMILIES and e != n:
        raise ConstructionError(f"{family} needs e = n, got e={e}, n={n}")
    if family in _TCONORM_FAMILIES and e != 0:
        raise ConstructionError(f"{family} needs e = 0, got e={e}")
    if family in _PROPER_FAMILIES and not 0 < e < n:
        raise ConstructionError(f"{family} needs 0 < e < n, got e={e}, n={n}")
    if family in ("umin-of", "umax-of"):
        if spec.t is None or spec.s is None:
            raise ConstructionError(f"{family} needs both T and S sub-operations")
        if spec.t.scale.n != e or spec.t.e != e:
            raise ConstructionError(
                f"T must be a t-norm on L_{e}, got scale n={spec.t.scale.n}, e={spec.t.e}"
            )
        if spec.s.scale.n != n - e or spec.s.e != 0:
            raise ConstructionError(
                f"S must be a t-conorm on L_{n - e}, got scale n={spec.s.scale.n}, e={spec.s.e}"
            )
    elif spec.t is not None or spec.s is not None:
        raise ConstructionError(f"{family} takes no T/S sub-operations")

    if family in _TNORM_FAMILIES:
        rows = _tnorm_rows(family, n)
    elif family in _TCONORM_FAMILIES:
        rows = _tconorm_rows(family, n)
    else:
        if family in ("umin-idempotent", "umin-of"):
            t = spec.t or Uninorm(OpTable(ChainScale(e), _tnorm_rows("min", e)), e)
            s = spec.s or Uninorm(OpTable(ChainScale(n - e), _tconorm_rows("max", n - e)), 0)
            rows = _compose_rows(t, e, s, n, lambda x, y: min(x, y))
        else:
            t = spec.t or Uninorm(OpTable(ChainScale(e), _tnorm_rows("min", e)), e)
            s = spec.s or Uninorm(OpTable(ChainScale(n - e), _tconorm_rows("max", n - e)), 0)
            rows = _compose_rows(t, e, s, n, lambda x, y: max(x, y))

    table = OpTable(spec.scale, rows)
    report = validate_uninorm(table, e)
    if not report.verdict:
        raise InternalConsistencyError(
            f"constructor {family} produced an invalid table: {report.violations[0].describe()}"
        )
    return Uninorm(table, e)


def idem_min(n: int, e: int) -> Uninorm:
    """max where both arguments are >= e, min everywhere else."""
    return make(FamilySpec("umin-idempotent", ChainScale(n), e))


def idem_max(n: int, e: int) -> Uninorm:
    """min where both arguments are <= e, max everywhere else."""
    return make(FamilySpec("umax-idempotent", ChainScale(n), e))


def luk_upper(n: int, e: int) -> Uninorm:
    """Bounded sum min(n, x+y-e) on [e,n]^2, min everywhere else."""
    scale = ChainScale(n)
    s = Uninorm(OpTable(ChainScale(n - e), _tconorm_rows("lukasiewicz-tconorm", n - e)), 0)
    t = Uninorm(OpTable(ChainScale(e), _tnorm_rows("min", e)), e)
    return make(FamilySpec("umin-of", scale, e, t=t, s=s))


def min_tnorm(n: int) -> Uninorm:
    return make(FamilySpec("min", ChainScale(n), n))


def max_tconorm(n: int) -> Uninorm:
    return make(FamilySpec("max", ChainScale(n), 0))


# --- compact spec strings -------------------------------------------------
#
# spec   := name [ "(" arg ("," arg)* ")" ]
# arg    := key "=" value
# value  := integer | name | spec          (nested spec for T= / S=)
#
# Names are case-insensitive; "-" and "_" are interchangeable.  Bare names
# in a T= slot mean a t-norm on L_e (min, luk, drastic); in an S= slot a
# t-conorm on L_{n-e} (max, luk, drastic).

_TOP_LEVEL_ALIASES = {
    "min": "min",
    "max": "max",
    "luk-tnorm": "lukasiewicz-tnorm",
    "lukasiewicz-tnorm": "lukasiewicz-tnorm",
    "luk-tconorm": "lukasiewicz-tconorm",
    "lukasiewicz-tconorm": "lukasiewicz-tconorm",
    "drastic-tnorm": "drastic-tnorm",
    "drastic-tconorm": "drastic-tconorm",
    "idemmin": "umin-idempotent",
    "umin-idempotent": "umin-idempotent",
    "idemmax": "umax-idempotent",
    "umax-idempotent": "umax-idempotent",
    "umin": "umin-of",
    "umin-of": "umin-of",
    "umax": "umax-of",
    "umax-of": "umax-of",
    "luk-upper": "luk-upper",
}

_TNORM_SLOT_ALIASES = {
    "min": "min",
    "luk": "lukasiewicz-tnorm",
    "lukasiewicz": "lukasiewicz-tnorm",
    "luk-tnorm": "lukasiewicz-tnorm",
    "lukasiewicz-tnorm": "lukasiewicz-tnorm",
    "drastic": "drastic-tnorm",
    "drastic-tnorm": "drastic-tnorm",
}

_TCONORM_SLOT_ALIASES = {
    "max": "max",
    "luk": "lukasiewicz-tconorm",
    "lukasiewicz": "lukasiewicz-tconorm",
    "luk-tconorm": "lukasiewicz-tconorm",
    "lukasiewicz-tconorm": "lukasiewicz-tconorm",
    "drastic": "drastic-tconorm",
    "drastic-tconorm": "drastic-tconorm",
}

_NAME_CHARS = set(string.ascii_letters + string.digits + "-_")


class _Cursor:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def skip_ws(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def error(self, message: str, pos: int | None = None):
        raise SpecSyntaxError(message, self.text, self.pos if pos is None else pos)

    def expect(self, ch: str):
        self.skip_ws()
        if self.peek() != ch:
            self.error(f"expected {ch!r}")
        self.pos += 1

    def name(self) -> tuple[str, int]:
        self.skip_ws()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos] in _NAME_CHARS:
            self.pos += 1
        if self.pos == start:
            self.error("expected a name")
        return self.text[start:self.pos].lower().replace("_", "-"), start


def _parse_call(cur: _Cursor):
    """Returns (normalized-name, int args, sub-spec calls keyed t/s, name position)."""
    name, name_pos = cur.name()
    ints: dict[str, int] = {}
    subs: dict[str, tuple] = {}
    cur.skip_ws()
    if cur.peek() == "(":
        cur.pos += 1
        cur.skip_ws()
        if cur.peek() != ")":
            while True:
                key, key_pos = cur.name()
                cur.expect("=")
                cur.skip_ws()
                if key in ("n", "e"):
                    start = cur.pos
                    while cur.pos < len(cur.text) and cur.text[cur.pos].isdigit():
                        cur.pos += 1
                    if cur.pos == start:
                        cur.error("expected an integer")
                    ints[key] = int(cur.text[start:cur.pos])
                elif key in ("t", "s"):
                    value_pos = cur.pos
                    subs[key] = (_parse_call(cur), value_pos)
                else:
                    cur.error(f"unknown key {key!r} (expected n, e, T or S)", key_pos)
                cur.skip_ws()
                if cur.peek() == ",":
                    cur.pos += 1
                    continue
                break
        cur.expect(")")
    return name, ints, subs, name_pos


def _build_sub(call, value_pos: int, slot: str, sub_n: int, text: str) -> Uninorm:
    name, ints, subs, name_pos = call
    aliases = _TNORM_SLOT_ALIASES if slot == "t" else _TCONORM_SLOT_ALIASES
    if subs:
        raise SpecSyntaxError("nested T/S inside a sub-operation is not supported", text, value_pos)
    if name not in aliases:
        kind = "t-norm" if slot == "t" else "t-conorm"
        raise SpecSyntaxError(f"{name!r} is not a {kind} family", text, name_pos)
    family = aliases[name]
    n = ints.get("n", sub_n)
    if n != sub_n:
        raise SpecSyntaxError(f"sub-operation scale n={n} does not fit its slot (needs n={sub_n})",
                              text, value_pos)
    if "e" in ints:
        raise SpecSyntaxError("sub-operations fix their own neutral element", text, value_pos)
    e = n if slot == "t" else 0
    return make(FamilySpec(family, ChainScale(n), e))


def parse_family_spec(text: str) -> FamilySpec:
    """Parse a compact family string into a :class:`FamilySpec`.

    Raises :class:`SpecSyntaxError` with a caret position on bad syntax and
    :class:`ConstructionError` on inconsistent parameters.
    """
    cur = _Cursor(text)
    name, ints, subs, name_pos = _parse_call(cur)
    cur.skip_ws()
    if cur.pos != len(text):
        cur.error("unexpected trailing input")
    if name not in _TOP_LEVEL_ALIASES:
        raise SpecSyntaxError(f"unknown family {name!r}", text, name_pos)
    family = _TOP_LEVEL_ALIASES[name]
    if "n" not in ints:
        raise SpecSyntaxError("every family needs an explicit n", text, name_pos)
    n = ints["n"]
    if n < 1:
        raise SpecSyntaxError("n must be at least 1", text, name_pos)
    scale = ChainScale(n)

    if family == "luk-upper":
        if "e" not in ints:
            raise SpecSyntaxError("luk-upper needs an explicit e", text, name_pos)
        e = ints["e"]
        if not 0 < e < n:
            raise ConstructionError(f"luk-upper needs 0 < e < n, got e={e}, n={n}")
        s = Uninorm(OpTable(ChainScale(n - e), _tconorm_rows("lukasiewicz-tconorm", n - e)), 0)
        t = Uninorm(OpTable(ChainScale(e), _tnorm_rows("min", e)), e)
        return FamilySpec("umin-of", scale, e, t=t, s=s)

    if family in _TNORM_FAMILIES:
        e = ints.get("e", n)
    elif family in _TCONORM_FAMILIES:
        e = ints.get("e", 0)
    else:
        if "e" not in ints:
            raise SpecSyntaxError(f"{name} needs an explicit e", text, name_pos)
        e = ints["e"]

    t = s = None
    if family in ("umin-of", "umax-of"):
        if not 0 < e < n:
            raise ConstructionError(f"{family} needs 0 < e < n, got e={e}, n={n}")
        if "t" not in subs or "s" not in subs:
            raise SpecSyntaxError(f"{name} needs both T= and S=", text, name_pos)
        t = _build_sub(subs["t"][0], subs["t"][1], "t", e, text)
        s = _build_sub(subs["s"][0], subs["s"][1], "s", n - e, text)
    elif subs:
        raise SpecSyntaxError(f"{name} takes no T/S arguments", text, name_pos)
    return FamilySpec(family, scale, e, t=t, s=s)


def from_string(text: str) -> Uninorm:
    """Build the uninorm named by a compact family string."""
    return make(parse_family_spec(text))
