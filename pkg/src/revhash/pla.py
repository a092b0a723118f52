"""Parsing, writing, and evaluation of .pla two-level function covers.

A .pla file describes a function f: B^n -> B^m as a list of cubes. Each row
carries n input literals over {0,1,-} and m output bits; '-' in an input
means the row matches either value at that position. Directives handled:
.i .o .p .ilb .ob .type .e — anything else is skipped with a warning.
Output-field '-' and '~' are normalized to '0' at parse time (a hash table
ought to be fully specified), also with a warning.

Bit-vector convention used throughout the package: strings of '0'/'1'
where index 0 is the leftmost character and names variable/line 0. When
such a vector is packed into an int, bit i of the int is character i.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from functools import cached_property
from itertools import product

from .errors import PlaLexicalError, PlaParseError, PlaStructureError, ResourceLimitError

# Exhaustive per-input sweeps refuse to run above this arity by default.
DEFAULT_EXHAUSTIVE_LIMIT = 24
# expand_to_minterms gives up past this many generated cubes.
DEFAULT_EXPANSION_BUDGET = 1 << 24

_INPUT_CHARS = frozenset("01-")
_OUTPUT_CHARS = frozenset("01-~")


class Literal(enum.Enum):
    """One input position of a cube: fixed 0, fixed 1, or don't-care."""

    ZERO = "0"
    ONE = "1"
    DONT_CARE = "-"

    @classmethod
    def from_char(cls, ch: str) -> "Literal":
        try:
            return cls(ch)
        except ValueError:
            raise ValueError(f"not a cube input character: {ch!r}") from None

    def __str__(self) -> str:
        return self.value


class CoverSemantics(enum.Enum):
    """How the rows of a cover combine: conventional OR, or XOR (ESOP)."""

    INCLUSIVE_OR = "or"
    EXCLUSIVE_OR = "xor"


@dataclass(frozen=True)
class Cube:
    """One cover row: input literals (as a string over 01-) plus output bits."""

    inputs: str
    outputs: str

    def __post_init__(self):
        bad = set(self.inputs) - _INPUT_CHARS
        if bad:
            raise ValueError(f"invalid input literal(s) {sorted(bad)} in {self.inputs!r}")
        bad = set(self.outputs) - frozenset("01")
        if bad:
            raise ValueError(f"invalid output bit(s) {sorted(bad)} in {self.outputs!r}")

    @cached_property
    def care_mask(self) -> int:
        """Bit i set iff input position i is not a don't-care."""
        mask = 0
        for i, ch in enumerate(self.inputs):
            if ch != "-":
                mask |= 1 << i
        return mask

    @cached_property
    def value_mask(self) -> int:
        """Bit i set iff input position i is the literal '1'."""
        mask = 0
        for i, ch in enumerate(self.inputs):
            if ch == "1":
                mask |= 1 << i
        return mask

    @cached_property
    def output_mask(self) -> int:
        mask = 0
        for j, ch in enumerate(self.outputs):
            if ch == "1":
                mask |= 1 << j
        return mask

    @property
    def literals(self) -> tuple[Literal, ...]:
        return tuple(Literal(ch) for ch in self.inputs)

    @property
    def num_literals(self) -> int:
        """Number of non-don't-care input positions."""
        return self.care_mask.bit_count()

    def matches(self, x: str) -> bool:
        """True if input vector x satisfies every non-dash literal."""
        if len(x) != len(self.inputs):
            raise ValueError(f"input length {len(x)} != cube arity {len(self.inputs)}")
        return (bits_to_int(x) & self.care_mask) == self.value_mask


@dataclass(frozen=True)
class PlaFunction:
    """A parsed .pla cover: arities, cubes in file order, and parse metadata."""

    n: int
    m: int
    cubes: tuple[Cube, ...]
    name: str | None = None
    input_labels: tuple[str, ...] | None = None
    output_labels: tuple[str, ...] | None = None
    comments: tuple[str, ...] = ()
    warnings: tuple[str, ...] = ()

    def __post_init__(self):
        if self.n < 1 or self.m < 1:
            raise ValueError(f"arities must be >= 1, got n={self.n} m={self.m}")
        for c in self.cubes:
            if len(c.inputs) != self.n or len(c.outputs) != self.m:
                raise ValueError(f"cube {c.inputs} {c.outputs} does not conform to n={self.n} m={self.m}")

    def same_cover(self, other: "PlaFunction") -> bool:
        """Cube-for-cube equality of the function content (ignores metadata)."""
        return (self.n, self.m, self.cubes) == (other.n, other.m, other.cubes)


def bits_to_int(bits: str) -> int:
    """Pack a '0'/'1' string; character i becomes bit i of the result."""
    value = 0
    for i, ch in enumerate(bits):
        if ch == "1":
            value |= 1 << i
        elif ch != "0":
            raise ValueError(f"not a bit vector: {bits!r}")
    return value


def int_to_bits(value: int, width: int) -> str:
    """Inverse of bits_to_int."""
    return "".join("1" if (value >> i) & 1 else "0" for i in range(width))


def parse_pla(text: str) -> PlaFunction:
    """Parse a .pla document.

    Raises PlaStructureError when .i/.o are missing or inconsistent,
    PlaLexicalError for characters outside the row alphabet, and
    PlaParseError (with line number) for malformed rows.
    """
    n = m = None
    declared_rows = None
    cubes: list[Cube] = []
    input_labels = output_labels = None
    comments: list[str] = []
    warnings: list[str] = []
    normalized_outputs = 0
    saw_end = False

    for lineno, raw in enumerate(text.splitlines(), 1):
        line, _, comment = raw.partition("#")
        if comment:
            comments.append(comment.strip())
        tokens = line.split()
        if not tokens:
            continue

        if tokens[0].startswith("."):
            directive = tokens[0]
            if directive == ".i":
                if n is not None:
                    raise PlaStructureError("duplicate .i directive", lineno)
                n = _directive_int(directive, tokens, lineno)
            elif directive == ".o":
                if m is not None:
                    raise PlaStructureError("duplicate .o directive", lineno)
                m = _directive_int(directive, tokens, lineno)
            elif directive == ".p":
                declared_rows = _directive_int(directive, tokens, lineno)
            elif directive == ".ilb":
                input_labels = tuple(tokens[1:])
                if n is not None and len(input_labels) != n:
                    raise PlaStructureError(f".ilb names {len(input_labels)} inputs, .i says {n}", lineno)
            elif directive == ".ob":
                output_labels = tuple(tokens[1:])
                if m is not None and len(output_labels) != m:
                    raise PlaStructureError(f".ob names {len(output_labels)} outputs, .o says {m}", lineno)
            elif directive == ".type":
                if len(tokens) > 1 and tokens[1] != "fd":
                    warnings.append(f"line {lineno}: .type {tokens[1]} treated as fd")
            elif directive == ".e":
                saw_end = True
                break
            else:
                warnings.append(f"line {lineno}: unsupported directive {directive} skipped")
            continue

        # Cube row.
        if n is None or m is None:
            raise PlaStructureError("cube row before .i/.o directives", lineno)
        row = "".join(tokens)
        if len(row) != n + m:
            raise PlaParseError(f"row has {len(row)} symbols, expected {n + m}", lineno)
        inp, out = row[:n], row[n:]
        bad = set(inp) - _INPUT_CHARS
        if bad:
            raise PlaLexicalError(f"invalid input character(s) {sorted(bad)}", lineno)
        bad = set(out) - _OUTPUT_CHARS
        if bad:
            raise PlaLexicalError(f"invalid output character(s) {sorted(bad)}", lineno)
        if "-" in out or "~" in out:
            normalized_outputs += out.count("-") + out.count("~")
            out = out.replace("-", "0").replace("~", "0")
        cubes.append(Cube(inp, out))

    if n is None or m is None:
        raise PlaStructureError("missing .i/.o directives")
    if declared_rows is not None and declared_rows != len(cubes):
        raise PlaStructureError(f".p declares {declared_rows} rows but {len(cubes)} parsed")
    if not saw_end:
        warnings.append("missing .e terminator")
    if normalized_outputs:
        warnings.append(f"{normalized_outputs} output don't-care(s) normalized to 0")

    return PlaFunction(
        n=n,
        m=m,
        cubes=tuple(cubes),
        input_labels=input_labels,
        output_labels=output_labels,
        comments=tuple(comments),
        warnings=tuple(warnings),
    )


def _directive_int(directive: str, tokens: list[str], lineno: int) -> int:
    if len(tokens) != 2 or not tokens[1].isdigit():
        raise PlaStructureError(f"{directive} needs one integer argument", lineno)
    return int(tokens[1])


def write_pla(f: PlaFunction) -> str:
    """Serialize back to .pla text; parse_pla(write_pla(f)) reproduces the cover."""
    lines = []
    if f.name:
        lines.append(f"# {f.name}")
    for c in f.comments:
        lines.append(f"# {c}")
    lines.append(f".i {f.n}")
    lines.append(f".o {f.m}")
    if f.input_labels:
        lines.append(".ilb " + " ".join(f.input_labels))
    if f.output_labels:
        lines.append(".ob " + " ".join(f.output_labels))
    lines.append(f".p {len(f.cubes)}")
    for c in f.cubes:
        lines.append(f"{c.inputs} {c.outputs}")
    lines.append(".e")
    return "\n".join(lines) + "\n"


def expand_to_minterms(f: PlaFunction, budget: int = DEFAULT_EXPANSION_BUDGET) -> PlaFunction:
    """Replace every dashed cube by its 2^k constituent minterms.

    Exact duplicates (same minterm, same outputs) collapse to one row; the
    OR-semantics value of the cover is unchanged. Raises ResourceLimitError
    when the expansion would produce more than `budget` rows.
    """
    total = 0
    for c in f.cubes:
        total += 1 << (f.n - c.num_literals)
        if total > budget:
            raise ResourceLimitError(f"expansion needs {total}+ cubes, budget is {budget}")

    seen: dict[tuple[str, str], None] = {}
    for c in f.cubes:
        dash_positions = [i for i, ch in enumerate(c.inputs) if ch == "-"]
        base = list(c.inputs)
        for choice in product("01", repeat=len(dash_positions)):
            for pos, ch in zip(dash_positions, choice):
                base[pos] = ch
            seen.setdefault(("".join(base), c.outputs), None)
    cubes = tuple(Cube(i, o) for i, o in seen)
    return PlaFunction(n=f.n, m=f.m, cubes=cubes, name=f.name,
                       input_labels=f.input_labels, output_labels=f.output_labels)


def evaluate_pla(f: PlaFunction, x: str, semantics: CoverSemantics = CoverSemantics.INCLUSIVE_OR) -> str:
    """Evaluate the cover at input x under the given row-combination semantics.

    Output bit j is the OR (resp. XOR) of output bit j over all cubes whose
    non-dash literals match x.
    """
    if len(x) != f.n:
        raise ValueError(f"input length {len(x)} != n={f.n}")
    xi = bits_to_int(x)
    acc = 0
    if semantics is CoverSemantics.INCLUSIVE_OR:
        for c in f.cubes:
            if (xi & c.care_mask) == c.value_mask:
                acc |= c.output_mask
    else:
        for c in f.cubes:
            if (xi & c.care_mask) == c.value_mask:
                acc ^= c.output_mask
    return int_to_bits(acc, f.m)
