"""Language specifications: regex, explicit DFA, or named membership oracle.

A LanguageSpec is the workbench's handle on a language L over a fixed
alphabet: it supplies the total characteristic function via membership().
Regex and DFA presentations are rational and support exact constructions;
oracle presentations are arbitrary total deciders and support only the
finite-depth approximations.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

from .alphabet import Alphabet, Word
from .dfa import Dfa, minimize_dfa
from .errors import ConfigError, InputError, SpecFileError
from .regex import compile_regex, parse_pattern


@dataclass(frozen=True)
class RegexSpec:
    pattern: str


@dataclass(frozen=True)
class DfaSpec:
    dfa: Dfa


@dataclass(frozen=True)
class OracleSpec:
    name: str
    params: tuple[int, ...] = ()


Presentation = RegexSpec | DfaSpec | OracleSpec


@dataclass(frozen=True)
class _Builtin:
    default_alphabet: str
    arity: int
    decide: Callable[[Word, tuple[int, ...]], int]
    needs: frozenset[str] = frozenset()
    unary: bool = False


def _decide_anbn(w: Word, params) -> int:
    half, odd = divmod(len(w), 2)
    if odd:
        return 0
    return int(w == "a" * half + "b" * half)


def _decide_dyck1(w: Word, params) -> int:
    depth = 0
    for ch in w:
        if ch == "a":
            depth += 1
        elif ch == "b":
            depth -= 1
            if depth < 0:
                return 0
        else:
            return 0
    return int(depth == 0)


def _decide_powers_of_two(w: Word, params) -> int:
    n = len(w)
    return int(n >= 1 and n & (n - 1) == 0)


def _decide_champernowne(w: Word, params) -> int:
    # imported lazily: shift.py depends on this module
    from .shift import champernowne_bit

    return champernowne_bit(len(w))


def _decide_even_length(w: Word, params) -> int:
    return int(len(w) % 2 == 0)


_BUILTINS: dict[str, _Builtin] = {
    "anbn": _Builtin("ab", 0, _decide_anbn, needs=frozenset("ab")),
    "dyck1": _Builtin("ab", 0, _decide_dyck1, needs=frozenset("ab")),
    "unary_powers_of_two": _Builtin("a", 0, _decide_powers_of_two, unary=True),
    "champernowne_unary": _Builtin("a", 0, _decide_champernowne, unary=True),
    "even_length": _Builtin("ab", 0, _decide_even_length),
}


@dataclass(frozen=True)
class LanguageSpec:
    alphabet: Alphabet
    presentation: Presentation

    def __post_init__(self):
        p = self.presentation
        if isinstance(p, RegexSpec):
            parse_pattern(p.pattern, self.alphabet)
        elif isinstance(p, DfaSpec):
            if p.dfa.alphabet != self.alphabet:
                raise InputError("DFA alphabet does not match the spec alphabet")
        elif isinstance(p, OracleSpec):
            info = _BUILTINS.get(p.name)
            if info is None:
                raise ConfigError(
                    f"unknown builtin {p.name!r}; known: {', '.join(sorted(_BUILTINS))}"
                )
            if len(p.params) != info.arity:
                raise ConfigError(f"builtin {p.name!r} takes {info.arity} parameters")
            missing = info.needs - set(self.alphabet.symbols)
            if missing:
                raise ConfigError(
                    f"builtin {p.name!r} needs symbols {sorted(missing)} in the alphabet"
                )
            if info.unary and len(self.alphabet) != 1:
                raise ConfigError(f"builtin {p.name!r} needs a one-symbol alphabet")
        else:
            raise InputError(f"unknown presentation {p!r}")

    @property
    def rational(self) -> bool:
        return isinstance(self.presentation, (RegexSpec, DfaSpec))


_REGEX_CACHE: dict[tuple[tuple[str, ...], str], Dfa] = {}


def presented_dfa(spec: LanguageSpec) -> Dfa:
    """The DFA behind a rational spec: compiled (minimal) for a regex,
    verbatim for an explicit DFA presentation."""
    p = spec.presentation
    if isinstance(p, DfaSpec):
        return p.dfa
    if isinstance(p, RegexSpec):
        key = (spec.alphabet.symbols, p.pattern)
        d = _REGEX_CACHE.get(key)
        if d is None:
            d = _REGEX_CACHE[key] = compile_regex(p.pattern, spec.alphabet)
        return d
    raise InputError("oracle presentations have no DFA")


def membership(spec: LanguageSpec, w: Word) -> int:
    """Characteristic function of the spec's language: 1 iff w is a member."""
    spec.alphabet.validate_word(w)
    p = spec.presentation
    if isinstance(p, OracleSpec):
        return _BUILTINS[p.name].decide(w, p.params)
    return int(presented_dfa(spec).accepts(w))


def minimal_dfa(spec: LanguageSpec) -> Dfa:
    """Canonical minimal DFA of a rational spec."""
    return minimize_dfa(presented_dfa(spec))


def characteristic_table(spec: LanguageSpec, max_len: int) -> dict[Word, int]:
    """membership() on every word of length <= max_len, as one dict.

    Rational specs are evaluated by breadth-first state propagation, so the
    cost is one table step per enumerated word instead of one run per word.
    """
    if max_len < 0:
        raise InputError("word length bound must be non-negative")
    p = spec.presentation
    if isinstance(p, OracleSpec):
        decide = _BUILTINS[p.name].decide
        return {w: decide(w, p.params) for w in spec.alphabet.words(max_len)}
    d = presented_dfa(spec)
    finals = d.finals
    table = {"": int(d.initial in finals)}
    level = [("", d.initial)]
    for _ in range(max_len):
        nxt = []
        for w, s in level:
            for k, ch in enumerate(spec.alphabet.symbols):
                t = d.rows[s][k]
                u = w + ch
                table[u] = int(t in finals)
                nxt.append((u, t))
        level = nxt
    return table


def builtin_language(name: str, params: tuple[int, ...] | list[int] = ()) -> LanguageSpec:
    """Oracle-backed spec for a registered builtin, on its default alphabet."""
    info = _BUILTINS.get(name)
    if info is None:
        raise ConfigError(f"unknown builtin {name!r}; known: {', '.join(sorted(_BUILTINS))}")
    return LanguageSpec(Alphabet.of(info.default_alphabet), OracleSpec(name, tuple(params)))


def builtin_names() -> tuple[str, ...]:
    return tuple(sorted(_BUILTINS))


def parse_spec_file(text: str) -> LanguageSpec:
    """Parse the line-oriented spec grammar.

    alphabet: <symbols>
    followed by exactly one of
      regex: <pattern>
      builtin: <name> [<int params>]
      dfa: <n> <initial> <finals csv|->   (then n rows, one target per symbol)

    Blank lines are ignored; "-" stands for an empty finals set.
    """
    lines = [(i + 1, raw.strip()) for i, raw in enumerate(text.splitlines())]
    lines = [(n, s) for n, s in lines if s]
    if not lines:
        raise SpecFileError("empty spec", 1)

    ln, head = lines[0]
    if not head.startswith("alphabet:"):
        raise SpecFileError("expected 'alphabet: <symbols>'", ln)
    symbols = head[len("alphabet:"):].strip()
    try:
        alphabet = Alphabet.of(symbols)
    except InputError as e:
        raise SpecFileError(str(e), ln) from None

    if len(lines) < 2:
        raise SpecFileError("expected a presentation line after the alphabet", ln)
    ln2, body = lines[1]

    if body.startswith("regex:"):
        if len(lines) > 2:
            raise SpecFileError("unexpected extra line", lines[2][0])
        pattern = body[len("regex:"):].strip()
        try:
            return LanguageSpec(alphabet, RegexSpec(pattern))
        except InputError as e:
            raise SpecFileError(f"bad regex: {e}", ln2) from None

    if body.startswith("builtin:"):
        if len(lines) > 2:
            raise SpecFileError("unexpected extra line", lines[2][0])
        fields = body[len("builtin:"):].split()
        if not fields:
            raise SpecFileError("builtin needs a name", ln2)
        try:
            params = tuple(int(f) for f in fields[1:])
        except ValueError:
            raise SpecFileError("builtin parameters must be integers", ln2) from None
        return LanguageSpec(alphabet, OracleSpec(fields[0], params))

    if body.startswith("dfa:"):
        fields = body[len("dfa:"):].split()
        if len(fields) != 3:
            raise SpecFileError("expected 'dfa: <n> <initial> <finals csv|->'", ln2)
        try:
            n, initial = int(fields[0]), int(fields[1])
            finals = frozenset(
                int(f) for f in fields[2].split(",") if f != "" ) if fields[2] != "-" else frozenset()
        except ValueError:
            raise SpecFileError("bad dfa header", ln2) from None
        row_lines = lines[2:]
        if len(row_lines) != n:
            at = row_lines[n][0] if len(row_lines) > n else (row_lines[-1][0] if row_lines else ln2)
            raise SpecFileError(f"expected {n} transition rows, got {len(row_lines)}", at)
        rows = []
        for rn, row_text in row_lines:
            parts = row_text.split()
            if len(parts) != len(alphabet):
                raise SpecFileError(
                    f"expected {len(alphabet)} targets (one per symbol), got {len(parts)}", rn
                )
            try:
                rows.append(tuple(int(p) for p in parts))
            except ValueError:
                raise SpecFileError("transition targets must be integers", rn) from None
        try:
            d = Dfa(alphabet, n, initial, finals, tuple(rows))
        except InputError as e:
            raise SpecFileError(str(e), ln2) from None
        return LanguageSpec(alphabet, DfaSpec(d))

    raise SpecFileError("expected 'regex:', 'builtin:' or 'dfa:'", ln2)


def serialize_spec(spec: LanguageSpec) -> str:
    """Inverse of parse_spec_file (round-trips exactly)."""
    out = [f"alphabet: {''.join(spec.alphabet.symbols)}"]
    p = spec.presentation
    if isinstance(p, RegexSpec):
        out.append(f"regex: {p.pattern}")
    elif isinstance(p, OracleSpec):
        params = "".join(f" {v}" for v in p.params)
        out.append(f"builtin: {p.name}{params}")
    else:
        d = p.dfa
        finals = ",".join(str(q) for q in sorted(d.finals)) or "-"
        out.append(f"dfa: {d.n_states} {d.initial} {finals}")
        for row in d.rows:
            out.append(" ".join(str(t) for t in row))
    return "\n".join(out) + "\n"
