"""Finite-depth shadows of the residual dynamical system of a language.

The full state space is the set of all 0/1-valued functions on words, acted
on by appending letters; the language's orbit in there consists of its
residuals.  Everything here truncates that picture to a finite depth d: a
point remembers membership bits only for words of length <= d, and words are
bucketed by their depth-d residual truncation (a bounded Myhill-Nerode
relation).  Depth-d indistinguishability is not a right congruence, so
quotient transitions are computed on shortest witnesses and cross-checked
against every enumerated class member, with an explicit consistent flag.
"""

from __future__ import annotations

from dataclasses import dataclass

from .alphabet import Alphabet, Word, lengthlex_index, lengthlex_words
from .dfa import Dfa
from .errors import ConsistencyError, DepthExhaustedError, InputError
from .language import LanguageSpec, characteristic_table, membership


@dataclass(frozen=True)
class TruncatedPoint:
    """Membership bits of every word of length <= depth, in length-lex order."""

    alphabet: Alphabet
    depth: int
    bits: tuple[int, ...]

    def __post_init__(self):
        if self.depth < 0:
            raise InputError("depth must be non-negative")
        expected = self.alphabet.word_count(self.depth)
        if len(self.bits) != expected:
            raise InputError(f"expected {expected} bits for depth {self.depth}, got {len(self.bits)}")
        if any(b not in (0, 1) for b in self.bits):
            raise InputError("table entries must be bits")

    def value(self, u: Word) -> int:
        idx = lengthlex_index(self.alphabet.symbols, self.depth).get(u)
        if idx is None:
            self.alphabet.validate_word(u)
            raise InputError(f"word {u!r} longer than depth {self.depth}")
        return self.bits[idx]

    def items(self):
        return zip(lengthlex_words(self.alphabet.symbols, self.depth), self.bits)

    def bit_string(self) -> str:
        return "".join(map(str, self.bits))


def residual_truncation(spec: LanguageSpec, w: Word, d: int) -> TruncatedPoint:
    """Depth-d truncation of the residual of w: bits[u] = membership(w + u)."""
    if d < 0:
        raise InputError("depth must be non-negative")
    spec.alphabet.validate_word(w)
    bits = tuple(membership(spec, w + u) for u in spec.alphabet.words(d))
    return TruncatedPoint(spec.alphabet, d, bits)


def point_transition(p: TruncatedPoint, symbol: str) -> TruncatedPoint:
    """Act by one letter; costs one level of depth since bits[u] = old[symbol+u]."""
    if p.depth < 1:
        raise DepthExhaustedError("cannot act on a depth-0 point")
    p.alphabet.index(symbol)
    idx = lengthlex_index(p.alphabet.symbols, p.depth)
    bits = tuple(p.bits[idx[symbol + u]] for u in lengthlex_words(p.alphabet.symbols, p.depth - 1))
    return TruncatedPoint(p.alphabet, p.depth - 1, bits)


@dataclass(frozen=True)
class Transition:
    """Quotient edge; target is None when the successor class was never
    enumerated, consistent is False when class members disagree."""

    target: int | None
    consistent: bool


@dataclass
class ApproxAutomaton:
    """Depth-d quotient of the enumerated residuals of a language.

    Classes are listed in length-lex order of their first witness, so class 0
    is the class of the empty word and doubles as the initial state.
    """

    alphabet: Alphabet
    depth: int
    horizon: int
    classes: tuple[TruncatedPoint, ...]
    witnesses: tuple[Word, ...]
    transitions: tuple[tuple[Transition, ...], ...]
    accepting: frozenset[int]

    @property
    def initial(self) -> int:
        return 0

    def step(self, class_index: int, symbol: str) -> Transition:
        return self.transitions[class_index][self.alphabet.index(symbol)]

    def to_dfa(self) -> Dfa:
        rows = []
        for row in self.transitions:
            targets = []
            for tr in row:
                if tr.target is None or not tr.consistent:
                    raise ConsistencyError(
                        "quotient has unverified transitions; it does not define a DFA"
                    )
                targets.append(tr.target)
            rows.append(tuple(targets))
        return Dfa(self.alphabet, len(self.classes), 0, frozenset(self.accepting), tuple(rows))


def nerode_classes(spec: LanguageSpec, d: int, horizon: int) -> ApproxAutomaton:
    """Bucket all words of length <= horizon by depth-d residual truncation."""
    if d < 0:
        raise InputError("depth must be non-negative")
    if horizon < d:
        raise InputError("horizon must be at least the depth")
    alphabet = spec.alphabet
    chi = characteristic_table(spec, horizon + d + 1)
    suffixes = lengthlex_words(alphabet.symbols, d)

    def point_of(w: Word) -> TruncatedPoint:
        return TruncatedPoint(alphabet, d, tuple(chi[w + u] for u in suffixes))

    class_of: dict[TruncatedPoint, int] = {}
    classes: list[TruncatedPoint] = []
    witnesses: list[Word] = []
    members: list[list[Word]] = []
    enumerated: dict[Word, int] = {}
    for w in alphabet.words(horizon):
        p = point_of(w)
        ci = class_of.get(p)
        if ci is None:
            ci = len(classes)
            class_of[p] = ci
            classes.append(p)
            witnesses.append(w)
            members.append([])
        members[ci].append(w)
        enumerated[w] = ci

    transitions = []
    for ci, w in enumerate(witnesses):
        row = []
        for ch in alphabet.symbols:
            target = enumerated.get(w + ch)
            if target is None:  # witness sits on the horizon; evaluate past it
                target = class_of.get(point_of(w + ch))
            consistent = target is not None
            if consistent:
                for u in members[ci]:
                    succ = enumerated.get(u + ch)
                    if succ is not None and succ != target:
                        consistent = False
                        break
            row.append(Transition(target, consistent))
        transitions.append(tuple(row))

    accepting = frozenset(ci for ci, p in enumerate(classes) if p.bits[0] == 1)
    return ApproxAutomaton(
        alphabet, d, horizon, tuple(classes), tuple(witnesses), tuple(transitions), accepting
    )


@dataclass
class StabilizationVerdict:
    """Outcome of comparing the depth-d and depth-(d+1) quotients.

    Stabilization (equal counts, bijective refinement, all transitions
    consistent) certifies the depth-d quotient as the minimal DFA when the
    language is known rational; for oracle languages it is only a heuristic
    that the probed depths stopped separating residuals.
    """

    stabilized: bool
    depths: tuple[int, int]
    counts: tuple[int, int]
    size: int | None
    proposed: Dfa | None


def stabilization_check(spec: LanguageSpec, d: int, horizon: int) -> StabilizationVerdict:
    if horizon < d + 1:
        raise InputError("horizon must be at least depth + 1")
    coarse = nerode_classes(spec, d, horizon)
    fine = nerode_classes(spec, d + 1, horizon)
    counts = (len(coarse.classes), len(fine.classes))

    prefix_len = spec.alphabet.word_count(d)
    coarse_index = {p: i for i, p in enumerate(coarse.classes)}
    image = set()
    injective = True
    for p in fine.classes:
        q = TruncatedPoint(spec.alphabet, d, p.bits[:prefix_len])
        ci = coarse_index.get(q)
        if ci is None:
            raise ConsistencyError("depth truncation left the coarse class set")
        if ci in image:
            injective = False
        image.add(ci)

    def all_consistent(a: ApproxAutomaton) -> bool:
        return all(tr.consistent and tr.target is not None for row in a.transitions for tr in row)

    stabilized = (
        counts[0] == counts[1] and injective and all_consistent(coarse) and all_consistent(fine)
    )
    return StabilizationVerdict(
        stabilized,
        (d, d + 1),
        counts,
        counts[0] if stabilized else None,
        coarse.to_dfa() if stabilized else None,
    )


@dataclass(frozen=True)
class ClosurePattern:
    point: TruncatedPoint
    first_length: int
    last_length: int
    count: int
    recurrent: bool


@dataclass
class ClosureReport:
    """Occurrence statistics of depth-d truncations over the horizon band.

    A pattern is called recurrent when some witness lies in the top half of
    the band (length > horizon/2) -- a finite stand-in for the pattern being
    hit arbitrarily late in the orbit; otherwise it is transient.
    """

    depth: int
    horizon: int
    patterns: tuple[ClosurePattern, ...]


def orbit_closure_report(spec: LanguageSpec, d: int, horizon: int) -> ClosureReport:
    if d < 0:
        raise InputError("depth must be non-negative")
    if horizon < 2:
        raise InputError("horizon must be at least 2")
    alphabet = spec.alphabet
    chi = characteristic_table(spec, horizon + d)
    suffixes = lengthlex_words(alphabet.symbols, d)
    stats: dict[TruncatedPoint, list[int]] = {}
    for w in alphabet.words(horizon):
        p = TruncatedPoint(alphabet, d, tuple(chi[w + u] for u in suffixes))
        entry = stats.get(p)
        if entry is None:
            stats[p] = [len(w), len(w), 1]
        else:
            entry[1] = len(w)
            entry[2] += 1
    patterns = tuple(
        ClosurePattern(p, first, last, count, recurrent=2 * last > horizon)
        for p, (first, last, count) in stats.items()
    )
    return ClosureReport(d, horizon, patterns)
