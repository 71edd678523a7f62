"""Finite transformation monoids acting on DFA state sets.

Elements are image tuples (state i maps to images[i]); composition is in
action order, so table[i][j] is "apply i, then j", matching the right action
of words on states.  Breadth-first closure over the generators assigns each
element its shortest length-lex witness word and a canonical index.

The syntactic monoid of a rational language is the transition monoid of its
minimal DFA, together with the final element set F = {s : s(initial) in
finals}; a word belongs to the language iff its action lies in F.  For
non-rational languages the same object is infinite, and context_classes
computes its finite shadows: words bucketed by which bounded two-sided
contexts put them in the language.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field

from .alphabet import Word
from .dfa import Dfa
from .errors import InputError, ResourceError, UnsupportedPresentationError
from .language import LanguageSpec, characteristic_table, minimal_dfa

Transformation = tuple[int, ...]

DEFAULT_ELEMENT_CAP = 10_000
CAP_ENV_VAR = "NERODE_MONOID_CAP"


def compose(f: Transformation, g: Transformation) -> Transformation:
    """Apply f, then g."""
    return tuple(g[x] for x in f)


def _resolve_cap(cap: int | None) -> int:
    if cap is not None:
        return cap
    env = os.environ.get(CAP_ENV_VAR)
    if env is not None:
        try:
            return int(env)
        except ValueError:
            raise InputError(f"{CAP_ENV_VAR} must be an integer, got {env!r}") from None
    return DEFAULT_ELEMENT_CAP


@dataclass
class FiniteMonoid:
    """Transformation monoid with multiplication table and word witnesses.

    elements[0] is the identity (witness: the empty word); table[i][j] is the
    index of elements[i] followed by elements[j].
    """

    n_states: int
    elements: tuple[Transformation, ...]
    table: tuple[tuple[int, ...], ...]
    generators: dict[str, int]
    witnesses: tuple[Word, ...]
    _index: dict[Transformation, int] = field(default_factory=dict, repr=False)

    def __post_init__(self):
        if not self._index:
            self._index = {e: i for i, e in enumerate(self.elements)}

    @property
    def order(self) -> int:
        return len(self.elements)

    def mul(self, i: int, j: int) -> int:
        return self.table[i][j]

    def element_index(self, t: Transformation) -> int | None:
        return self._index.get(t)

    def evaluate_word(self, w: Word) -> int:
        """Index of the action of w (fold the generators left to right)."""
        e = 0
        for ch in w:
            g = self.generators.get(ch)
            if g is None:
                raise InputError(f"symbol {ch!r} has no generator in this monoid")
            e = self.table[e][g]
        return e


def monoid_from_generators(
    n_states: int, generators: dict[str, Transformation], cap: int | None = None
) -> FiniteMonoid:
    """BFS closure of the generators under composition.

    Iteration order of the generators dict fixes the length-lex tie-break,
    so pass symbols in alphabet order.
    """
    cap = _resolve_cap(cap)
    for ch, g in generators.items():
        if len(g) != n_states or any(not 0 <= x < n_states for x in g):
            raise InputError(f"generator for {ch!r} is not a transformation of {n_states} states")
    ident = tuple(range(n_states))
    elements = [ident]
    index = {ident: 0}
    witnesses = [""]
    i = 0
    while i < len(elements):
        f = elements[i]
        for ch, g in generators.items():
            h = tuple(g[x] for x in f)
            if h not in index:
                if len(elements) >= cap:
                    raise ResourceError(
                        f"monoid closure exceeded the cap of {cap} elements"
                        f" (override with {CAP_ENV_VAR} or the cap argument)"
                    )
                index[h] = len(elements)
                elements.append(h)
                witnesses.append(witnesses[i] + ch)
        i += 1
    table = tuple(tuple(index[compose(f, g)] for g in elements) for f in elements)
    gen_map = {ch: index[tuple(g)] for ch, g in generators.items()}
    return FiniteMonoid(n_states, tuple(elements), table, gen_map, tuple(witnesses), index)


def transition_monoid(d: Dfa, cap: int | None = None) -> FiniteMonoid:
    """All word actions on the DFA's state set."""
    gens = {
        ch: tuple(d.rows[s][k] for s in range(d.n_states))
        for k, ch in enumerate(d.alphabet.symbols)
    }
    return monoid_from_generators(d.n_states, gens, cap)


def syntactic_monoid(
    spec: LanguageSpec, cap: int | None = None
) -> tuple[FiniteMonoid, frozenset[int]]:
    """Transition monoid of the minimal DFA plus the recognizing subset F.

    Only rational specs have a finite syntactic monoid; for oracle specs use
    context_classes, which lower-bounds it.
    """
    if not spec.rational:
        raise UnsupportedPresentationError(
            "syntactic monoid needs a regex or dfa presentation; use context_classes instead"
        )
    m = minimal_dfa(spec)
    monoid = transition_monoid(m, cap)
    final_elements = frozenset(
        i for i, e in enumerate(monoid.elements) if e[m.initial] in m.finals
    )
    return monoid, final_elements


def idempotent_power(monoid: FiniteMonoid, s: int) -> int:
    """The unique idempotent power of s: the first s^k with s^k s^k = s^k.

    Every element of a finite monoid has one, identity or not; non-identity
    idempotents are what make transformation monoids structurally rich.
    """
    if not 0 <= s < monoid.order:
        raise InputError(f"element {s} out of range 0..{monoid.order - 1}")
    p = s
    while monoid.table[p][p] != p:
        p = monoid.table[p][s]
    return p


@dataclass
class ContextClassTable:
    """Words of length <= bound partitioned by bounded context signature.

    Two words are equivalent when exactly the same contexts (x, y) with
    |x| <= left and |y| <= right put them in the language.  As the bounds
    grow these partitions converge to the syntactic congruence, so the class
    count is a lower bound for the syntactic monoid's order.
    """

    left: int
    right: int
    bound: int
    representatives: tuple[Word, ...]
    sizes: tuple[int, ...]
    signatures: tuple[tuple[int, ...], ...]
    members: tuple[tuple[Word, ...], ...]
    _index: dict[Word, int] = field(default_factory=dict, repr=False)

    def __post_init__(self):
        if not self._index:
            self._index = {w: i for i, ws in enumerate(self.members) for w in ws}

    @property
    def class_count(self) -> int:
        return len(self.representatives)

    def class_of(self, u: Word) -> int:
        ci = self._index.get(u)
        if ci is None:
            raise InputError(f"word {u!r} was not enumerated (bound {self.bound})")
        return ci


def context_classes(spec: LanguageSpec, m: int, n: int, bound: int) -> ContextClassTable:
    if m < 0 or n < 0:
        raise InputError("context bounds must be non-negative")
    if bound < 1:
        raise InputError("word-length bound must be at least 1")
    alphabet = spec.alphabet
    chi = characteristic_table(spec, m + bound + n)
    xs = list(alphabet.words(m))
    ys = list(alphabet.words(n))
    by_sig: dict[tuple[int, ...], int] = {}
    reps: list[Word] = []
    sigs: list[tuple[int, ...]] = []
    members: list[list[Word]] = []
    for u in alphabet.words(bound):
        sig = tuple(chi[x + u + y] for x in xs for y in ys)
        ci = by_sig.get(sig)
        if ci is None:
            ci = len(reps)
            by_sig[sig] = ci
            reps.append(u)
            sigs.append(sig)
            members.append([])
        members[ci].append(u)
    return ContextClassTable(
        m,
        n,
        bound,
        tuple(reps),
        tuple(len(ws) for ws in members),
        tuple(sigs),
        tuple(tuple(ws) for ws in members),
    )


@dataclass
class GrowthProfile:
    """Context class counts at symmetric bounds (k, k) for k = 1..kmax."""

    counts: tuple[int, ...]
    bound: int

    @property
    def bounded(self) -> bool | None:
        if len(self.counts) < 2:
            return None
        return self.counts[-1] == self.counts[-2]

    @property
    def verdict(self) -> str:
        if self.bounded is None:
            return "inconclusive"
        return "bounded (rational-consistent)" if self.bounded else "growing"


def growth_profile(spec: LanguageSpec, kmax: int, bound: int) -> GrowthProfile:
    if kmax < 1:
        raise InputError("kmax must be at least 1")
    if bound < kmax:
        raise InputError("word-length bound must be at least kmax")
    counts = tuple(context_classes(spec, k, k, bound).class_count for k in range(1, kmax + 1))
    return GrowthProfile(counts, bound)
