"""Structure-preserving maps onto minimal recognizers, with verification.

Three constructions, each paired with an explicit checker so that claimed
maps are never trusted silently:

  * minimization_morphism: the unique state map from a trim DFA onto the
    minimal DFA of its language, with finals mapping exactly onto the
    accepting classes.
  * induced_hom: the monoid homomorphism between transition monoids that a
    surjective automaton morphism induces.
  * minimal_monoid_hom: the collapse of any finite monoid recognizing a
    rational language onto the syntactic monoid.

Verification is finite and exact for DFA-vs-DFA language comparisons
(product construction); oracle comparisons are bounded by a word length.
In finite monoids every subset is clopen and right translation is always
continuous, so the topological side conditions of the corresponding
infinite statements hold vacuously and are not re-checked here.
"""

from __future__ import annotations

from dataclasses import dataclass

from .dfa import Dfa, access_words, language_mismatch, minimize_dfa
from .errors import (
    ConsistencyError,
    IllDefinedHomError,
    InputError,
    RecognitionError,
    RecognitionMismatchError,
    TrimnessError,
)
from .language import LanguageSpec, characteristic_table, presented_dfa
from .monoid import FiniteMonoid, syntactic_monoid, transition_monoid
from .topology import ApproxAutomaton

DEFAULT_WORD_BOUND = 12


@dataclass(frozen=True)
class Violation:
    kind: str
    witness: str
    detail: str = ""


@dataclass
class Report:
    violations: tuple[Violation, ...]

    @property
    def passed(self) -> bool:
        return not self.violations


@dataclass
class AutomatonMorphism:
    """State map source -> target claimed to commute with the letter actions."""

    source: Dfa
    target: Dfa | ApproxAutomaton
    mapping: tuple[int, ...]


def _target_initial(target) -> int:
    return target.initial


def _target_step(target, state: int, symbol: str) -> int | None:
    if isinstance(target, Dfa):
        return target.step(state, symbol)
    tr = target.step(state, symbol)
    return tr.target


def _target_accepting(target) -> frozenset[int]:
    if isinstance(target, Dfa):
        return target.finals
    return frozenset(target.accepting)


def minimization_morphism(
    d: Dfa, spec: LanguageSpec, bound: int = DEFAULT_WORD_BOUND
) -> AutomatonMorphism:
    """The unique morphism from a trim DFA onto the minimal DFA of the
    spec's language, sending each state to the class of its residual.

    Requires every state reachable (trimness) and L(d) = L(spec): exact via
    the product automaton for rational specs, bounded-word check otherwise.
    """
    access = access_words(d)
    unreachable = sorted(set(range(d.n_states)) - set(access))
    if unreachable:
        raise TrimnessError(unreachable)

    if spec.rational:
        witness = language_mismatch(d, presented_dfa(spec))
        if witness is not None:
            raise RecognitionMismatchError(witness)
    else:
        chi = characteristic_table(spec, bound)
        for w, bit in chi.items():
            if bool(bit) != d.accepts(w):
                raise RecognitionMismatchError(w)

    target = minimize_dfa(d)
    mapping = tuple(target.run(access[s]) for s in range(d.n_states))
    return AutomatonMorphism(d, target, mapping)


def check_morphism(phi: AutomatonMorphism) -> Report:
    """Initial state, equivariance on every (state, symbol), and finals onto
    accepting in both directions; every violation is listed, none raised."""
    src = phi.source
    if len(phi.mapping) != src.n_states:
        raise InputError("morphism map must cover every source state")
    violations: list[Violation] = []

    t0 = _target_initial(phi.target)
    if phi.mapping[src.initial] != t0:
        violations.append(
            Violation("initial", str(src.initial), f"maps to {phi.mapping[src.initial]}, expected {t0}")
        )

    for s in range(src.n_states):
        for k, ch in enumerate(src.alphabet.symbols):
            expected = _target_step(phi.target, phi.mapping[s], ch)
            got = phi.mapping[src.rows[s][k]]
            if expected is None:
                violations.append(Violation("equivariance", f"{s}:{ch}", "target transition unresolved"))
            elif got != expected:
                violations.append(
                    Violation("equivariance", f"{s}:{ch}", f"map(s.{ch}) = {got}, map(s).{ch} = {expected}")
                )

    accepting = _target_accepting(phi.target)
    image_of_finals = {phi.mapping[s] for s in src.finals}
    for s in sorted(src.finals):
        if phi.mapping[s] not in accepting:
            violations.append(Violation("finals-forward", str(s), "final state maps outside the accepting set"))
    for t in sorted(accepting):
        if t not in image_of_finals:
            violations.append(Violation("finals-backward", str(t), "accepting class not hit by any final state"))

    return Report(tuple(violations))


@dataclass
class MonoidHom:
    """Element map between finite monoids; entries are None for source
    elements outside the generated part (reported in `ignored`)."""

    source: FiniteMonoid
    target: FiniteMonoid
    mapping: tuple[int | None, ...]
    ignored: tuple[int, ...] = ()


def induced_hom(phi: AutomatonMorphism) -> MonoidHom:
    """Homomorphism between transition monoids induced by a valid surjective
    automaton morphism: the action of w upstairs maps to the action of w
    downstairs.
    """
    if not isinstance(phi.target, Dfa):
        raise InputError("induced homomorphism needs a DFA target")
    report = check_morphism(phi)
    if not report.passed:
        v = report.violations[0]
        raise InputError(f"morphism is not valid: {v.kind} at {v.witness}")
    if set(phi.mapping) != set(range(phi.target.n_states)):
        raise InputError("morphism is not surjective")

    m_src = transition_monoid(phi.source)
    m_tgt = transition_monoid(phi.target)
    mapping = tuple(m_tgt.evaluate_word(w) for w in m_src.witnesses)

    # Well-definedness alarm: with a valid surjective morphism the witness
    # choice cannot matter, so a disagreement means a bug, not bad input.
    for i, w in enumerate(m_src.witnesses):
        for ch, gi in m_src.generators.items():
            j = m_src.table[i][gi]
            if mapping[j] != m_tgt.table[mapping[i]][m_tgt.generators[ch]]:
                raise ConsistencyError(
                    f"witnesses {m_src.witnesses[j]!r} and {w + ch!r} name one element "
                    f"but map to different targets"
                )
    if set(mapping) != set(range(m_tgt.order)):
        raise ConsistencyError("induced homomorphism failed to cover the target monoid")
    return MonoidHom(m_src, m_tgt, mapping)


def _walk_images(spec: LanguageSpec, monoid: FiniteMonoid, gen_images: dict[str, int], bound: int):
    """Yield (word, image element) for all words of length <= bound, length-lex."""
    level = [("", 0)]
    yield "", 0
    for _ in range(bound):
        nxt = []
        for w, e in level:
            for ch in spec.alphabet.symbols:
                t = monoid.table[e][gen_images[ch]]
                u = w + ch
                yield u, t
                nxt.append((u, t))
        level = nxt


def _check_gen_images(spec: LanguageSpec, monoid: FiniteMonoid, gen_images: dict[str, int]):
    for ch in spec.alphabet.symbols:
        if ch not in gen_images:
            raise InputError(f"no generator image for symbol {ch!r}")
        if not 0 <= gen_images[ch] < monoid.order:
            raise InputError(f"generator image for {ch!r} out of range")


def verify_recognition(
    monoid: FiniteMonoid,
    gen_images: dict[str, int],
    final_elements,
    spec: LanguageSpec,
    bound: int,
) -> Report:
    """Check that words mapping into final_elements are exactly the members,
    for every word of length <= bound.  Violations are report content."""
    _check_gen_images(spec, monoid, gen_images)
    finals = frozenset(final_elements)
    for e in finals:
        if not 0 <= e < monoid.order:
            raise InputError(f"final element {e} out of range")
    chi = characteristic_table(spec, bound)
    violations = []
    for w, e in _walk_images(spec, monoid, gen_images, bound):
        in_f = e in finals
        member = bool(chi[w])
        if in_f != member:
            side = "in F but not in the language" if in_f else "in the language but not in F"
            violations.append(Violation("recognition", w, f"element {e} {side}"))
    return Report(tuple(violations))


def minimal_monoid_hom(
    monoid: FiniteMonoid,
    gen_images: dict[str, int],
    final_elements,
    spec: LanguageSpec,
    bound: int = DEFAULT_WORD_BOUND,
) -> MonoidHom:
    """Collapse a recognizing monoid onto the syntactic monoid.

    The word map phi is determined by gen_images; it must recognize the
    language via final_elements up to the word bound (checked first).  The
    part of the monoid not generated by the images carries no word content
    and is left out of the map (reported via `ignored`).  A well-definedness
    failure names two words with equal phi-image whose syntactic images
    differ: proof that final_elements cannot recognize the language.
    """
    syntactic, _ = syntactic_monoid(spec)  # rejects oracle presentations up front
    report = verify_recognition(monoid, gen_images, final_elements, spec, bound)
    if not report.passed:
        raise RecognitionError(report.violations[0].witness)

    witness_of = {0: ""}
    order = [0]
    i = 0
    while i < len(order):
        e = order[i]
        for ch in spec.alphabet.symbols:
            t = monoid.table[e][gen_images[ch]]
            if t not in witness_of:
                witness_of[t] = witness_of[e] + ch
                order.append(t)
        i += 1
    ignored = tuple(sorted(set(range(monoid.order)) - set(order)))

    mapping: list[int | None] = [None] * monoid.order
    for e in order:
        mapping[e] = syntactic.evaluate_word(witness_of[e])

    for e in order:
        for ch in spec.alphabet.symbols:
            t = monoid.table[e][gen_images[ch]]
            expected = syntactic.table[mapping[e]][syntactic.generators[ch]]
            if mapping[t] != expected:
                raise IllDefinedHomError((witness_of[t], witness_of[e] + ch))

    if set(mapping) - {None} != set(range(syntactic.order)):
        raise ConsistencyError("collapse failed to cover the syntactic monoid")
    return MonoidHom(monoid, syntactic, tuple(mapping), ignored)
