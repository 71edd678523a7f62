"""Acceptance suite: one test per release criterion, exact tolerances.

Each test prints a [ACCEPTANCE] <name>: PASS/FAIL line (visible with -s or
when a test fails).  Expected numbers marked "frozen" below were computed
with the independent brute-force oracles in tests/oracles.py, never copied
from the implementation under test.
"""

import contextlib
import random
import time

from nerode import (
    Alphabet,
    champernowne_prefix,
    champernowne_stream,
    check_morphism,
    compile_regex,
    builtin_language,
    density_check,
    dfa_isomorphic,
    growth_profile,
    idempotent_power,
    induced_hom,
    membership,
    minimal_monoid_hom,
    minimize_dfa,
    minimization_morphism,
    nerode_classes,
    syntactic_monoid,
    stabilization_check,
    transition_monoid,
    unary_residual_count,
    verify_recognition,
)
from tests.corpus import REGEX_CORPUS, chain_dfa, cycle_dfa, regex_spec
from tests.oracles import (
    all_words,
    dfa_language_spec,
    random_trim_dfa,
    residual_class_count,
    residual_matching_morphism,
    word_actions,
)
from tests.test_shift import MINIMAL_DENSITY_PREFIX


@contextlib.contextmanager
def criterion(name, budget_seconds):
    start = time.perf_counter()
    try:
        yield
    except BaseException:
        print(f"[ACCEPTANCE] {name}: FAIL")
        raise
    elapsed = time.perf_counter() - start
    assert elapsed < budget_seconds, f"{name} took {elapsed:.2f}s (budget {budget_seconds}s)"
    print(f"[ACCEPTANCE] {name}: PASS ({elapsed:.2f}s)")


def test_rational_collapse():
    with criterion("rational collapse", 5.0):
        assert len(REGEX_CORPUS) >= 10
        for pattern, symbols, _ in REGEX_CORPUS:
            spec = regex_spec(pattern, symbols)
            minimal = minimize_dfa(compile_regex(pattern, Alphabet.of(symbols)))
            for d in range(1, 9):
                verdict = stabilization_check(spec, d, d + 6)
                if verdict.stabilized:
                    assert verdict.size == minimal.n_states, pattern
                    assert dfa_isomorphic(verdict.proposed, minimal), pattern
                    break
            else:
                raise AssertionError(f"{pattern} did not stabilize by depth 8")


def test_syntactic_monoid_desk_values():
    with criterion("syntactic monoid desk values", 5.0):
        spec = regex_spec("(aa)*", "a")
        m, finals = syntactic_monoid(spec)
        assert m.order == 2
        assert finals == frozenset({0})  # the identity only
        # oracle: word actions on the minimal DFA, enumerated to length 6
        from nerode import minimal_dfa

        assert set(m.elements) == word_actions(minimal_dfa(spec), 6)

        spec2 = regex_spec("(a|b)*ab", "ab")
        m2, finals2 = syntactic_monoid(spec2)
        assert m2.order == 5
        assert set(m2.elements) == word_actions(minimal_dfa(spec2), 6)
        assert len(finals2) == 1
        (f,) = finals2
        assert len(set(m2.elements[f])) == 1  # a single constant map


def test_idempotent_witness():
    with criterion("idempotent witness", 1.0):
        monoids = [transition_monoid(chain_dfa()), transition_monoid(cycle_dfa(4, {0, 2}))]
        for pattern, symbols, _ in REGEX_CORPUS:
            monoids.append(syntactic_monoid(regex_spec(pattern, symbols))[0])
        for m in monoids:
            for s in range(m.order):
                e = idempotent_power(m, s)
                assert m.mul(e, e) == e
        # the order-3 unary monoid 1, a, a^2 with a^3 = a: a^2 is a
        # non-identity idempotent
        chain_monoid = monoids[0]
        assert chain_monoid.order == 3
        a = chain_monoid.generators["a"]
        e = idempotent_power(chain_monoid, a)
        assert e != 0 and chain_monoid.mul(e, e) == e


def test_minimization_theorem_suite():
    with criterion("minimization theorem suite", 10.0):
        rng = random.Random(20260809)
        for _ in range(100):
            d = random_trim_dfa(rng, max_states=8, symbols="ab")
            spec = dfa_language_spec(d)
            phi = minimization_morphism(d, spec)
            report = check_morphism(phi)
            assert report.passed, report.violations
            # finals onto accepting, both directions, re-checked explicitly
            image = {phi.mapping[s] for s in d.finals}
            assert image == phi.target.finals
            # uniqueness: the independent residual-matching construction
            # yields the same map
            assert phi.mapping == residual_matching_morphism(d, phi.target)


def test_functoriality_and_minimal_monoid_triangles():
    with criterion("functoriality and minimal monoid triangles", 5.0):
        # induced homomorphisms from automaton morphisms
        cases = [chain_dfa(), cycle_dfa(4, {0, 2}), cycle_dfa(6, {0, 3})]
        rng = random.Random(5)
        cases += [random_trim_dfa(rng, max_states=5) for _ in range(10)]
        for d in cases:
            spec = dfa_language_spec(d)
            phi = minimization_morphism(d, spec)
            psi = induced_hom(phi)
            src, tgt = psi.source, psi.target
            for w in all_words(d.alphabet.symbols, 6):
                assert psi.mapping[src.evaluate_word(w)] == tgt.evaluate_word(w)
            assert set(psi.mapping) == set(range(tgt.order))

        # collapse of a recognizing monoid onto the syntactic monoid
        spec = regex_spec("(aa)*", "a")
        syntactic, s_finals = syntactic_monoid(spec)
        z4 = transition_monoid(cycle_dfa(4, {0, 2}))
        hom_cases = [
            (z4, z4.generators, {0, 2}),
            (syntactic, syntactic.generators, s_finals),
        ]
        for m, gens, finals in hom_cases:
            psi = minimal_monoid_hom(m, gens, finals, spec)
            for w in all_words("a", 6):
                assert psi.mapping[m.evaluate_word(w)] == syntactic.evaluate_word(w)
            assert set(psi.mapping) - {None} == set(range(syntactic.order))


def test_non_rational_growth():
    with criterion("non-rational growth", 10.0):
        anbn = builtin_language("anbn")
        # frozen oracle counts: 2d+1 distinct depth-d residual signatures
        # (the a-spine, the dead class, the accept-only class reached by
        # a^n b^n, and the b^j tail classes)
        frozen = {1: 3, 2: 5, 3: 7, 4: 9, 5: 11, 6: 13}
        for d in range(1, 7):
            live = residual_class_count(lambda w: membership(anbn, w), ("a", "b"), d, d + 2)
            assert live == frozen[d]
            assert len(nerode_classes(anbn, d, d + 2).classes) == frozen[d]
        counts = [len(nerode_classes(anbn, d, d + 2).classes) for d in range(1, 7)]
        assert all(a < b for a, b in zip(counts, counts[1:]))  # strict growth in depth
        profile = growth_profile(anbn, 3, 8)
        assert profile.counts[0] < profile.counts[1] < profile.counts[2]
        assert profile.verdict == "growing"


def test_dense_orbit_example():
    with criterion("dense orbit example", 30.0):
        assert champernowne_prefix(10) == "0100011011"
        stream = champernowne_stream()
        for k in range(1, 9):
            report = density_check(stream, k, MINIMAL_DENSITY_PREFIX[k])
            assert report.passed, f"k={k} missing {report.missing}"
        spec = builtin_language("champernowne_unary")
        for d in range(0, 8):
            horizon = MINIMAL_DENSITY_PREFIX[d + 1] - (d + 1)
            assert unary_residual_count(spec, d, horizon) == 2 ** (d + 1)


def test_refinement_chains():
    with criterion("refinement chains", 10.0):
        from nerode import context_classes, residual_truncation

        specs = [
            builtin_language("anbn"),
            builtin_language("dyck1"),
            regex_spec("(a|b)*ab", "ab"),
            regex_spec("(aa)*", "a"),
        ]
        violations = 0
        for spec in specs:
            symbols = spec.alphabet.symbols
            for d in range(0, 4):
                groups = {}
                for w in all_words(symbols, 5):
                    fine = residual_truncation(spec, w, d + 1)
                    coarse = residual_truncation(spec, w, d)
                    groups.setdefault(fine, set()).add(coarse)
                violations += sum(1 for v in groups.values() if len(v) != 1)
            for k in (1, 2):
                fine_table = context_classes(spec, k + 1, k + 1, 4)
                coarse_table = context_classes(spec, k, k, 4)
                for members in fine_table.members:
                    if len({coarse_table.class_of(u) for u in members}) != 1:
                        violations += 1
        assert violations == 0


def test_recognition_soundness():
    with criterion("recognition soundness", 5.0):
        spec = regex_spec("(aa)*", "a")
        mod2 = transition_monoid(cycle_dfa(2, {0}))
        assert verify_recognition(mod2, mod2.generators, {0}, spec, 10).passed
        mod3 = transition_monoid(cycle_dfa(3, {0}))
        report = verify_recognition(mod3, mod3.generators, {0}, spec, 10)
        assert not report.passed
        assert report.violations[0].witness == "aa"
