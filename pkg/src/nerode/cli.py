"""Command-line surface: one subcommand per workbench operation.

Exit codes: 0 success (or a passing verification), 1 verification
violations found, 2 input/precondition/usage errors.  Output is canonical
JSON unless --format dot is given (automaton-producing subcommands only);
`champernowne` emits a plain bit string.

The --spec value is a path if one exists, otherwise an inline spec with
" / " standing for line breaks, e.g. "alphabet: a / regex: (aa)*".
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .dfa import is_strongly_connected, minimize_dfa
from .errors import InputError, NerodeError
from .language import LanguageSpec, membership, parse_spec_file, presented_dfa
from .monoid import (
    FiniteMonoid,
    context_classes,
    growth_profile,
    idempotent_power,
    syntactic_monoid,
    transition_monoid,
)
from .recognition import (
    check_morphism,
    induced_hom,
    minimal_monoid_hom,
    minimization_morphism,
    verify_recognition,
)
from .serialize import (
    export_dot,
    export_json,
    monoid_dict,
    morphism_dict,
    report_dict,
)
from .shift import BitStream, champernowne_prefix, champernowne_stream, density_check
from .topology import (
    nerode_classes,
    orbit_closure_report,
    residual_truncation,
    stabilization_check,
)

DEFAULT_DEPTH = 3
DEFAULT_HORIZON = 8
DEFAULT_BOUND = 12


def load_spec(value: str) -> LanguageSpec:
    path = Path(value)
    if path.is_file():
        return parse_spec_file(path.read_text(encoding="utf-8"))
    return parse_spec_file(value.replace(" / ", "\n"))


def _emit(args, payload, dot_source=None) -> int:
    if getattr(args, "format", "json") == "dot":
        if dot_source is None:
            raise InputError("this subcommand has no DOT rendering")
        sys.stdout.write(export_dot(dot_source))
    else:
        sys.stdout.write(export_json(payload))
    return 0


def _emit_report(report) -> int:
    sys.stdout.write(export_json(report))
    return 0 if report.passed else 1


def _parse_finals(text: str) -> frozenset[int]:
    if text == "-":
        return frozenset()
    try:
        return frozenset(int(f) for f in text.split(",") if f != "")
    except ValueError:
        raise InputError(f"final elements must be a comma-separated list of integers, got {text!r}") from None


def _monoid_from_args(args) -> FiniteMonoid:
    return transition_monoid(presented_dfa(load_spec(args.monoid)))


def cmd_membership(args) -> int:
    spec = load_spec(args.spec)
    bit = membership(spec, args.word)
    return _emit(args, {"schema": "nerode/membership/1", "word": args.word, "member": bit})


def cmd_minimize(args) -> int:
    spec = load_spec(args.spec)
    d = minimize_dfa(presented_dfa(spec))
    return _emit(args, d, dot_source=d)


def cmd_residual(args) -> int:
    spec = load_spec(args.spec)
    return _emit(args, residual_truncation(spec, args.word, args.depth))


def cmd_nerode(args) -> int:
    spec = load_spec(args.spec)
    a = nerode_classes(spec, args.depth, args.horizon)
    return _emit(args, a, dot_source=a)


def cmd_stabilize(args) -> int:
    spec = load_spec(args.spec)
    return _emit(args, stabilization_check(spec, args.depth, args.horizon))


def cmd_closure(args) -> int:
    spec = load_spec(args.spec)
    return _emit(args, orbit_closure_report(spec, args.depth, args.horizon))


def cmd_monoid(args) -> int:
    spec = load_spec(args.spec)
    return _emit(args, transition_monoid(presented_dfa(spec)))


def cmd_syntactic(args) -> int:
    spec = load_spec(args.spec)
    m, finals = syntactic_monoid(spec)
    return _emit(args, monoid_dict(m, finals))


def cmd_idempotents(args) -> int:
    spec = load_spec(args.spec)
    m = transition_monoid(presented_dfa(spec))
    items = []
    for s in range(m.order):
        e = idempotent_power(m, s)
        k, p = 1, s
        while p != e:
            p = m.table[p][s]
            k += 1
        items.append({"element": s, "witness": m.witnesses[s], "idempotent": e, "exponent": k})
    payload = {"schema": "nerode/idempotents/1", "order": m.order, "items": items}
    return _emit(args, payload)


def cmd_contexts(args) -> int:
    spec = load_spec(args.spec)
    return _emit(args, context_classes(spec, args.left, args.right, args.bound))


def cmd_growth(args) -> int:
    spec = load_spec(args.spec)
    return _emit(args, growth_profile(spec, args.k, args.bound))


def cmd_morphism(args) -> int:
    spec = load_spec(args.spec)
    d = presented_dfa(load_spec(args.dfa))
    phi = minimization_morphism(d, spec, args.bound)
    report = check_morphism(phi)
    payload = morphism_dict(phi)
    payload["report"] = report_dict(report)
    sys.stdout.write(export_json(payload))
    return 0 if report.passed else 1


def cmd_induced_hom(args) -> int:
    spec = load_spec(args.spec)
    d = presented_dfa(load_spec(args.dfa))
    phi = minimization_morphism(d, spec, args.bound)
    return _emit(args, induced_hom(phi))


def cmd_recognize(args) -> int:
    spec = load_spec(args.spec)
    m = _monoid_from_args(args)
    report = verify_recognition(m, m.generators, _parse_finals(args.finals), spec, args.bound)
    return _emit_report(report)


def cmd_min_hom(args) -> int:
    spec = load_spec(args.spec)
    m = _monoid_from_args(args)
    psi = minimal_monoid_hom(m, m.generators, _parse_finals(args.finals), spec, args.bound)
    return _emit(args, psi)


def cmd_champernowne(args) -> int:
    sys.stdout.write(champernowne_prefix(args.prefix) + "\n")
    return 0


def cmd_density(args) -> int:
    stream = BitStream(load_spec(args.spec)) if args.spec else champernowne_stream()
    return _emit_report(density_check(stream, args.k, args.prefix))


def cmd_connected(args) -> int:
    spec = load_spec(args.spec)
    d = minimize_dfa(presented_dfa(spec))
    payload = {
        "schema": "nerode/connected/1",
        "states": d.n_states,
        "strongly_connected": is_strongly_connected(d),
    }
    return _emit(args, payload)


def _add_spec(p, required=True):
    p.add_argument("--spec", required=required, help="spec file path or inline spec (' / ' = newline)")


def _add_format(p):
    p.add_argument("--format", choices=["json", "dot"], default="json")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="nerode",
        description="Residual automata and syntactic monoid workbench",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help_text):
        p = sub.add_parser(name, help=help_text)
        p.set_defaults(func=func)
        return p

    p = add("membership", cmd_membership, "evaluate the characteristic function on one word")
    _add_spec(p)
    p.add_argument("--word", required=True)
    _add_format(p)

    p = add("minimize", cmd_minimize, "canonical minimal DFA of a rational spec")
    _add_spec(p)
    _add_format(p)

    p = add("residual", cmd_residual, "depth-d truncation of the residual of a word")
    _add_spec(p)
    p.add_argument("--word", required=True)
    p.add_argument("--depth", type=int, default=DEFAULT_DEPTH)
    _add_format(p)

    p = add("nerode", cmd_nerode, "depth-d quotient of the enumerated residuals")
    _add_spec(p)
    p.add_argument("--depth", type=int, default=DEFAULT_DEPTH)
    p.add_argument("--horizon", type=int, default=DEFAULT_HORIZON)
    _add_format(p)

    p = add("stabilize", cmd_stabilize, "compare depth-d and depth-(d+1) quotients")
    _add_spec(p)
    p.add_argument("--depth", type=int, default=DEFAULT_DEPTH)
    p.add_argument("--horizon", type=int, default=DEFAULT_HORIZON)
    _add_format(p)

    p = add("closure", cmd_closure, "occurrence statistics of depth-d residual patterns")
    _add_spec(p)
    p.add_argument("--depth", type=int, default=DEFAULT_DEPTH)
    p.add_argument("--horizon", type=int, default=DEFAULT_HORIZON)
    _add_format(p)

    p = add("monoid", cmd_monoid, "transition monoid of the presented DFA")
    _add_spec(p)
    _add_format(p)

    p = add("syntactic", cmd_syntactic, "syntactic monoid and recognizing subset")
    _add_spec(p)
    _add_format(p)

    p = add("idempotents", cmd_idempotents, "idempotent power of every transition monoid element")
    _add_spec(p)
    _add_format(p)

    p = add("contexts", cmd_contexts, "bounded-context classes of words")
    _add_spec(p)
    p.add_argument("--left", type=int, default=1)
    p.add_argument("--right", type=int, default=1)
    p.add_argument("--bound", type=int, default=DEFAULT_BOUND)
    _add_format(p)

    p = add("growth", cmd_growth, "context class counts at bounds (k,k), k=1..kmax")
    _add_spec(p)
    p.add_argument("--k", type=int, default=3)
    p.add_argument("--bound", type=int, default=DEFAULT_BOUND)
    _add_format(p)

    p = add("morphism", cmd_morphism, "morphism from a trim DFA onto the minimal DFA, checked")
    _add_spec(p)
    p.add_argument("--dfa", required=True, help="spec for the source DFA")
    p.add_argument("--bound", type=int, default=DEFAULT_BOUND)
    _add_format(p)

    p = add("induced-hom", cmd_induced_hom, "monoid homomorphism induced by the minimization morphism")
    _add_spec(p)
    p.add_argument("--dfa", required=True, help="spec for the source DFA")
    p.add_argument("--bound", type=int, default=DEFAULT_BOUND)
    _add_format(p)

    p = add("recognize", cmd_recognize, "check that a monoid/final-set pair recognizes the language")
    _add_spec(p)
    p.add_argument("--monoid", required=True, help="spec for a DFA whose transition monoid is used")
    p.add_argument("--finals", required=True, help="comma-separated element indices ('-' for none)")
    p.add_argument("--bound", type=int, default=DEFAULT_BOUND)
    _add_format(p)

    p = add("min-hom", cmd_min_hom, "collapse a recognizing monoid onto the syntactic monoid")
    _add_spec(p)
    p.add_argument("--monoid", required=True, help="spec for a DFA whose transition monoid is used")
    p.add_argument("--finals", required=True, help="comma-separated element indices ('-' for none)")
    p.add_argument("--bound", type=int, default=DEFAULT_BOUND)
    _add_format(p)

    p = add("champernowne", cmd_champernowne, "prefix of the dense-orbit bit sequence")
    p.add_argument("--prefix", type=int, required=True)

    p = add("density", cmd_density, "which length-k patterns occur in a stream prefix")
    _add_spec(p, required=False)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--prefix", type=int, required=True)
    _add_format(p)

    p = add("connected", cmd_connected, "strong connectivity of the minimal DFA")
    _add_spec(p)
    _add_format(p)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)
    try:
        return args.func(args)
    except NerodeError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
