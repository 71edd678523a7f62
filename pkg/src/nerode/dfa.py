"""Complete deterministic finite automata and their minimization.

Minimization runs Hopcroft partition refinement over the reachable part and
renumbers the quotient so that state i is reached by the i-th shortest
length-lex access word.  Two minimal DFAs for the same language are therefore
structurally equal, which makes isomorphism checks trivial.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .alphabet import Alphabet, Word
from .errors import InputError


@dataclass(frozen=True)
class Dfa:
    """Total DFA over a fixed alphabet; states are 0..n_states-1.

    rows[s][k] is the successor of state s on the k-th alphabet symbol.
    """

    alphabet: Alphabet
    n_states: int
    initial: int
    finals: frozenset[int]
    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        n = self.n_states
        if n <= 0:
            raise InputError("a DFA needs at least one state")
        if not 0 <= self.initial < n:
            raise InputError(f"initial state {self.initial} out of range 0..{n - 1}")
        for q in self.finals:
            if not 0 <= q < n:
                raise InputError(f"final state {q} out of range 0..{n - 1}")
        if len(self.rows) != n:
            raise InputError(f"expected {n} transition rows, got {len(self.rows)}")
        k = len(self.alphabet)
        for s, row in enumerate(self.rows):
            if len(row) != k:
                raise InputError(f"state {s}: expected one target per symbol ({k}), got {len(row)}")
            for t in row:
                if not 0 <= t < n:
                    raise InputError(f"state {s}: target {t} out of range 0..{n - 1}")

    def step(self, state: int, symbol: str) -> int:
        return self.rows[state][self.alphabet.index(symbol)]

    def run(self, word: Word, start: int | None = None) -> int:
        state = self.initial if start is None else start
        for ch in word:
            state = self.rows[state][self.alphabet.index(ch)]
        return state

    def accepts(self, word: Word) -> bool:
        return self.run(word) in self.finals


def reachable_states(d: Dfa) -> list[int]:
    """States reachable from the initial state, in BFS (length-lex) order."""
    seen = {d.initial}
    order = [d.initial]
    queue = deque([d.initial])
    while queue:
        s = queue.popleft()
        for t in d.rows[s]:
            if t not in seen:
                seen.add(t)
                order.append(t)
                queue.append(t)
    return order


def access_words(d: Dfa) -> dict[int, Word]:
    """Shortest length-lex access word for every reachable state."""
    words = {d.initial: ""}
    queue = deque([d.initial])
    while queue:
        s = queue.popleft()
        for k, t in enumerate(d.rows[s]):
            if t not in words:
                words[t] = words[s] + d.alphabet.symbols[k]
                queue.append(t)
    return words


def canonical_form(d: Dfa) -> Dfa:
    """Drop unreachable states and renumber by shortest access word."""
    order = reachable_states(d)
    renum = {old: new for new, old in enumerate(order)}
    rows = tuple(tuple(renum[t] for t in d.rows[old]) for old in order)
    finals = frozenset(renum[q] for q in d.finals if q in renum)
    return Dfa(d.alphabet, len(order), 0, finals, rows)


def _nerode_partition(d: Dfa) -> dict[int, int]:
    """Hopcroft refinement; returns state -> block id for an all-reachable DFA."""
    n = d.n_states
    k = len(d.alphabet)
    pre: list[list[list[int]]] = [[[] for _ in range(n)] for _ in range(k)]
    for s, row in enumerate(d.rows):
        for a, t in enumerate(row):
            pre[a][t].append(s)

    finals = frozenset(d.finals)
    rest = frozenset(range(n)) - finals
    partition = {b for b in (finals, rest) if b}
    worklist = set()
    if finals and rest:
        worklist.add(finals if len(finals) <= len(rest) else rest)

    while worklist:
        splitter = worklist.pop()
        for a in range(k):
            x = {s for t in splitter for s in pre[a][t]}
            if not x:
                continue
            for block in list(partition):
                inter = block & x
                if not inter or len(inter) == len(block):
                    continue
                diff = block - inter
                inter, diff = frozenset(inter), frozenset(diff)
                partition.remove(block)
                partition.add(inter)
                partition.add(diff)
                if block in worklist:
                    worklist.remove(block)
                    worklist.add(inter)
                    worklist.add(diff)
                else:
                    worklist.add(inter if len(inter) <= len(diff) else diff)

    block_of = {}
    for i, block in enumerate(partition):
        for s in block:
            block_of[s] = i
    return block_of


def minimize_dfa(d: Dfa) -> Dfa:
    """Minimal DFA of L(d), reachable states only, canonically numbered."""
    r = canonical_form(d)
    block_of = _nerode_partition(r)
    n_blocks = len(set(block_of.values()))
    rep = {}
    for s in range(r.n_states):
        rep.setdefault(block_of[s], s)
    rows = tuple(
        tuple(block_of[r.rows[rep[b]][a]] for a in range(len(r.alphabet)))
        for b in range(n_blocks)
    )
    finals = frozenset(block_of[q] for q in r.finals)
    quotient = Dfa(r.alphabet, n_blocks, block_of[r.initial], finals, rows)
    return canonical_form(quotient)


def dfa_isomorphic(a: Dfa, b: Dfa) -> bool:
    """Isomorphism of the reachable parts (exact for canonical minimal DFAs)."""
    return canonical_form(a) == canonical_form(b)


def language_mismatch(a: Dfa, b: Dfa) -> Word | None:
    """Shortest length-lex word accepted by exactly one of the two DFAs.

    Exact product-automaton check; returns None when L(a) = L(b).
    """
    if a.alphabet != b.alphabet:
        raise InputError("language comparison needs a common alphabet")
    start = (a.initial, b.initial)
    seen = {start}
    queue = deque([(start, "")])
    while queue:
        (s, t), w = queue.popleft()
        if (s in a.finals) != (t in b.finals):
            return w
        for k, ch in enumerate(a.alphabet.symbols):
            nxt = (a.rows[s][k], b.rows[t][k])
            if nxt not in seen:
                seen.add(nxt)
                queue.append((nxt, w + ch))
    return None


def is_strongly_connected(d: Dfa) -> bool:
    """True iff the transition graph is strongly connected.

    For a minimal DFA this is the criterion for the residual dynamical
    system of the language to be minimal (every orbit closure is the whole
    state space).  The caller is expected to minimize first.
    """
    n = d.n_states
    if len(reachable_states(d)) < n:
        return False
    back: list[list[int]] = [[] for _ in range(n)]
    for s, row in enumerate(d.rows):
        for t in row:
            back[t].append(s)
    seen = {d.initial}
    queue = deque([d.initial])
    while queue:
        s = queue.popleft()
        for t in back[s]:
            if t not in seen:
                seen.add(t)
                queue.append(t)
    return len(seen) == n
