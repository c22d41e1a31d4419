"""Exact stable-model enumeration for desk-scale programs.

The search space over n atoms is all 2**n subsets of At(program). Rather
than looping over interpretations, every expression is evaluated once for
the whole space: a column is a 2**n-bit integer whose bit s holds the truth
value under the interpretation encoded by the bits of s. Conjunction is &,
negation is xor against the all-ones mask, and an aggregate becomes a mux
tree over its domain columns driven by its truth table. Candidate models
drop out as the set bits of the program column, and each one's minimality
is decided the same way on the subspace of its own subsets, or through the
least-fixpoint shortcut whenever the reduct is Horn.

A polynomial fast path covers the monotone fragment, where the single
candidate G-stable model is the least fixpoint itself.
"""

from __future__ import annotations

from enum import Enum
from functools import lru_cache
from typing import Iterable, Iterator

from .core import (
    AggregateSpec,
    Atom,
    AtomLiteral,
    Interpretation,
    Program,
    Rule,
    atoms_of,
)
from .errors import PreconditionError, TooManyAtomsError
from .rewriter import rewrite_rew, rewrite_str
from .semantics import (
    aggregate_truth_table,
    eval_aggregate,
    f_reduct,
    g_reduct,
    is_asp_m,
    is_horn,
    is_minimal_model,
    satisfies,
    tp_least_fixpoint,
)

DEFAULT_MAX_ATOMS = 24

# above this many (table entries x space width) bits, the mux tree for an
# aggregate is built per interpretation instead of per domain subset
_MUX_BUDGET_BITS = 1 << 28


class Semantics(Enum):
    """Which reduct stability is checked against: F keeps aggregates in
    place, G replaces them by their true domain atoms."""

    F = "f"
    G = "g"


class ModelSet:
    """Stable models in canonical order: by cardinality, then by the sorted
    atom names. Duplicates are a programming error and are rejected."""

    __slots__ = ("models",)

    def __init__(self, models: Iterable[Interpretation] = ()):
        ordered = sorted(
            (frozenset(model) for model in models),
            key=lambda model: (len(model), tuple(sorted(model))),
        )
        for first, second in zip(ordered, ordered[1:]):
            if first == second:
                names = ", ".join(atom.name for atom in sorted(first))
                raise ValueError(f"duplicate model {{{names}}}")
        self.models = tuple(ordered)

    def __iter__(self):
        return iter(self.models)

    def __len__(self) -> int:
        return len(self.models)

    def __contains__(self, item) -> bool:
        return item in self.models

    def __eq__(self, other) -> bool:
        if not isinstance(other, ModelSet):
            return NotImplemented
        return self.models == other.models

    def __repr__(self) -> str:
        shown = ", ".join(
            "{" + ", ".join(atom.name for atom in sorted(model)) + "}"
            for model in self.models
        )
        return f"ModelSet([{shown}])"


@lru_cache(maxsize=128)
def _pattern(position: int, dimension: int) -> int:
    """Column of the atom at `position` over a 2**dimension space: bit s is
    (s >> position) & 1. Built by doubling, so cost is linear in the width."""
    pattern = ((1 << (1 << position)) - 1) << (1 << position)
    span = 1 << (position + 1)
    width = 1 << dimension
    while span < width:
        pattern |= pattern << span
        span <<= 1
    return pattern


class _Space:
    """Truth-table evaluator over all subsets of a fixed atom tuple."""

    def __init__(self, universe: Iterable[Atom]):
        self.universe = tuple(universe)
        self.position = {atom: i for i, atom in enumerate(self.universe)}
        self.width = 1 << len(self.universe)
        self.full = (1 << self.width) - 1

    def interpretation(self, index: int) -> Interpretation:
        return frozenset(
            atom for i, atom in enumerate(self.universe) if index >> i & 1
        )

    def atom_column(self, atom: Atom) -> int:
        position = self.position.get(atom)
        if position is None:
            return 0  # an atom outside the space is false everywhere
        return _pattern(position, len(self.universe))

    def literal_column(self, lit: AtomLiteral) -> int:
        column = self.atom_column(lit.atom)
        return column ^ self.full if lit.negation_depth % 2 else column

    def aggregate_column(self, spec: AggregateSpec) -> int:
        domain = spec.domain
        if (1 << len(domain)) * self.width > _MUX_BUDGET_BITS:
            return self._aggregate_column_scalar(spec)
        table = aggregate_truth_table(spec, max_domain=len(domain))
        layer = [self.full if truth else 0 for truth in table]
        for atom in domain:
            chosen = self.atom_column(atom)
            dropped = chosen ^ self.full
            layer = [
                low if low is high else (low & dropped) | (high & chosen)
                for low, high in zip(layer[::2], layer[1::2])
            ]
        return layer[0]

    def _aggregate_column_scalar(self, spec: AggregateSpec) -> int:
        bits = [
            "1" if eval_aggregate(spec, self.interpretation(index)) else "0"
            for index in range(self.width)
        ]
        bits.reverse()
        return int("".join(bits), 2)

    def body_column(self, body) -> int:
        column = self.full
        for lit in body:
            if isinstance(lit, AggregateSpec):
                column &= self.aggregate_column(lit)
            else:
                column &= self.literal_column(lit)
            if not column:
                break
        return column

    def rule_column(self, rule: Rule) -> int:
        head = 0
        for atom in rule.head:
            head |= self.atom_column(atom)
        return (self.body_column(rule.body) ^ self.full) | head

    def program_column(self, program: Program) -> int:
        column = self.full
        for rule in program:
            column &= self.rule_column(rule)
            if not column:
                break
        return column


def _iter_bits(value: int) -> Iterator[int]:
    while value:
        low = value & -value
        yield low.bit_length() - 1
        value ^= low


def _reduct(program: Program, interp: Interpretation, sem: Semantics) -> Program:
    return f_reduct(program, interp) if sem is Semantics.F else g_reduct(program, interp)


def _minimal_for_reduct(interp: Interpretation, reduct: Program) -> bool:
    if is_horn(reduct):
        return is_minimal_model(interp, reduct)
    # interp models the reduct whenever it models the program, so stability
    # is exactly "no other subset satisfies it": only the top bit may be set
    space = _Space(sorted(interp))
    return space.program_column(reduct) == 1 << (space.width - 1)


def is_stable(program: Program, interp: Interpretation, sem: Semantics) -> bool:
    """True iff interp models the program and no strict subset models the
    reduct taken with respect to interp."""
    foreign = frozenset(interp) - atoms_of(program)
    if foreign:
        names = ", ".join(sorted(atom.name for atom in foreign))
        raise PreconditionError(
            f"interpretation mentions atoms outside the program: {names}"
        )
    if not satisfies(interp, program):
        return False
    return is_minimal_model(interp, _reduct(program, interp, sem))


def stable_models(
    program: Program, sem: Semantics, *, max_atoms: int = DEFAULT_MAX_ATOMS
) -> ModelSet:
    """All stable models under the chosen semantics, canonically ordered.

    Enumeration is exact over the subsets of At(program); programs with
    more than max_atoms atoms are refused rather than answered partially.
    """
    universe = sorted(atoms_of(program))
    if len(universe) > max_atoms:
        raise TooManyAtomsError(
            f"program has {len(universe)} atoms; "
            f"the enumeration guard allows {max_atoms}"
        )
    space = _Space(universe)
    found = []
    for index in _iter_bits(space.program_column(program)):
        interp = space.interpretation(index)
        if _minimal_for_reduct(interp, _reduct(program, interp, sem)):
            found.append(interp)
    return ModelSet(found)


def gsm_asp_m(program: Program) -> ModelSet:
    """G-stable models of a monotone program without enumeration: the least
    fixpoint is the only candidate, and it stands iff the fixpoint of its
    own reduct confirms it."""
    fixpoint = tp_least_fixpoint(program)
    confirmed = tp_least_fixpoint(g_reduct(program, fixpoint))
    return ModelSet([fixpoint] if fixpoint == confirmed else [])


def check_coherence(
    program: Program, sem: Semantics, *, max_atoms: int = DEFAULT_MAX_ATOMS
) -> bool:
    """Does at least one stable model exist? Monotone programs under G skip
    enumeration entirely."""
    if sem is Semantics.G and is_asp_m(program):
        return bool(gsm_asp_m(program))
    return bool(stable_models(program, sem, max_atoms=max_atoms))


def cautious(
    program: Program,
    atom: Atom,
    sem: Semantics,
    *,
    max_atoms: int = DEFAULT_MAX_ATOMS,
) -> bool:
    """True iff every stable model contains the atom; vacuously true for
    incoherent programs."""
    return all(
        atom in model for model in stable_models(program, sem, max_atoms=max_atoms)
    )


def brave(
    program: Program,
    atom: Atom,
    sem: Semantics,
    *,
    max_atoms: int = DEFAULT_MAX_ATOMS,
) -> bool:
    """True iff some stable model contains the atom; false for incoherent
    programs."""
    return any(
        atom in model for model in stable_models(program, sem, max_atoms=max_atoms)
    )


_REWRITINGS = {"rew": rewrite_rew, "str": rewrite_str}


def solve_via_rewriting(
    program: Program,
    method: str,
    *,
    minimal_copies: bool = False,
    max_atoms: int = DEFAULT_MAX_ATOMS,
) -> ModelSet:
    """G-stable models computed by rewriting and solving under F, projected
    back onto the input's atoms. The atom guard applies to the rewritten
    program, which is the one being enumerated."""
    try:
        rewriting = _REWRITINGS[method]
    except KeyError:
        raise ValueError(
            f"unknown rewriting {method!r}; expected 'rew' or 'str'"
        ) from None
    rewritten = rewriting(program, minimal_copies=minimal_copies)
    base = atoms_of(program)
    projected = [
        model & base
        for model in stable_models(rewritten, Semantics.F, max_atoms=max_atoms)
    ]
    return ModelSet(projected)
