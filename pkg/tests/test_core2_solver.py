"""Cross-check of the solver-dialect emission against a real solver.

Skipped unless `clingo` is importable. The emitted text is the shipped
feature; running it through a solver is a development-time sanity check
that the dialect means what the enumerator computes.
"""

from __future__ import annotations

import pytest

clingo = pytest.importorskip("clingo")

from gzasp import Semantics, emit_core2, stable_models
from helpers import golden_program


def solver_models(text: str) -> set:
    control = clingo.Control(["0"])
    control.add("base", [], text)
    control.ground([("base", [])])
    found = set()
    with control.solve(yield_=True) as handle:
        for model in handle:
            found.add(frozenset(str(sym) for sym in model.symbols(atoms=True)))
    return found


def test_golden_program_agrees_with_solver():
    program = golden_program()
    expected = {
        frozenset(atom.name for atom in model)
        for model in stable_models(program, Semantics.F)
    }
    assert solver_models(emit_core2(program)) == expected
