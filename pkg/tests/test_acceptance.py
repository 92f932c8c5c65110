"""One test per acceptance criterion.  Each delegates to the acceptance
module, prints the one-line report entry, and asserts the verdict."""

import pytest

from nonrep import acceptance


def _run(number):
    (result,) = acceptance.run_all([number])
    print(f"criterion {result.number} [{result.name}]: "
          f"{'pass' if result.passed else 'FAIL'} ({result.seconds:.1f}s) {result.detail}")
    assert result.passed, result.detail


def test_criterion_1_morphism_fidelity():
    _run(1)


def test_criterion_2_g2_certificate():
    _run(2)


def test_criterion_3_g5_certificate():
    _run(3)


def test_criterion_4_level_tree_oracle():
    _run(4)


def test_criterion_5_path_theorems():
    _run(5)


def test_criterion_6_pik_exactness():
    _run(6)


def test_criterion_7_lemma_path():
    _run(7)


def test_criterion_8_construction_invariants():
    _run(8)


def test_criterion_9_oracle_equivalence():
    _run(9)
