"""Run every module's doctests as part of the suite."""

import doctest

import pytest

import hesspin.billey
import hesspin.cli
import hesspin.fillings
import hesspin.hess334
import hesspin.permutations
import hesspin.pinball

MODULES = [
    hesspin.permutations,
    hesspin.fillings,
    hesspin.pinball,
    hesspin.billey,
    hesspin.hess334,
    hesspin.cli,
]


@pytest.mark.parametrize("module", MODULES, ids=lambda m: m.__name__)
def test_doctests(module):
    failed, attempted = doctest.testmod(module)
    assert failed == 0
    if module is not hesspin.cli:
        assert attempted > 0
