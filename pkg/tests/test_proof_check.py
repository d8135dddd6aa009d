from fractions import Fraction

import pytest

from sidonlab.models.bound_model import ProofCase
from sidonlab.services.bounds.lambda_bound import lambda_breakdown
from sidonlab.services.bounds.proof_check import TWO_S_LOWER_BOUNDS, case_of, proof_case_check, proof_step


@pytest.mark.parametrize("t", range(6, 65, 2))
def test_chain_closes(t):
    report = proof_case_check(t)
    assert report.inequality_holds
    assert report.n_used == lambda_breakdown(t).n_t
    assert report.target == str(2 ** (t + 1))


def test_t12_falls_through_to_b1():
    report = proof_case_check(12)
    assert (report.case_id, report.n_used) == (ProofCase.ODD_B1, 90)
    assert [s.n for s in report.steps] == [89, 90]


def test_known_endpoints():
    assert proof_case_check(6).n_used == 10
    assert proof_case_check(16).n_used == 360


def test_case_of():
    assert case_of(90) is ProofCase.ODD_B1
    assert case_of(8) is ProofCase.EVEN_B0
    assert case_of(10) is ProofCase.EVEN_B2


def test_steps_are_exact_rationals():
    step = proof_step(16, 360)
    bound = Fraction(step.two_s_lower_bound)
    assert bound == TWO_S_LOWER_BOUNDS[step.case_id](Fraction(360))
    assert step.holds == (bound > 2**17)
