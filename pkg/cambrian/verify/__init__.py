from cambrian.verify.axioms import Axiom, AxiomReport, CheckStatus, check_axioms
from cambrian.verify.crosscheck import CrossCheckReport, cross_check
from cambrian.verify.suite import SuiteReport, run_suite

__all__ = [
    "Axiom",
    "AxiomReport",
    "CheckStatus",
    "check_axioms",
    "CrossCheckReport",
    "cross_check",
    "SuiteReport",
    "run_suite",
]
