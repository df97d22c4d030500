"""Non-negative solutions of linear Diophantine equations and Frobenius numbers."""

from .core import (
    CoprimeTuple,
    EmptyOrSingleton,
    InstanceParams,
    NonPositiveCoefficient,
    NotSetwiseCoprime,
    TupleError,
    cbar,
    check_proposition1,
    instance_params,
    new_coprime_tuple,
)
from .denumerant import (
    CapExceeded,
    Condition8NotSatisfied,
    CountBreakdown,
    LVector,
    check_mass_identity,
    count_bounded,
    count_bruteforce,
    count_special_case,
    count_structural,
    l_vector_direct,
    l_vector_inclusion_exclusion,
)
from .frobenius import (
    FrobeniusReport,
    NotCoprimePair,
    bound_r0,
    bound_thm8,
    closed_form_thm7,
    frobenius_exact,
    frobenius_report,
    frobenius_scan,
)
from .solvability import (
    SolvabilityVerdict,
    decide,
    sufficient_thm2,
    sufficient_thm3,
    sufficient_thm4,
    sufficient_thm5,
    sufficient_thm6,
)

__version__ = "0.1.0"
