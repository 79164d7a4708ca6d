"""Linear relations between finite-dimensional spaces over exact fields.

Subspace and relation algebra, Douglas-type factorization criteria with
constructive solvers for A ⊆ BC and A ⊆ CB, and a brute-force oracle over
tiny prime fields.
"""

from types import ModuleType as _ModuleType

from .errors import (BadScalar, BudgetExceeded, DimensionMismatch, DivisionByZero, FieldMismatch, LinrelError,
                     NotAPrime, NotAnOperator, NotContained, ParseError, ShapeMismatch, VerificationError)
from .field import GF, QQ, FieldSpec, Scalar, field_from_tag, scalar_arith
from .subspace import Subspace, canonicalize, complement, contains, intersect, span_sum
from .relation import (LinearRelation, RelationParts, arens_equal, compose, contained_via_parts, diagonal, image,
                       inverse, is_operator, parts, preimage, restrict)
from .report import DecisionReport, Evidence
from .factorization import (OperatorSolution, SelectionWitness, SolutionBasis, complement_split_check,
                            exact_left_check, exact_right_check, independent_selection_check,
                            is_right_solution_general_form, left_criterion, left_injective_criterion,
                            left_relation_criterion, operator_part, operator_part_criterion,
                            operators_left_sufficient, pointwise_right_check, right_operator_criterion,
                            right_relation_criterion, selection_check_composite, solve_left_operator,
                            solve_left_operator_injective, solve_left_relation, solve_right_operator,
                            solve_right_relation)
from .relfile import parse_relation, read_relation, serialize_relation, write_relation

__version__ = "0.1.0"

__all__ = sorted(name for name, value in globals().items()
                 if not name.startswith("_") and not isinstance(value, _ModuleType))
