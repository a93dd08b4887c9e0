"""Exact construction and verification toolkit for finite-dimensional
associative and Lie superalgebras: structure-constant algebras with
validators, queerification and commutator functors, a simplicity engine,
Dunkl-operator calculus, and degree-truncated enveloping algebras."""

from .algebra import (
    ASSOCIATIVE,
    LIE_SUPER,
    Fingerprint,
    SuperAlgebra,
    ValidationReport,
    algebra_mod_p,
    center,
    derived_span,
    fingerprint,
    forget_grading,
    regrade,
    supercenter,
)
from .constructions import (
    GroupData,
    clifford,
    cyclic_group,
    direct_sum,
    group_algebra,
    group_from_permutations,
    group_from_table,
    mat,
    mat_super,
    q_assoc,
    smash_product,
)
from .dunkl import (
    CreaAnn,
    Dunkl,
    Exchange,
    LosevInput,
    Mult,
    OperatorExpr,
    Partial,
    XPolynomial,
    apply_atom,
    apply_crea_ann,
    apply_dunkl,
    apply_exchange,
    apply_mult,
    apply_partial,
    apply_word,
    check_dunkl_commutativity,
    compare_hamiltonians,
    exact_divide_by_difference,
    hamiltonian_apply,
    hamiltonian_displayed_form,
    hamiltonian_dunkl_form,
    hamiltonian_identity_check,
    losev_simple,
    observables_span_survey,
    symmetrize,
)
from .fields import (
    NU,
    NU_POLYNOMIALS,
    RATIONALS,
    FieldSpec,
    FpScalar,
    NuPoly,
    prime_field,
    scalar_arith,
    scalar_from_string,
    scalar_to_string,
)
from .functors import (
    ConditionReport,
    QueerElement,
    QuotientPresentation,
    SubquotientResult,
    bracket_center,
    derived,
    herstein_L,
    lie_of,
    montgomery_SL,
    montgomery_condition_check,
    pair_to_vector,
    pq,
    psq,
    q_lie,
    qtr,
    qtr_vector,
    queerify_assoc,
    queerify_lie,
    quotient_algebra,
    sq,
    sub_on_subspace,
    vector_to_pair,
)
from .glambda import (
    Sl2Rep,
    UElement,
    UPair,
    casimir,
    casimir_check,
    evaluate_rep,
    highest_weight_value,
    ideal_codim_probe,
    ideal_window_probe,
    pbw_confluence_check,
    queer_bracket,
    rep_map,
    u_bracket,
    u_multiply,
)
from .linalg import ModRowSpace, RowSpace, Subspace, row_reduce, subspace_combine
from .qformat import algebra_from_json, algebra_to_json, load_algebra, save_algebra
from .simplicity import (
    BurnsideCertificate,
    IdealWitness,
    SimplicityVerdict,
    ideal_generated,
    is_central_simple,
    is_simple,
)

__version__ = "0.1.0"
