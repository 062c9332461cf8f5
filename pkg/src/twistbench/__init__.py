"""twistbench: a workbench for twist factorizations at the homology level."""

from .fixtures import Fixture, FixtureIntegrityError, paper_fixture
from .invariants import (
    DivisibilityResult,
    InvariantReport,
    compute_report,
    euler_char,
    fiber_divisibility,
    h1_total_space,
    meyer_cocycle,
    signature_ledger,
    signature_meyer,
)
from .jsonio import (
    SchemaError,
    decode_factorization,
    encode_factorization,
    read_factorization,
    write_factorization,
)
from .lattice import AbelianGroupInvariants, abelian_quotient, smith_normal_form
from .ledger import LedgerEntry, ledger_signature, merge_ledgers
from .relations import (
    EmbeddingMap,
    RelationTemplate,
    builtin_relation,
    identity_embedding,
    make_embedding,
)
from .script import (
    Script,
    ScriptError,
    ScriptReport,
    Statement,
    parse_script,
    pretty_print,
    run_script,
)
from .spin import (
    FormSolutionSet,
    SpinVerdict,
    classify_arf,
    fibration_spin_check,
    pencil_spin_check,
    solve_forms,
    spin_via_arf,
)
from .surface import (
    CurveClass,
    QuadraticFormZ2,
    SurfaceModel,
    arf,
    curve,
    pairing,
    q_eval,
)
from .twists import (
    Factorization,
    TwistTerm,
    cancel_pairs,
    cap_boundary,
    conjugate_global,
    cyclic_permute,
    dehn,
    factor_matrix,
    fiber_sum,
    homological_triviality,
    hurwitz_move,
    substitute,
    transvection,
    transvection_matrix,
)

__version__ = "0.1.0"

__all__ = [
    "AbelianGroupInvariants",
    "CurveClass",
    "DivisibilityResult",
    "EmbeddingMap",
    "Factorization",
    "Fixture",
    "FixtureIntegrityError",
    "FormSolutionSet",
    "InvariantReport",
    "LedgerEntry",
    "QuadraticFormZ2",
    "RelationTemplate",
    "SchemaError",
    "Script",
    "ScriptError",
    "ScriptReport",
    "SpinVerdict",
    "Statement",
    "SurfaceModel",
    "TwistTerm",
    "abelian_quotient",
    "arf",
    "builtin_relation",
    "cancel_pairs",
    "cap_boundary",
    "classify_arf",
    "compute_report",
    "conjugate_global",
    "curve",
    "cyclic_permute",
    "decode_factorization",
    "dehn",
    "encode_factorization",
    "euler_char",
    "factor_matrix",
    "fiber_divisibility",
    "fiber_sum",
    "fibration_spin_check",
    "h1_total_space",
    "homological_triviality",
    "hurwitz_move",
    "identity_embedding",
    "ledger_signature",
    "make_embedding",
    "merge_ledgers",
    "meyer_cocycle",
    "pairing",
    "paper_fixture",
    "parse_script",
    "pencil_spin_check",
    "pretty_print",
    "q_eval",
    "read_factorization",
    "run_script",
    "signature_ledger",
    "signature_meyer",
    "smith_normal_form",
    "solve_forms",
    "spin_via_arf",
    "substitute",
    "transvection",
    "transvection_matrix",
    "write_factorization",
]
