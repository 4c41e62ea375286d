"""Exact computations around Kostant's cascade, seaweed subalgebras q_{S,T}
and affine slices for their coadjoint action."""

__version__ = "0.1.0"

from .cascade import (  # noqa: E402
    CascadeElement,
    Verdict,
    cascade,
    check_cascade_properties,
    counterexample_witness,
    lemma22a_check,
    lemma22b_check,
)
from .chevalley import ChevalleyBasis, LieElement, bracket, build_chevalley  # noqa: E402
from .linalg import Matrix, intersect_subspaces, kernel_basis, rank  # noqa: E402
from .roots import RootSystem, TypeSpec, build_root_system, connected_components, highest_root  # noqa: E402
from .seaweed import (  # noqa: E402
    GammaData,
    Seaweed,
    build_seaweed,
    check_structure_identities,
    gamma_data,
    hypothesis_check,
)
from .slice import (  # noqa: E402
    LinearForm,
    SliceData,
    VerificationReport,
    build_slice,
    check_lemma33,
    check_lemma34,
    check_theorem36,
    coadjoint_matrix,
    index,
    stabilizer,
)
from .survey import SurveyRecord, emit_report, survey  # noqa: E402
