"""Regular systems of paths: balanced-word languages, signatures, regular
tableaux, the sweep test for geometric tableaux, and envelopes."""

from .errors import BudgetExceeded, ConditionOneError, DomainError, UnbalancedError
from .words import (
    Word,
    caret,
    classify_language,
    expand,
    exponent_sequence,
    factor_blocks,
    factor_word,
    is_balanced,
    is_refinement,
    is_well_balanced,
    normalize,
    restrict,
)
from .signatures import (
    KaraCertificate,
    SignatureClass,
    associated_word,
    check_extendable,
    check_omega_form,
    classify,
    condition2_factorization,
    counts,
    irreducible_factorization,
    is_extendable,
    is_irreducible,
    is_valid_signature,
    predicted_upper_envelope,
    signature_restrictions,
    signature_to_tableau3,
)
from .tableaux import (
    Tableau,
    concat_tableaux,
    is_pangrammatic,
    is_regular,
    order_equivalent,
    phi_sequence,
    phi_tableau,
    restrict_tableau,
    word_of_regular_tableau,
)
from .sweep import (
    EnvelopeReport,
    WiringDiagram,
    diagram_envelopes,
    envelopes,
    has_valid_matching,
    is_geometric,
    local_sequences,
    subsystem_envelope_scan,
)
from .svg import render_svg
