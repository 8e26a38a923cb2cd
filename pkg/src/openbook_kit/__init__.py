"""Open books, Legendrian placements on pages, and transverse push-off certificates."""

from __future__ import annotations

from .approx import (
    SgCertificate,
    approximate_subbinding,
    decrease_contact_framing,
    legendrian_approximation,
    loose_planar_pipeline,
    realize_on_page,
    replay_provenance,
    roundtrip_sg,
    transverse_witness,
)
from .errors import (
    CoCoreError,
    DimensionError,
    FramingError,
    InterchangeError,
    OpenBookKitError,
    PlacementError,
    ReplayError,
    UnsupportedDocumentError,
    WordSpecError,
)
from .legendrian import (
    LinkComponent,
    LinkPlacement,
    TransverseLinkRecord,
    pushoff_invariants,
    stabilize_legendrian,
    validate_placement,
)
from .openbook import MonodromyWord, OpenBook, Twist, monodromy_homology_action, negative_stabilize, positive_stabilize
from .pushoff import (
    Case,
    Certificate,
    apply_schedule,
    build_schedule,
    classify,
    lemma_crucial_step,
    permute_and_check,
    pushoff,
)
from .surface import CurveRef, DifferentBoundaries, SameBoundary, Surface, attach_handle, euler_char, intersection, twist_action

__all__ = [
    "Case", "Certificate", "CoCoreError", "CurveRef", "DifferentBoundaries", "DimensionError", "FramingError",
    "InterchangeError", "LinkComponent", "LinkPlacement", "MonodromyWord", "OpenBook", "OpenBookKitError",
    "PlacementError", "ReplayError", "SameBoundary", "SgCertificate", "Surface", "TransverseLinkRecord", "Twist",
    "UnsupportedDocumentError", "WordSpecError", "apply_schedule", "approximate_subbinding", "attach_handle",
    "build_schedule", "classify", "decrease_contact_framing", "euler_char", "intersection", "legendrian_approximation",
    "lemma_crucial_step", "loose_planar_pipeline", "monodromy_homology_action", "negative_stabilize",
    "permute_and_check", "positive_stabilize", "pushoff", "pushoff_invariants", "realize_on_page", "replay_provenance",
    "roundtrip_sg", "stabilize_legendrian", "transverse_witness", "twist_action", "validate_placement",
]
