"""Proficiency-adaptive tutoring and annotation for case-brief analysis.

The package splits into five layers: ``corpus`` builds sentence-level
datasets from raw briefs; ``classifier`` trains and serves six-label
sentence models; ``warnings`` turns model probabilities into
advisory label warnings; ``session`` runs the level-gated tutoring
state machine; ``service`` hosts everything behind a file-backed store,
an HTTP API, and a CLI.
"""

from casebrief.labels import LABEL_ORDER, NUM_LABELS, SectionLabel, label_index

__version__ = "0.1.0"

__all__ = ["LABEL_ORDER", "NUM_LABELS", "SectionLabel", "label_index", "__version__"]
