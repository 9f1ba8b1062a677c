"""Service configuration: store root, model, threshold, gates, port."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from pathlib import Path

from casebrief.session.engine import DEFAULT_LEVEL_GATES
from casebrief.warnings import DEFAULT_TAU, validate_tau


@dataclass
class ServiceConfig:
    store_path: str
    model_path: str | None = None
    default_tau: float = DEFAULT_TAU
    default_level_gates: dict[int, frozenset[str]] = field(
        default_factory=lambda: dict(DEFAULT_LEVEL_GATES)
    )
    port: int = 8765
    reveal_explanations: bool = False

    def __post_init__(self) -> None:
        validate_tau(self.default_tau)
        levels = set(self.default_level_gates)
        if levels != {1, 2, 3, 4, 5}:
            raise ValueError(f"level gates must cover levels 1..5, got {sorted(levels)}")

    @classmethod
    def from_file(cls, path: str | Path) -> "ServiceConfig":
        record = json.loads(Path(path).read_text(encoding="utf-8"))
        gates = record.get("default_level_gates")
        parsed_gates = (
            {int(level): frozenset(ops) for level, ops in gates.items()}
            if gates is not None
            else dict(DEFAULT_LEVEL_GATES)
        )
        return cls(
            store_path=record["store_path"],
            model_path=record.get("model_path"),
            default_tau=float(record.get("default_tau", DEFAULT_TAU)),
            default_level_gates=parsed_gates,
            port=int(record.get("port", 8765)),
            reveal_explanations=bool(record.get("reveal_explanations", False)),
        )

    def to_dict(self) -> dict:
        return {
            "store_path": self.store_path,
            "model_path": self.model_path,
            "default_tau": self.default_tau,
            "default_level_gates": {
                str(level): sorted(ops) for level, ops in self.default_level_gates.items()
            },
            "port": self.port,
            "reveal_explanations": self.reveal_explanations,
        }
