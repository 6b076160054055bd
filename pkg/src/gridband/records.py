"""Line-delimited JSON result records written by the CLI."""

from __future__ import annotations

import json
from dataclasses import asdict, dataclass


@dataclass(frozen=True)
class ResultRecord:
    command: str
    graph: dict  # {"family": ..., "params": [...]} or {"path": ...}
    k: int | None
    t: int | None
    budget_nodes: int | None
    value: int
    status: str
    nodes_expanded: int
    elapsed: float
    witness_board: str | None = None

    def to_json(self) -> str:
        return json.dumps(asdict(self), sort_keys=True)

    @staticmethod
    def from_json(line: str) -> "ResultRecord":
        return ResultRecord(**json.loads(line))
