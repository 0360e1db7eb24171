"""
Results Module for catalanff.

This module provides standardized containers for theorem verdicts, search
reports and lemma reports, with dictionary, JSON, DataFrame and file export.
"""

from enum import Enum
from typing import Any, Dict, List, Optional, Tuple
import json
import os

import numpy as np
import pandas as pd
import yaml


def convert_numpy_types(obj: Any) -> Any:
    """Convert NumPy types to native Python types."""
    if isinstance(obj, np.integer):
        return int(obj)
    elif isinstance(obj, np.floating):
        return float(obj)
    elif isinstance(obj, np.bool_):
        return bool(obj)
    elif isinstance(obj, np.ndarray):
        return obj.tolist()
    elif isinstance(obj, dict):
        return {k: convert_numpy_types(v) for k, v in obj.items()}
    elif isinstance(obj, (list, tuple)):
        return [convert_numpy_types(item) for item in obj]
    else:
        return obj


class Status(str, Enum):
    """Outcome of a theorem check."""

    THEOREM_APPLIES = "THEOREM_APPLIES"
    INCONCLUSIVE = "INCONCLUSIVE"
    CHAR_DIVIDES_BOTH_SIDES_IMPOSSIBLE = "CHAR_DIVIDES_BOTH_SIDES_IMPOSSIBLE"

    @property
    def exit_code(self) -> int:
        return {"THEOREM_APPLIES": 0, "INCONCLUSIVE": 2,
                "CHAR_DIVIDES_BOTH_SIDES_IMPOSSIBLE": 3}[self.value]


class _Report:
    """Shared export helpers; subclasses implement to_dict and to_dataframe."""

    def to_dict(self) -> Dict[str, Any]:
        raise NotImplementedError

    def to_dataframe(self) -> pd.DataFrame:
        raise NotImplementedError

    def to_json(self, indent: Optional[int] = 2) -> str:
        return json.dumps(convert_numpy_types(self.to_dict()), indent=indent)

    def save(self, filepath: str, formats: Optional[List[str]] = None) -> Dict[str, str]:
        """
        Save the report to file(s).

        Args:
            filepath: Base filepath without extension
            formats: List of formats to save (default: ['json'])

        Returns:
            Dictionary mapping format to saved filepath
        """
        formats = formats or ['json']
        saved_files = {}

        os.makedirs(os.path.dirname(filepath) or ".", exist_ok=True)

        for fmt in formats:
            fmt = fmt.lower()
            if fmt == 'json':
                json_path = f"{filepath}.json"
                with open(json_path, 'w') as f:
                    f.write(self.to_json())
                    f.write("\n")
                saved_files['json'] = json_path
            elif fmt == 'csv':
                csv_path = f"{filepath}.csv"
                self.to_dataframe().to_csv(csv_path, index=False)
                saved_files['csv'] = csv_path
            elif fmt == 'yaml':
                yaml_path = f"{filepath}.yaml"
                with open(yaml_path, 'w') as f:
                    yaml.safe_dump(convert_numpy_types(self.to_dict()), f,
                                   default_flow_style=False, sort_keys=False)
                saved_files['yaml'] = yaml_path
            else:
                raise ValueError(f"Unsupported report format: {fmt}")

        return saved_files


class TheoremVerdict(_Report):
    """
    Whether the class-number criterion applies to (F, m, n).

    `conditions` holds the three conditions for the chosen pair (or for the
    last pair evaluated); a condition that was not needed is None.
    `pairs` records every (p, q) pair looked at, in evaluation order.
    """

    def __init__(self, curve: str, m: int, n: int, status: Status,
                 chosen_p: Optional[int] = None, chosen_q: Optional[int] = None,
                 h_values: Optional[Dict[str, int]] = None,
                 conditions: Optional[Dict[str, Optional[bool]]] = None,
                 pairs: Optional[List[Dict[str, Any]]] = None):
        self.curve = curve
        self.m = m
        self.n = n
        self.status = Status(status)
        self.chosen_p = chosen_p
        self.chosen_q = chosen_q
        self.h_values = dict(sorted((h_values or {}).items()))
        self.conditions = conditions or {"1": None, "2": None, "3": None}
        self.pairs = pairs or []

    @property
    def pair(self) -> Optional[Tuple[int, int]]:
        if self.chosen_p is None:
            return None
        return (self.chosen_p, self.chosen_q)

    @property
    def exit_code(self) -> int:
        return self.status.exit_code

    def to_dict(self) -> Dict[str, Any]:
        return {
            "curve": self.curve,
            "m": self.m,
            "n": self.n,
            "status": self.status.value,
            "pair": list(self.pair) if self.pair else None,
            "conditions": dict(self.conditions),
            "h_values": dict(self.h_values),
            "pairs_evaluated": list(self.pairs),
        }

    def to_dataframe(self) -> pd.DataFrame:
        """One row per evaluated (p, q) pair."""
        return pd.DataFrame(self.pairs, columns=["p", "q", "condition_1", "condition_2",
                                                 "condition_3", "satisfied"])

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "TheoremVerdict":
        pair = data.get("pair") or (None, None)
        return cls(data["curve"], data["m"], data["n"], Status(data["status"]),
                   pair[0], pair[1], data.get("h_values"), data.get("conditions"),
                   data.get("pairs_evaluated"))


class Solution:
    """One verified solution (X, Y), stored by its printed form."""

    def __init__(self, x: str, y: str, d_x: Optional[int], d_y: Optional[int],
                 constant: bool):
        self.x = x
        self.y = y
        self.d_x = d_x
        self.d_y = d_y
        self.constant = constant

    @classmethod
    def from_pair(cls, x, y) -> "Solution":
        """Build from two RingElements."""
        d_x = None if x.is_zero() else x.pole_order()
        d_y = None if y.is_zero() else y.pole_order()
        return cls(str(x), str(y), d_x, d_y, x.is_constant() and y.is_constant())

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Solution):
            return NotImplemented
        return self.to_dict() == other.to_dict()

    def __repr__(self) -> str:
        kind = "constant" if self.constant else "non-constant"
        return f"Solution(X={self.x}, Y={self.y}, {kind})"

    def to_dict(self) -> Dict[str, Any]:
        return {"X": self.x, "Y": self.y, "d_X": self.d_x, "d_Y": self.d_y,
                "constant": self.constant}

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "Solution":
        return cls(data["X"], data["Y"], data.get("d_X"), data.get("d_Y"), data["constant"])


class SearchReport(_Report):
    """Outcome of a bounded search for solutions of X^m = rhs(Y) in O_F."""

    def __init__(self, curve: str, m: int, n: int, bound: int, rhs: str,
                 candidates_examined: int, solutions: List[Solution],
                 elapsed: Optional[float] = None, strategy: str = "roots",
                 sieved: int = 0):
        self.curve = curve
        self.m = m
        self.n = n
        self.bound = bound
        self.rhs = rhs
        self.candidates_examined = candidates_examined
        self.solutions = list(solutions)
        self.elapsed = elapsed
        self.strategy = strategy
        self.sieved = sieved

    @property
    def constant_solutions(self) -> List[Solution]:
        return [s for s in self.solutions if s.constant]

    @property
    def nonconstant_solutions(self) -> List[Solution]:
        return [s for s in self.solutions if not s.constant]

    @property
    def exit_code(self) -> int:
        return 4 if self.nonconstant_solutions else 0

    def to_dict(self) -> Dict[str, Any]:
        return {
            "params": {
                "curve": self.curve,
                "m": self.m,
                "n": self.n,
                "bound": self.bound,
                "rhs": self.rhs,
                "strategy": self.strategy,
            },
            "candidates_examined": self.candidates_examined,
            "sieved": self.sieved,
            "solutions": [s.to_dict() for s in self.solutions],
            "elapsed_s": None if self.elapsed is None else round(self.elapsed, 6),
        }

    def to_dataframe(self) -> pd.DataFrame:
        """One row per solution."""
        return pd.DataFrame([s.to_dict() for s in self.solutions],
                            columns=["X", "Y", "d_X", "d_Y", "constant"])

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "SearchReport":
        params = data["params"]
        return cls(params["curve"], params["m"], params["n"], params["bound"],
                   params["rhs"], data["candidates_examined"],
                   [Solution.from_dict(s) for s in data["solutions"]],
                   data.get("elapsed_s"), params.get("strategy", "roots"),
                   data.get("sieved", 0))


class LemmaReport(_Report):
    """Outcome of a sampled check of the pole-order identities."""

    def __init__(self, curve: str, sampler: str, pairs_checked: int,
                 failures: Optional[List[str]] = None):
        self.curve = curve
        self.sampler = sampler
        self.pairs_checked = pairs_checked
        self.failures = failures or []

    @property
    def passed(self) -> bool:
        return not self.failures

    def to_dict(self) -> Dict[str, Any]:
        return {
            "curve": self.curve,
            "sampler": self.sampler,
            "pairs_checked": self.pairs_checked,
            "failures": list(self.failures),
            "passed": self.passed,
        }

    def to_dataframe(self) -> pd.DataFrame:
        return pd.DataFrame([{k: v for k, v in self.to_dict().items() if k != "failures"}])
