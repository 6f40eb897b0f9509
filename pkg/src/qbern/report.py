"""Structured outcome of a single identity check."""

import json
from dataclasses import dataclass, field


def _jsonable(value):
    if isinstance(value, complex):
        return repr(value)
    if isinstance(value, float) or isinstance(value, (int, str, bool)) or value is None:
        return value
    return str(value)


@dataclass
class VerificationReport:
    """One verified identity instance: name, parameters, both sides, verdict.

    ``mode`` declares how the residual was formed: "abs" is |lhs - rhs|,
    "rel" is |lhs - rhs| / max(1, |rhs|).  ``passed`` is always equivalent
    to residual <= tolerance.
    """

    identity_name: str
    params: dict
    lhs: object
    rhs: object
    residual: float
    tolerance: float
    passed: bool
    mode: str = "abs"

    @classmethod
    def from_values(cls, name, params, lhs, rhs, tolerance, mode="abs"):
        residual = abs(lhs - rhs)
        if mode == "rel":
            residual = residual / max(1.0, abs(rhs))
        elif mode != "abs":
            raise ValueError(f"unknown residual mode: {mode}")
        residual = float(residual)
        return cls(
            identity_name=name,
            params=dict(params),
            lhs=lhs,
            rhs=rhs,
            residual=residual,
            tolerance=float(tolerance),
            passed=residual <= tolerance,
            mode=mode,
        )

    def with_tolerance(self, tolerance: float) -> "VerificationReport":
        return VerificationReport(
            identity_name=self.identity_name,
            params=self.params,
            lhs=self.lhs,
            rhs=self.rhs,
            residual=self.residual,
            tolerance=float(tolerance),
            passed=self.residual <= tolerance,
            mode=self.mode,
        )

    def to_json(self) -> str:
        payload = {
            "identity": self.identity_name,
            "params": {k: _jsonable(v) for k, v in self.params.items()},
            "lhs": _jsonable(self.lhs),
            "rhs": _jsonable(self.rhs),
            "residual": self.residual,
            "tolerance": self.tolerance,
            "mode": self.mode,
            "passed": self.passed,
        }
        return json.dumps(payload)
