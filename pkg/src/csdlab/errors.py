"""Shared exception types."""

from __future__ import annotations


class GuardrailExceeded(RuntimeError):
    """Raised when a construction or enumeration would exceed its size cap.

    Guardrails keep combinatorial blow-ups from exhausting memory or time;
    every cap is overridable at the call site (and via CLI flags).
    """
