"""Exact U_q(gl(m|n)) invariants of virtual and semi-welded tangles."""

__version__ = "0.1.0"
