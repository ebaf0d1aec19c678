"""Exact number tower: completions, anthyphairesis, parity, exhaustion, constructive reals."""

__version__ = "0.1.0"
