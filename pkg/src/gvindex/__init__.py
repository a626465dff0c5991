"""Exact equivariant genera of instanton moduli spaces and symmetric products,
with Gopakumar-Vafa invariant extraction."""

__version__ = "0.1.0"
