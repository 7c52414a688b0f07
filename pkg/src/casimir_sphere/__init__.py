"""Casimir force between a Drude-model sphere and a reflecting wall."""
__version__ = "0.1.0"
