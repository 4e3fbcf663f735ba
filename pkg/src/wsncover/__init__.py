"""Round-based WSN simulator: coverage-aware clustering and multipath routing."""

__version__ = "0.1.0"
