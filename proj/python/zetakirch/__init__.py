"""Exact zeta determinants, weighted Kirchhoff indices and covering checks."""

try:
    from ._zetakirch import *  # noqa: F401,F403  (installed layout)
except ImportError:  # pragma: no cover - in-tree layout with the extension on sys.path
    from _zetakirch import *  # noqa: F401,F403

__version__ = "0.1.0"
