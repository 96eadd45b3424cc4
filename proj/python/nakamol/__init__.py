"""Exact quiver-variety invariants and equivariant Hilbert series."""

try:
    from ._nakamol import *  # noqa: F401,F403
    from ._nakamol import __version__  # noqa: F401
except ImportError:  # development layout: extension on sys.path, not in-package
    from _nakamol import *  # noqa: F401,F403
    from _nakamol import __version__  # noqa: F401
