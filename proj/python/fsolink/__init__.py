"""Inter-satellite optical link outage model.

Thin re-export of the native module ``_fsolink``. The extension lives next
to this package in an installed wheel and on ``sys.path`` when running from
a CMake build tree; both layouts are accepted.
"""

try:
    from . import _fsolink as _core
    from ._fsolink import *  # noqa: F401,F403
except ImportError:
    import _fsolink as _core
    from _fsolink import *  # noqa: F401,F403

__version__ = "0.1.0"
__all__ = [name for name in dir(_core) if not name.startswith("_")]
