"""Python surface of the half-space Dunkl analysis toolkit."""

try:
    from ._dunklkit import *  # noqa: F401,F403
    from ._dunklkit import __doc__ as _core_doc
except ImportError:  # compiled module on sys.path directly (build-tree layout)
    from _dunklkit import *  # noqa: F401,F403
    from _dunklkit import __doc__ as _core_doc

__doc__ = _core_doc
__version__ = "0.1.0"
