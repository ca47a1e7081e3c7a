"""Kernel backend selection.

The compiled ``_ckernels`` extension is used when it was built; otherwise
(or when ``PPIMOD_PURE_PYTHON`` is set to a non-empty value) the
pure-Python twin in ``_pykernels`` is loaded.  Both expose identical
functions and return identical results and traces.
"""

import importlib
import os

from . import _pykernels


def _load_compiled():
    try:
        return importlib.import_module("ppimod._ckernels")
    except ImportError:
        return None


_compiled = _load_compiled()

if os.environ.get("PPIMOD_PURE_PYTHON") or _compiled is None:
    impl = _pykernels
else:
    impl = _compiled

BACKEND = impl.BACKEND


def available_backends():
    """Names of the kernel modules importable in this environment."""
    return ["python"] + (["cython"] if _compiled is not None else [])


def get_backend(name):
    if name == "python":
        return _pykernels
    if name == "cython":
        if _compiled is None:
            raise ImportError("compiled kernels were not built")
        return _compiled
    raise ValueError(f"unknown kernel backend {name!r}")
