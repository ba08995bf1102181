"""Kernel backend selection.

The compiled backend is preferred when the extension was built; set
``REXCONF_PURE_PYTHON=1`` in the environment (or call ``set_backend``)
to force the pure-Python implementation.  Both backends implement the
same four functions and are exercised by the same test suite.
"""

from __future__ import annotations

import os

from . import py_backend

_impl = py_backend
if not os.environ.get("REXCONF_PURE_PYTHON"):
    try:
        from . import c_backend as _c_backend

        _impl = _c_backend
    except ImportError:
        pass


def backend_name() -> str:
    return _impl.NAME


def available_backends() -> list[str]:
    names = [py_backend.NAME]
    try:
        from . import c_backend

        names.append(c_backend.NAME)
    except ImportError:
        pass
    return names


def set_backend(name: str) -> None:
    global _impl
    if name == py_backend.NAME:
        _impl = py_backend
        return
    if name == "c":
        from . import c_backend

        _impl = c_backend
        return
    raise ValueError(f"unknown kernel backend {name!r}")


def bfs_order(n_states, n_letters, delta, source):
    return _impl.bfs_order(n_states, n_letters, delta, source)


def run_word(n_letters, delta, state, letters):
    return _impl.run_word(n_letters, delta, state, letters)


def minimize_blocks(n_states, n_letters, delta, classes):
    return _impl.minimize_blocks(n_states, n_letters, delta, classes)


def find_distinguisher(n_letters, delta_a, classes_a, src_a, delta_b, classes_b, src_b):
    return _impl.find_distinguisher(
        n_letters, delta_a, classes_a, src_a, delta_b, classes_b, src_b
    )
