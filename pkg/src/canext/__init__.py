"""Canonical extensions of finite boolean algebras and of Q^n, checked exactly.

Everything runs on exact rationals.  The main entry points:

* :func:`canext.boolean.canonical_extension_ba` and :func:`canext.boolean.ro_iso`
* :func:`canext.bal.context`, :func:`canext.bal.alpha` and the suites in :mod:`canext.bal`
* :class:`canext.normal.NormalFn` and the maps in :mod:`canext.normal`
* :func:`canext.suite.run_suite` and the ``canext`` command
"""

from .order import FinBoolAlg, FinPoset, ValidationError

__version__ = "0.1.0"

__all__ = ["FinBoolAlg", "FinPoset", "ValidationError", "__version__"]
