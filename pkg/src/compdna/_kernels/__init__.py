"""Hot kernels with a compiled implementation and a pure-Python fallback.

The compiled module is used when it was built and importable, unless the
environment variable ``COMPDNA_PURE_PYTHON`` is set to a non-empty value.
``BACKEND`` names the implementation in use.
"""

import os

from . import _pykernels as python

compiled = None
if not os.environ.get("COMPDNA_PURE_PYTHON"):
    try:
        from . import _ckernels as compiled
    except ImportError:  # extension not built
        compiled = None

_impl = compiled if compiled is not None else python
BACKEND = "cython" if compiled is not None else "python"

max_clique = _impl.max_clique
deletion_ball = _impl.deletion_ball

__all__ = ["BACKEND", "compiled", "python", "max_clique", "deletion_ball"]
