"""Kernel selection: compiled extensions when importable, pure twins otherwise.

Both backends implement the same algorithms with the same deterministic
choices, so results are identical either way; the compiled ones are just
faster.  Set LRPOS_PURE=1 to force the pure-Python kernels (useful for
benchmarking and debugging).
"""

import os

_force_pure = os.environ.get("LRPOS_PURE", "") not in ("", "0")

if _force_pure:
    from . import _simplex_py as simplex
    from . import _enum_py as enumeration
else:
    try:
        from . import _simplex_cy as simplex  # type: ignore[no-redef]
    except ImportError:
        from . import _simplex_py as simplex  # type: ignore[no-redef]
    try:
        from . import _enum_cy as enumeration  # type: ignore[no-redef]
    except ImportError:
        from . import _enum_py as enumeration  # type: ignore[no-redef]


def _label(module) -> str:
    return "compiled" if module.__name__.endswith("_cy") else "pure-python"


def backend_info() -> dict[str, str]:
    """Which implementation each kernel is running on."""
    return {"simplex": _label(simplex), "enumeration": _label(enumeration)}
