"""Kernel selection: compiled Cython extension when available, pure-Python
fallback otherwise.  Set PARITYSIGN_PURE=1 to force the fallback."""

import os

if os.environ.get("PARITYSIGN_PURE") == "1":
    from . import _fallback as _impl

    BACKEND = "python"
else:
    try:
        from . import _cutkernel as _impl  # type: ignore[attr-defined]

        BACKEND = "cython"
    except ImportError:
        from . import _fallback as _impl

        BACKEND = "python"

min_balanced_cut = _impl.min_balanced_cut
cut_spectrum = _impl.cut_spectrum
swap_descent = _impl.swap_descent
pack_bits = _impl.pack_bits
canonical_bits = _impl.canonical_bits
canonical_bits_many = _impl.canonical_bits_many
