"""Hot-loop kernels behind the piece analysis.

At import time we pick the compiled extension when it is available and
fall back to the pure Python twin otherwise.  Set BRIDGEFORGE_PURE=1 to
force the fallback (useful for parity testing and benchmarking).
"""

import os

if os.environ.get("BRIDGEFORGE_PURE"):
    from . import _pure as _impl
else:
    try:
        from . import _speed as _impl  # type: ignore[no-redef]
    except ImportError:
        from . import _pure as _impl

IMPL = _impl.IMPL
max_piece_table = _impl.max_piece_table
min_pieces_span = _impl.min_pieces_span
reach_table = _impl.reach_table
