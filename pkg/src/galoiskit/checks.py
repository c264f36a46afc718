"""Runtime soundness checks with an optional collector.

Engine operations call :func:`record_check` for every identity they assert
(group order equals field degree, rationality of orbit polynomials, ...).
A failing check always raises :class:`SoundnessError`; when a collector is
active (the CLI installs one per command) the outcomes are also logged so
reports can list every assertion that ran.
"""

import contextlib
import contextvars

from .errors import SoundnessError

_collector = contextvars.ContextVar("galoiskit_checks", default=None)


@contextlib.contextmanager
def collect_checks():
    """Collect (name, passed, detail) triples for all checks in scope."""
    log = []
    token = _collector.set(log)
    try:
        yield log
    finally:
        _collector.reset(token)


def record_check(name, ok, detail=""):
    log = _collector.get()
    if log is not None:
        log.append((name, bool(ok), detail))
    if not ok:
        raise SoundnessError(name, detail)
    return True
