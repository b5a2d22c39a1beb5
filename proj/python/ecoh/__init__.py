"""Entanglement coherence toolkit."""

try:
    from ecoh._ecoh import *  # noqa: F401,F403  (installed package layout)
except ImportError:
    from _ecoh import *  # noqa: F401,F403  (in-tree build: module on PYTHONPATH)
