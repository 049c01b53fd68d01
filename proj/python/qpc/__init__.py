"""Programmable gate-connection circuits and switch networks."""

from ._qpc import *  # noqa: F401,F403
