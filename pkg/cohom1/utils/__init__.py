# flake8: noqa
from __future__ import absolute_import

import contextlib
import shutil
import tempfile

from .timed_context import timed_context


@contextlib.contextmanager
def mkdtemp():
    d = tempfile.mkdtemp()
    try:
        yield d
    finally:
        shutil.rmtree(d)
