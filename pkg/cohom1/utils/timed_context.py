import logging
import math

from timeit import default_timer


logger = logging.getLogger(__name__)


class timed_context(object):
    """ Measures the wall time of a block and logs it at DEBUG level.

    >>> with timed_context("commuting identity") as timer:
    ...     pass
    >>> timer.elapsed >= 0
    True
    """

    def __init__(self, description, log=True):
        self.description = description
        self.log = log
        self.elapsed = float('NaN')

    def __enter__(self):
        self.start = default_timer()
        return self

    def __exit__(self, type, value, traceback):
        self.elapsed = default_timer() - self.start
        if self.log:
            logger.debug("%s", self)

    def __str__(self):
        if math.isnan(self.elapsed):
            return "Context {} has not been run".format(self.description)
        return self.pretty()

    def pretty(self, fmt="ELAPSED : {description} : {elapsed:.3f}s"):
        return fmt.format(description=self.description, elapsed=self.elapsed)
