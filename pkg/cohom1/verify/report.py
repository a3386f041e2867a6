from __future__ import absolute_import

import enum

import attr
import numpy as np


@enum.unique
class Status(enum.Enum):
    passed = "Pass"
    failed = "Fail"


def _as_point(value):
    return tuple(float(x) for x in np.ravel(value))


@attr.s(frozen=True)
class Witness(object):
    """ The sample a check found most telling: its point, the parameters
    used there and the orbit labels involved.
    """
    point = attr.ib(converter=_as_point)
    parameters = attr.ib(default=(), converter=tuple)
    labels = attr.ib(default=(), converter=tuple)


@attr.s(frozen=True)
class VerificationReport(object):
    """ The outcome of one verification check.

    Residual checks pass iff ``max_residual <= tolerance``. Witness checks
    (non-equivalence) additionally need ``statistic > threshold``.
    """
    name = attr.ib()
    status = attr.ib(validator=attr.validators.instance_of(Status))
    max_residual = attr.ib(converter=float)
    tolerance = attr.ib(converter=float)
    trials = attr.ib()
    seed = attr.ib()
    witness = attr.ib(default=None)
    statistic = attr.ib(default=None)
    threshold = attr.ib(default=None)

    @classmethod
    def from_residual(cls, name, max_residual, tolerance, trials, seed,
                      witness=None):
        passed = bool(max_residual <= tolerance)
        return cls(name, Status.passed if passed else Status.failed,
                   max_residual, tolerance, trials, seed, witness)

    @classmethod
    def from_witness(cls, name, statistic, threshold, max_residual,
                     tolerance, trials, seed, witness=None):
        passed = bool(statistic > threshold and max_residual <= tolerance)
        return cls(name, Status.passed if passed else Status.failed,
                   max_residual, tolerance, trials, seed, witness,
                   float(statistic), float(threshold))

    @property
    def passed(self):
        return self.status is Status.passed

    def __str__(self):
        text = "{0:<4} {1}: max_residual={2:.3e} (tol {3:.0e})".format(
            self.status.value.upper(), self.name, self.max_residual,
            self.tolerance)
        if self.statistic is not None:
            text += ", statistic={0:.6g} (threshold {1:g})".format(
                self.statistic, self.threshold)
        return text + ", trials={0}, seed={1}".format(self.trials, self.seed)
