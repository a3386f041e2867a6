from __future__ import absolute_import

import enum
import functools
import logging

import attr

from cohom1.lie import IsoElement, subalgebra_span_residual
from .alignment import conjugate


logger = logging.getLogger(__name__)

# Conjugation residuals above this are reported as warnings.
RESIDUAL_WARNING = 1e-6


@enum.unique
class Verdict(enum.Enum):
    classified = "Classified"
    not_cohomogeneity_one = "NotCohomogeneityOne"
    not_a_subalgebra = "NotASubalgebra"


@attr.s(frozen=True, repr=False)
class ClassificationResult(object):
    """ Outcome of classifying a subalgebra of iso(M^2) or iso(M^3).

    Parameters
    ----------
    verdict : Verdict
    spec : ActionSpec or None
        The canonical representative, set iff the input was classified.
    conjugators : tuple of IsoElement
        In the order they are applied: the input is mapped onto the
        canonical subalgebra by Ad(conjugators[-1] ... conjugators[0]).
    residual : float
        Distance between the conjugated input and the canonical subalgebra
        (for a rejected input, the closure residual or the measured
        cohomogeneity defect).
    lam : float or None
        λ of the input before any rescaling, for the screw families.
    reflected : bool
        True if one of the conjugators lies outside the identity component
        I°(M^{n+1}).
    """
    verdict = attr.ib(validator=attr.validators.instance_of(Verdict))
    spec = attr.ib(default=None)
    conjugators = attr.ib(default=(), converter=tuple)
    residual = attr.ib(default=0.0, converter=float)
    lam = attr.ib(default=None)
    reflected = attr.ib(default=False)
    ambient_dim = attr.ib(default=None)

    @classmethod
    def rejected(cls, verdict, residual=0.0, ambient_dim=None):
        return cls(verdict, residual=residual, ambient_dim=ambient_dim)

    @property
    def is_classified(self):
        return self.verdict is Verdict.classified

    @property
    def composite(self):
        """ The single isometry Ad-conjugating the input onto `spec`. """
        start = IsoElement.identity(self.ambient_dim)
        return functools.reduce(
            lambda acc, g: g @ acc, self.conjugators, start)

    def conjugate(self, h):
        """ Ad(composite)(h), orthonormalized. """
        return conjugate(h, self.composite)

    def __repr__(self):
        name = None if self.spec is None else self.spec.name
        return ("ClassificationResult(verdict={0}, spec={1}, lam={2!r}, "
                "residual={3:.3e}, reflected={4})".format(
                    self.verdict.value, name, self.lam, self.residual,
                    self.reflected))


def classified_result(chain, spec, lam=None, contains_only=False):
    """ Build the result for the subalgebra accumulated in `chain`.

    With `contains_only` the residual only measures how far the canonical
    generators are from the conjugated input, which may be larger.
    """
    conjugated = chain.current
    if contains_only:
        residual = conjugated.residual(spec.generators)
    else:
        residual = subalgebra_span_residual(conjugated, spec.generators)
    logger.info("Classified as %s (residual %.3e, %d conjugators)",
                spec.name, residual, len(chain.conjugators))
    if residual > RESIDUAL_WARNING:
        logger.warning("Large conjugation residual %.3e for %s",
                       residual, spec.name)
    return ClassificationResult(
        Verdict.classified, spec, chain.conjugators, residual, lam,
        chain.reflected, chain.original.ambient_dim)


def rejected_result(verdict, h, residual=0.0, reason=""):
    logger.info("%s: %s", verdict.value, reason)
    return ClassificationResult.rejected(verdict, residual, h.ambient_dim)
