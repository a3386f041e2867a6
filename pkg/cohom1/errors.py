#!/usr/bin/env python
# -*- coding: utf-8 -*-


class Cohom1Error(Exception):
    pass


class DimensionMismatch(Cohom1Error):
    def __init__(self, expected, got, *a, **kw):
        super(DimensionMismatch, self).__init__(*a, **kw)
        self.expected = expected
        self.got = got
        self.args = self.args or (
            "Ambient dimension mismatch: expected {0}, got {1}".format(
                expected, got),
        )


class InvalidElement(Cohom1Error):
    pass


class SingularElement(Cohom1Error):
    pass


class InvalidSubalgebra(Cohom1Error):
    def __init__(self, reason, residual=float("nan")):
        self.reason = reason
        self.residual = residual
        super(InvalidSubalgebra, self).__init__(
            "{0} (residual {1:.3e})".format(reason, residual))


class NoInvariantNullLine(Cohom1Error):
    pass


class NotNormalForm(Cohom1Error):
    pass


class UnsupportedAction(Cohom1Error):
    pass


class SubalgebraFileError(Cohom1Error):
    """ A subalgebra file could not be parsed.

    The error carries enough context to point at the offending entry::

        bad.yaml, line 4, field 'basis[1].vector': expected 3 reals, got 2
    """
    def __init__(self, message, path=None, line=None, field=None):
        self.message = message
        self.path = path
        self.line = line
        self.field = field
        super(SubalgebraFileError, self).__init__(self.pretty)

    @property
    def pretty(self):
        parts = []
        if self.path is not None:
            parts.append(str(self.path))
        if self.line is not None:
            parts.append("line {0}".format(self.line))
        if self.field is not None:
            parts.append("field {0!r}".format(self.field))
        prefix = u", ".join(parts)
        if prefix:
            return u"{0}: {1}".format(prefix, self.message)
        return self.message
