"""
Reading and writing subalgebra files.

A subalgebra file is a small YAML document::

    ambient_dim: 3
    basis:
      - matrix: [[0, 0, 0], [0, 0, -1], [0, -1, 0]]
        vector: [2, 0, 0]
      - vector: [0, 1, -1]

Either key of a basis entry may be omitted and then defaults to zero; an
entry must have at least one of them. Errors point at the offending line and
field.
"""
from __future__ import absolute_import

import io

import attr
import numpy as np
import yaml

from cohom1.errors import Cohom1Error, SubalgebraFileError
from cohom1.lie import LieElement, Subalgebra


_SCALAR_TAG = u"tag:yaml.org,2002:"


@attr.s(frozen=True, eq=False)
class SubalgebraFile(object):
    """ The parsed content of a subalgebra file. """
    ambient_dim = attr.ib(validator=attr.validators.instance_of(int))
    basis = attr.ib(converter=tuple)
    path = attr.ib(default=None)
    # the whole mapping, so that callers may read extra keys
    extra = attr.ib(default=attr.Factory(dict))

    def to_subalgebra(self):
        try:
            return Subalgebra(self.basis, self.ambient_dim)
        except Cohom1Error as e:
            raise SubalgebraFileError(str(e), self.path, field="basis")

    @classmethod
    def from_yaml(cls, file_or_filename):
        if isinstance(file_or_filename, str):
            with io.open(file_or_filename, encoding="utf8") as fp:
                return _parse(fp, file_or_filename)
        path = getattr(file_or_filename, "name", None)
        return _parse(file_or_filename, path)

    @classmethod
    def from_string(cls, text, path=None):
        return _parse(io.StringIO(text), path)


class _Context(object):
    def __init__(self, path):
        self.path = path

    def error(self, message, node=None, field=None):
        line = None if node is None else node.start_mark.line + 1
        return SubalgebraFileError(message, self.path, line, field)

    def mapping(self, node, field):
        if not isinstance(node, yaml.MappingNode):
            raise self.error("expected a mapping", node, field)
        result = {}
        for key, value in node.value:
            if not isinstance(key, yaml.ScalarNode):
                raise self.error("mapping keys must be strings", key, field)
            result[key.value] = value
        return result

    def sequence(self, node, field):
        if not isinstance(node, yaml.SequenceNode):
            raise self.error("expected a list", node, field)
        return node.value

    def real(self, node, field):
        if (not isinstance(node, yaml.ScalarNode)
                or node.tag in (_SCALAR_TAG + u"bool", _SCALAR_TAG + u"null")):
            raise self.error("expected a real number", node, field)
        try:
            value = float(node.value)
        except ValueError:
            raise self.error(
                "expected a real number, got {0!r}".format(node.value),
                node, field)
        if not np.isfinite(value):
            raise self.error("expected a finite number", node, field)
        return value

    def integer(self, node, field):
        if isinstance(node, yaml.ScalarNode):
            try:
                return int(node.value)
            except ValueError:
                pass
        raise self.error("expected an integer", node, field)

    def vector(self, node, field, size):
        items = self.sequence(node, field)
        if len(items) != size:
            raise self.error(
                "expected {0} reals, got {1}".format(size, len(items)),
                node, field)
        return [self.real(item, "{0}[{1}]".format(field, i))
                for i, item in enumerate(items)]

    def matrix(self, node, field, size):
        rows = self.sequence(node, field)
        if len(rows) != size:
            raise self.error(
                "expected {0} rows, got {1}".format(size, len(rows)),
                node, field)
        return [self.vector(row, "{0}[{1}]".format(field, i), size)
                for i, row in enumerate(rows)]


def _compose(fp, context):
    try:
        return yaml.compose(fp, Loader=yaml.SafeLoader)
    except yaml.MarkedYAMLError as e:
        mark = e.problem_mark
        line = None if mark is None else mark.line + 1
        raise SubalgebraFileError(
            "invalid YAML: {0}".format(e.problem), context.path, line)
    except yaml.YAMLError as e:
        raise SubalgebraFileError(
            "invalid YAML: {0}".format(e), context.path)


def _parse_element(context, node, field, d):
    entry = context.mapping(node, field)
    unknown = sorted(set(entry) - set(["matrix", "vector"]))
    if unknown:
        raise context.error(
            "unknown key {0!r}".format(unknown[0]), node, field)
    if not entry:
        raise context.error("expected 'matrix' and/or 'vector'", node, field)
    if "matrix" in entry:
        x = context.matrix(entry["matrix"], field + ".matrix", d)
    else:
        x = np.zeros((d, d))
    if "vector" in entry:
        u = context.vector(entry["vector"], field + ".vector", d)
    else:
        u = np.zeros(d)
    try:
        return LieElement(x, u)
    except Cohom1Error as e:
        raise context.error(str(e), node, field + ".matrix")


def _parse(fp, path):
    context = _Context(path)
    root = _compose(fp, context)
    if root is None:
        raise context.error("empty document")
    top = context.mapping(root, None)
    for key in ("ambient_dim", "basis"):
        if key not in top:
            raise context.error("missing key {0!r}".format(key), root)
    d = context.integer(top["ambient_dim"], "ambient_dim")
    if d < 2:
        raise context.error("ambient_dim must be at least 2",
                            top["ambient_dim"], "ambient_dim")
    items = context.sequence(top["basis"], "basis")
    if not items:
        raise context.error("basis must not be empty", top["basis"], "basis")
    basis = [_parse_element(context, item, "basis[{0}]".format(i), d)
             for i, item in enumerate(items)]

    extra = dict((key, yaml.safe_load(yaml.serialize(node)))
                 for key, node in top.items()
                 if key not in ("ambient_dim", "basis"))
    return SubalgebraFile(d, basis, path, extra)


def subalgebra_to_yaml(h):
    """ Serialize a subalgebra in the subalgebra file format. """
    data = {
        "ambient_dim": h.ambient_dim,
        "basis": [{"matrix": e.linear.tolist(), "vector": e.trans.tolist()}
                  for e in h.basis],
    }
    return yaml.safe_dump(data, default_flow_style=None, sort_keys=False)
