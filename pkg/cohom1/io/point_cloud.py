"""
Point-cloud export of sampled orbits.

CSV files carry a header ``x1,...,x{n+1},label`` and write coordinates with
``repr``, the shortest decimal that reads back to the same double. PLY files
hold vertices only.
"""
from __future__ import absolute_import

import csv
import io

import attr
import numpy as np

from cohom1.errors import Cohom1Error, DimensionMismatch


_PLY_NAMES = ("x", "y", "z")


@attr.s(frozen=True, eq=False)
class PointCloud(object):
    """ Sampled points with their stringified orbit labels. """
    points = attr.ib(converter=lambda p: np.asarray(p, dtype=float))
    labels = attr.ib(converter=tuple)
    ambient_dim = attr.ib()

    @ambient_dim.validator
    def _check_shape(self, attribute, value):
        if self.points.size == 0:
            return
        if self.points.ndim != 2 or self.points.shape[1] != value:
            raise DimensionMismatch(value, self.points.shape)
        if len(self.labels) != self.points.shape[0]:
            raise ValueError("Got {0} labels for {1} points".format(
                len(self.labels), self.points.shape[0]))

    def __len__(self):
        return len(self.labels)

    @property
    def header(self):
        return ["x{0}".format(i + 1) for i in range(self.ambient_dim)] + \
            ["label"]


def format_csv(cloud):
    stream = io.StringIO()
    writer = csv.writer(stream, lineterminator="\n")
    writer.writerow(cloud.header)
    for point, label in zip(cloud.points, cloud.labels):
        writer.writerow([repr(float(x)) for x in point] + [label])
    return stream.getvalue()


def parse_csv(text):
    """ Read back a cloud written by `format_csv`. """
    rows = list(csv.reader(io.StringIO(text)))
    if not rows:
        raise Cohom1Error("Empty point cloud file")
    header = rows[0]
    d = len(header) - 1
    if d < 1 or header[-1] != "label":
        raise Cohom1Error("Unexpected header {0!r}".format(header))
    points, labels = [], []
    for number, row in enumerate(rows[1:], 2):
        if len(row) != d + 1:
            raise Cohom1Error("Line {0}: expected {1} columns, got {2}"
                              .format(number, d + 1, len(row)))
        points.append([float(x) for x in row[:d]])
        labels.append(row[d])
    return PointCloud(np.array(points).reshape(-1, d), labels, d)


def format_ply(cloud, comment=None):
    """ ASCII PLY with one vertex per point.

    Points of M^2 are padded with z = 0; coordinates beyond the third are
    written as extra properties x4, x5, ...
    """
    d = cloud.ambient_dim
    width = max(3, d)
    names = list(_PLY_NAMES) + ["x{0}".format(i + 1) for i in range(3, d)]
    lines = ["ply", "format ascii 1.0"]
    if comment:
        lines.append("comment {0}".format(comment))
    lines.append("element vertex {0}".format(len(cloud)))
    lines.extend("property double {0}".format(name) for name in names)
    lines.append("end_header")
    for point in cloud.points:
        padded = np.zeros(width)
        padded[:d] = point
        lines.append(" ".join(repr(float(x)) for x in padded))
    return "\n".join(lines) + "\n"


def write_point_cloud(cloud, path, format="csv", comment=None):
    """ Write `cloud` to `path`; OSError propagates to the caller. """
    if format == "csv":
        content = format_csv(cloud)
    elif format == "ply":
        content = format_ply(cloud, comment)
    else:
        raise ValueError("Unknown point cloud format {0!r}".format(format))
    with io.open(path, "w", encoding="utf8", newline="") as fp:
        fp.write(content)
