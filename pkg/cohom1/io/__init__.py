# flake8: noqa
from __future__ import absolute_import

from .point_cloud import (
    PointCloud, format_csv, format_ply, parse_csv, write_point_cloud,
)
from .subalgebra_file import SubalgebraFile, subalgebra_to_yaml
