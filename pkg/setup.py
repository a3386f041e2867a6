import os.path
import subprocess

from setuptools import setup


MAJOR = 0
MINOR = 1
MICRO = 0

IS_RELEASED = False


INSTALL_REQUIRES = [
    "attrs >= 19.2.0",
    "numpy >= 1.17",
    "scipy >= 1.3",
    "PyYAML",
]

PACKAGES = [
    "cohom1",
    "cohom1.actions",
    "cohom1.actions.tests",
    "cohom1.classification",
    "cohom1.classification.tests",
    "cohom1.geometry",
    "cohom1.geometry.tests",
    "cohom1.io",
    "cohom1.io.tests",
    "cohom1.lie",
    "cohom1.lie.tests",
    "cohom1.tests",
    "cohom1.utils",
    "cohom1.utils.tests",
    "cohom1.verify",
    "cohom1.verify.tests",
]

PACKAGE_DATA = {
    "cohom1.tests": ["*.yaml"],
}

ENTRY_POINTS = {
    "console_scripts": ["cohom1 = cohom1.cli:main"],
}

VERSION_TEMPLATE = """\
# THIS FILE IS GENERATED FROM SETUP.PY
version = '{version}'
git_revision = '{git_revision}'
is_released = {is_released}

version_info = {version_info}
"""


def _git_output(cmd):
    env = dict((k, os.environ[k]) for k in ("SYSTEMROOT", "PATH")
               if k in os.environ)
    env.update(LANGUAGE="C", LANG="C", LC_ALL="C")
    return subprocess.check_output(cmd, env=env).strip().decode("ascii")


def write_version_py(filename):
    version = "{0}.{1}.{2}".format(MAJOR, MINOR, MICRO)
    if not os.path.exists(".git"):
        if os.path.exists(filename):
            return _read_version(filename)
        git_revision, build_number = "Unknown", 0
    else:
        git_revision = _git_output(["git", "rev-parse", "HEAD"])
        build_number = int(_git_output(["git", "rev-list", "--count", "HEAD"]))

    if IS_RELEASED:
        version_info = (MAJOR, MINOR, MICRO, "final", 0)
    else:
        version += ".dev{0}".format(build_number)
        version_info = (MAJOR, MINOR, MICRO, "dev", build_number)

    with open(filename, "wt") as fp:
        fp.write(VERSION_TEMPLATE.format(
            version=version, git_revision=git_revision,
            is_released=IS_RELEASED, version_info=version_info))
    return version


def _read_version(filename):
    namespace = {}
    with open(filename) as fp:
        exec(fp.read(), namespace)
    return namespace["version"]


if __name__ == "__main__":
    version = write_version_py(os.path.join("cohom1", "_version.py"))

    setup(
        name='cohom1',
        version=version,
        description='Cohomogeneity one actions on Minkowski spaces',
        packages=PACKAGES,
        package_data=PACKAGE_DATA,
        install_requires=INSTALL_REQUIRES,
        entry_points=ENTRY_POINTS,
        python_requires=">=3.6",
    )
