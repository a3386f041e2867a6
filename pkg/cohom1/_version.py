# THIS FILE IS GENERATED FROM SETUP.PY
version = '0.1.0.dev0'
git_revision = 'Unknown'
is_released = False

version_info = (0, 1, 0, 'dev', 0)
