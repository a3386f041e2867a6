# cohom1 documentation build configuration file.
import os
import sys

sys.path.insert(0, os.path.abspath(os.path.join('..', '..')))

extensions = [
    'sphinx.ext.autodoc',
    'sphinx.ext.doctest',
    'sphinx.ext.mathjax',
    'sphinx.ext.napoleon',
]

templates_path = []
source_suffix = '.rst'
master_doc = 'index'

project = 'cohom1'
copyright = '2026, the cohom1 developers'
author = 'the cohom1 developers'

try:
    from cohom1._version import version as release
except ImportError:
    release = 'unknown'
version = release

exclude_patterns = []
pygments_style = 'sphinx'

if os.environ.get('READTHEDOCS', None) == 'True':
    html_theme = 'default'
else:
    import sphinx_rtd_theme
    html_theme_path = [sphinx_rtd_theme.get_html_theme_path()]
    html_theme = 'sphinx_rtd_theme'

htmlhelp_basename = 'cohom1doc'

latex_documents = [
    (master_doc, 'cohom1.tex', 'cohom1 Documentation', author, 'manual'),
]
man_pages = [
    (master_doc, 'cohom1', 'cohom1 Documentation', [author], 1),
]
