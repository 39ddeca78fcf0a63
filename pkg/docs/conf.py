# -*- coding: utf-8 -*-
#
# countable-sets documentation build configuration file.
#
# This file is execfile()d with the current directory set to its
# containing dir.

import sys
import os

# The package lives under src/; document it straight from the source tree.
sys.path.insert(0, os.path.abspath('../src'))

# -- General configuration ------------------------------------------------

######################################################################
# General information about the project.
project = u'countable-sets'
copyright = u'2026, The countable-sets Authors'
######################################################################

# The short X.Y version.
version = '1.0.0'
# The full version, including alpha/beta/rc tags.
release = version

extensions = [
    'sphinx.ext.autodoc',
    'sphinx.ext.coverage',
    'sphinx.ext.napoleon',
    'sphinx.ext.viewcode'
]

templates_path = ['_templates']

source_suffix = '.rst'

master_doc = 'index'

exclude_patterns = ['_build']

pygments_style = 'sphinx'

autodoc_member_order = 'bysource'

# -- Options for HTML output ----------------------------------------------

html_theme = 'sphinx_rtd_theme'

htmlhelp_basename = 'countable-setsdoc'

# -- Options for manual page output ---------------------------------------

man_pages = [
    ('index', 'countable-sets', u'countable-sets Documentation',
     [u'The countable-sets Authors'], 1)
]
