# -*- coding: utf-8 -*-
#
# Configuration file for the Sphinx documentation builder.

import os
import sys
sys.path.insert(0, os.path.abspath('..'))

# -- Project information -----------------------------------------------------

project = 'multiomit'
copyright = '2024, multiomit developers'
author = 'multiomit developers'

# The short X.Y version
version = '0.1.0'
# The full version, including alpha/beta/rc tags
release = '0.1.0'

# -- General configuration ---------------------------------------------------

extensions = [
    'sphinx.ext.autodoc',
    'sphinx.ext.autosummary',
    'sphinx.ext.doctest',
    'sphinx.ext.mathjax',
    'sphinx.ext.viewcode',
    'sphinx.ext.napoleon',
    'm2r',
    'sphinx_automodapi.automodapi',
    'sphinx.ext.autosectionlabel',
]

templates_path = ['_templates']
source_suffix = ['.rst', '.md']
master_doc = 'index'
language = None
exclude_patterns = ['_build', 'Thumbs.db', '.DS_Store']
pygments_style = 'sphinx'

# -- Options for HTML output -------------------------------------------------

html_theme = 'default'
html_static_path = ['_static']
htmlhelp_basename = 'multiomitdoc'
add_module_names = False
add_package_names = False

# -- Options for manual page output ------------------------------------------

man_pages = [
    (master_doc, 'multiomit', 'multiomit Documentation',
     [author], 1)
]

numpydoc_show_class_members = False
