#!/usr/bin/env python
# -*- coding: utf-8 -*-
#
# Sphinx configuration for the snailcalc documentation.

import os
import sys

# Import the package from the source tree rather than an installed copy.
sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

import snailcalc  # noqa: E402

autoclass_content = 'both'
autodoc_member_order = 'bysource'

extensions = ['sphinx.ext.autodoc', 'sphinx.ext.viewcode', 'sphinx.ext.doctest']

templates_path = ['_templates']
source_suffix = '.rst'
master_doc = 'index'

project = u'Snailcalc'
copyright = u"2018, Carson Lam"

version = snailcalc.__version__
release = snailcalc.__version__

exclude_patterns = ['_build']
pygments_style = 'sphinx'

html_theme = 'alabaster'
html_theme_options = {
    'github_user': 'carsonyl',
    'github_repo': 'snailcalc',
}
html_static_path = ['_static']
html_sidebars = {
    '**': [
        'about.html',
        'navigation.html',
        'relations.html',
        'searchbox.html',
    ]
}
htmlhelp_basename = 'snailcalcdoc'

latex_documents = [
    ('index', 'snailcalc.tex', u'Snailcalc Documentation', u'Carson Lam', 'manual'),
]
man_pages = [
    ('index', 'snailcalc', u'Snailcalc Documentation', [u'Carson Lam'], 1),
]
texinfo_documents = [
    ('index', 'snailcalc', u'Snailcalc Documentation', u'Carson Lam', 'snailcalc',
     'Turbulent homeomorphisms and topological snails, in Python.', 'Miscellaneous'),
]
