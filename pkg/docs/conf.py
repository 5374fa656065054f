# -- Path setup --------------------------------------------------------------
# Add the src directory to the Python path so Sphinx can find the package
import os
import sys
sys.path.insert(0, os.path.abspath('../src'))

# -- Project information -----------------------------------------------------
project = 'KFacetLab'
copyright = '2026, KFacetLab developers'
author = 'KFacetLab developers'
release = '1.0.0'

# -- General configuration ---------------------------------------------------
extensions = [
    'sphinx.ext.autodoc',         # API pages from docstrings
    'sphinx.ext.napoleon',        # Google/Numpy style docstrings
    'sphinx.ext.viewcode',        # Links to highlighted source code
    'sphinx.ext.autosummary',     # Summary tables for modules/classes
    # 'sphinx.ext.mathjax',       # Render math formulas using MathJax
]
templates_path = ['_templates']
exclude_patterns = ['_build', 'Thumbs.db', '.DS_Store']
autosummary_generate = True
autodoc_member_order = 'bysource'

# -- Options for HTML output -------------------------------------------------
html_theme = 'alabaster'
html_static_path = []
