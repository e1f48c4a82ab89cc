# This code is part of rsdp.
#
# (C) Copyright The rsdp Developers 2026.
#
# This code is licensed under the Apache License, Version 2.0. You may
# obtain a copy of this license in the LICENSE.txt file in the root directory
# of this source tree or at http://www.apache.org/licenses/LICENSE-2.0.
#
# Any modifications or derivative works of this code must retain this
# copyright notice, and modified files need to carry a notice indicating
# that they have been altered from the originals.

# pylint: disable=invalid-name

# General options:

project = 'rsdp'
copyright = '2026, The rsdp Developers'  # pylint: disable=redefined-builtin
author = 'The rsdp Developers'

# The short X.Y version
version = ''
# The full version, including alpha/beta/rc tags
release = '0.1.0'

extensions = [
    'sphinx.ext.napoleon',
    'sphinx.ext.autodoc',
    'sphinx.ext.autosummary',
    'sphinx.ext.mathjax',
    'sphinx.ext.viewcode',
    'sphinx_autodoc_typehints',
    'reno.sphinxext',
    'sphinx.ext.intersphinx',
    "qiskit_sphinx_theme",
]

language = 'en'
pygments_style = 'colorful'
add_module_names = False
modindex_common_prefix = ['rsdp.']

html_theme = 'qiskit-ecosystem'
html_last_updated_fmt = '%Y/%m/%d'

# autodoc/autosummary options
autosummary_generate = True
autosummary_generate_overwrite = False
autoclass_content = "both"
intersphinx_mapping = {
    "numpy": ("https://numpy.org/doc/stable/", None),
    "scipy": ("https://docs.scipy.org/doc/scipy/", None),
}

exclude_patterns = ['_build']
