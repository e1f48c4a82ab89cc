# -*- coding: utf-8 -*-

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

"""Version information for rsdp."""

import os
import subprocess

ROOT_DIR = os.path.dirname(os.path.abspath(__file__))

with open(os.path.join(ROOT_DIR, "VERSION.txt"), "r", encoding="utf-8") as version_file:
    VERSION = version_file.read().strip()


def _git_short_sha() -> str:
    """Short sha of the checkout HEAD, or an empty string outside a git checkout."""
    if not os.path.exists(os.path.join(os.path.dirname(ROOT_DIR), ".git")):
        return ""
    try:
        out = subprocess.run(
            ["git", "rev-parse", "--short=7", "HEAD"],
            cwd=os.path.dirname(ROOT_DIR),
            capture_output=True,
            check=True,
            env={"PATH": os.environ.get("PATH", ""), "LC_ALL": "C"},
        )
    except (OSError, subprocess.CalledProcessError):
        return ""
    return out.stdout.decode("ascii").strip()


def get_version_info() -> str:
    """Release version, with a ``.dev0+<sha>`` suffix for development checkouts."""
    sha = _git_short_sha()
    if not sha:
        return VERSION
    return f"{VERSION}.dev0+{sha}"


__version__ = get_version_info()
