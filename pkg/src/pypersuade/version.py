"""Version information for :mod:`pypersuade`.

Run with ``python -m pypersuade.version`` to print the version together with
the commit of the working tree, which is what result documents should cite.
"""

import subprocess
from functools import lru_cache
from pathlib import Path

__all__ = [
    "VERSION",
    "get_git_hash",
    "get_version",
]

VERSION = "0.0.1-dev"

UNHASHED = "UNHASHED"


@lru_cache(maxsize=1)
def get_git_hash() -> str:
    """Short hash of the checkout containing this module, or ``UNHASHED`` outside one."""
    try:
        completed = subprocess.run(
            ["git", "rev-parse", "--short=8", "HEAD"],
            cwd=Path(__file__).parent,
            capture_output=True,
            text=True,
            check=True,
        )
    except (subprocess.CalledProcessError, FileNotFoundError):
        return UNHASHED
    return completed.stdout.strip() or UNHASHED


def get_version(with_git_hash: bool = False) -> str:
    """Release number, with ``-<hash>`` appended on request."""
    if not with_git_hash:
        return VERSION
    return f"{VERSION}-{get_git_hash()}"


if __name__ == "__main__":
    print(get_version(with_git_hash=True))
