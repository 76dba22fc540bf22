import os
import shutil

import pytest


@pytest.fixture(scope="session")
def cli():
    path = os.environ.get("THETALIFT_CLI") or shutil.which("thetalift")
    if not path:
        import thetalift

        path = thetalift.cli_path()
    if not os.path.exists(path):
        pytest.skip("thetalift command-line tool not found")
    return path
