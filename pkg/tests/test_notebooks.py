import runpy
from pathlib import Path

import pytest

SCRIPTS = sorted((Path(__file__).parent.parent / 'notebooks').glob('*.py'))


@pytest.mark.parametrize('script', SCRIPTS, ids=lambda p: p.stem)
def test_script_runs(script, capsys):
    runpy.run_path(str(script), run_name='__main__')
    assert capsys.readouterr().out
