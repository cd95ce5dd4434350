"""
Command-line reports
====================

The ``biortho`` command writes pair files, analyzes them and sweeps
families over dimensions.  Here we drive it in-process.
"""

import json
import os
import tempfile

from biortho.cli import main

tmp = tempfile.mkdtemp()
path = os.path.join(tmp, 'pair.json')

main(['generate', '--family', 'diag-power', '--param', 'alpha=1',
      '--dim', '16', '--out', path])

out = os.path.join(tmp, 'report.json')
code = main(['analyze', '--pair', path, '--out', out])
with open(out) as fh:
    report = json.load(fh)
print('exit code', code, report['summary']['status'])
print('r_phi', report['stages']['frames']['r_phi'])
print('kappa', report['stages']['canonical']['kappa'])

code = main(['sweep', '--family', 'diag-mixed', '--dims', '8,16,32',
             '--out', os.path.join(tmp, 'sweep.json')])
print('sweep exit code', code)
