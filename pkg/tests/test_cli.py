import json

import numpy as np
import pytest

from biortho.cli import main
from biortho.families import PairFamily, generate
from biortho.io import save_pair
from biortho.pair import TruncatedPair
from biortho.report import analyze, sweep


def run(capsys, *argv):
    code = main(list(argv))
    return code, capsys.readouterr().out


def test_analyze_identity_passes():
    rep = analyze(generate('identity', 8))
    assert rep.exit_code == 0
    assert rep.data['stages']['canonical']['kappa'] == pytest.approx(1.0)
    assert rep.data['summary']['failed'] == []


def test_analyze_non_regular_stops_after_regularity():
    rep = analyze(generate('shifted-non-regular', 8))
    assert rep.exit_code == 3
    assert rep.data['stages']['regularity']['status'] == 'Indeterminate'
    assert set(rep.data['skipped']) == {'canonical', 'frames', 'ladder'}
    assert rep.data['stages']['regularity']['witness_psi'][0] == [1.0, 0.0]


def test_analyze_diag_power_bounds():
    rep = analyze(generate(PairFamily('diag-power', {'alpha': 1.0}), 16))
    assert rep.exit_code == 0
    frames = rep.data['stages']['frames']
    # analytic: r_phi = d^2, r_psi = 1
    assert frames['r_phi'] == pytest.approx(256, rel=1e-12)
    assert frames['r_psi'] == pytest.approx(1, rel=1e-12)


def test_analyze_not_biorthogonal():
    rep = analyze(TruncatedPair(np.diag([1.0, 2.0]), np.eye(2)))
    assert rep.exit_code == 2
    assert rep.data['summary']['failed'] == ['biorthogonality']


def test_analyze_conditioning_exceeded():
    rep = analyze(TruncatedPair(np.diag([1.0, 1e9]), np.diag([1.0, 1e-9])))
    assert rep.exit_code == 5
    assert 'ladder' in rep.data['errors']


def test_every_check_has_tolerance():
    def walk(node):
        if isinstance(node, dict):
            if 'pass' in node:
                assert set(node) == {'value', 'tol', 'pass'}
            for v in node.values():
                walk(v)
    rep = analyze(generate('random-regular', 6))
    walk(rep.data)
    assert 'k+1' in rep.data['note']


def test_tol_scale_can_fail_checks():
    rep = analyze(generate(PairFamily('random-regular', {'kappa': 100.0}), 8),
                  tol_scale=1e-12)
    assert rep.exit_code == 2


def test_cli_generate_analyze(tmp_path, capsys):
    out = tmp_path / 'p.json'
    assert main(['generate', '--family', 'diag-power', '--param', 'alpha=1',
                 '--dim', '16', '--out', str(out)]) == 0
    code, text = run(capsys, 'analyze', '--pair', str(out))
    assert code == 0
    assert json.loads(text)['stages']['frames']['r_phi'] == pytest.approx(256)


def test_cli_analyze_writes_out_file(tmp_path, capsys):
    pair = save_pair(generate('identity', 3), tmp_path / 'p.json')
    code, text = run(capsys, 'analyze', '--pair', str(pair), '--out',
                     str(tmp_path / 'r.json'))
    assert code == 0 and text == ''
    assert json.loads((tmp_path / 'r.json').read_text())['summary']['status'] == 'pass'


def test_cli_exit_codes(tmp_path, capsys):
    bad = tmp_path / 'bad.json'
    bad.write_text('not json')
    assert main(['analyze', '--pair', str(bad)]) == 4
    nonreg = save_pair(generate('shifted-non-regular', 5), tmp_path / 'n.json')
    assert main(['analyze', '--pair', str(nonreg)]) == 3
    assert main(['sweep', '--family', 'shifted-non-regular', '--dims', '4,8,16']) == 3
    assert main(['sweep', '--family', 'identity', '--dims', '4,8']) == 4
    assert main(['generate', '--family', 'diag-power', '--param', 'gamma=1',
                 '--dim', '3', '--out', str(tmp_path / 'x.json')]) == 4


def test_cli_sweep(capsys):
    code, text = run(capsys, 'sweep', '--family', 'diag-power', '--param',
                     'alpha=1', '--dims', '8,16,32,64')
    assert code == 0
    data = json.loads(text)
    assert data['classification']['verdict'] == 'SemiRieszPsiBessel'
    assert [r['dim'] for r in data['per_dim']] == [8, 16, 32, 64]
    assert all(r['status'] == 'pass' for r in data['per_dim'])


def test_sweep_concurrent_matches_serial():
    fam = PairFamily('bounded-perturbation', {'eps': 0.3})
    assert sweep(fam, [8, 16, 32], workers=3) == sweep(fam, [8, 16, 32])


def test_cli_deterministic(tmp_path, capsys):
    out = tmp_path / 'p.json'
    main(['generate', '--family', 'random-regular', '--param', 'kappa=50',
          '--dim', '12', '--out', str(out)])
    _, first = run(capsys, 'analyze', '--pair', str(out), '--seed', '7')
    _, second = run(capsys, 'analyze', '--pair', str(out), '--seed', '7')
    assert first == second
