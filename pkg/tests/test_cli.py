import pytest  # NOQA
import json
from pygrandconfluent.cli import EXIT_OK, EXIT_USAGE, SCHEMA_VERSION, main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


class TestEvalCommand:

    def setup_class(self):
        pass

    def teardown_class(self):
        pass

    def setup_method(self, method):
        pass

    def teardown_method(self, method):
        pass

    def test_qw_json(self, capsys):
        code, out, _ = run(capsys, 'eval', '--kind', 'qw', '--alpha0', '0', '--alpha1', '0', '--gamma', '1.5',
                           '--eps', '0.01', '--x', '1.0', '--format', 'json')
        assert code == EXIT_OK
        doc = json.loads(out)
        assert doc['schema_version'] == SCHEMA_VERSION
        assert doc['command'] == 'eval'
        assert doc['rows'][0]['value'] == pytest.approx(0.995, rel=1e-14)

    def test_f_csv(self, capsys):
        code, out, _ = run(capsys, 'eval', '--kind', 'f', '--alpha0', '0', '--gamma', '2.5', '--x', '0.5',
                           '--x', '1.5')
        assert code == EXIT_OK
        lines = out.splitlines()
        assert lines[0] == 'kind,x,z,value,eps0_part,eps1_part,truncated_at,last_term'
        assert len(lines) == 3
        assert lines[1].split(',')[3] == '1.0'

    def test_params_json(self, capsys):
        code, out, _ = run(capsys, 'eval', '--kind', 'qw', '--alpha0', '0', '--alpha1', '0', '--x', '2.0',
                           '--params-json', '{"mu": -2, "nu": 2, "eps": 0.02}', '--format', 'json')
        assert code == EXIT_OK
        doc = json.loads(out)
        assert doc['params']['mu'] == -2.0
        assert doc['rows'][0]['value'] == pytest.approx(0.98, rel=1e-14)

    def test_missing_alpha1(self, capsys):
        code, out, err = run(capsys, 'eval', '--kind', 'qw', '--alpha0', '0', '--gamma', '1.5', '--x', '1.0')
        assert code == EXIT_USAGE
        assert out == ''
        doc = json.loads(err)
        assert doc['error']['field'] == 'alpha1'
        assert doc['error']['type'] == 'PreconditionError'

    def test_missing_gamma(self, capsys):
        code, _, err = run(capsys, 'eval', '--kind', 'f', '--alpha0', '1', '--x', '1.0')
        assert code == EXIT_USAGE
        assert json.loads(err)['error']['field'] == 'gamma'

    def test_bad_params_json(self, capsys):
        code, _, err = run(capsys, 'eval', '--kind', 'f', '--alpha0', '1', '--x', '1.0', '--params-json', '{nope')
        assert code == EXIT_USAGE
        assert json.loads(err)['error']['type'] == 'UsageError'

    def test_output_file(self, capsys, tmp_path):
        target = tmp_path / 'eval.json'
        code, out, _ = run(capsys, 'eval', '--kind', 'f', '--alpha0', '0', '--gamma', '1.5', '--x', '1.0',
                           '--format', 'json', '--output', str(target))
        assert code == EXIT_OK
        assert out == ''
        assert json.loads(target.read_text())['rows'][0]['value'] == 1.0


class TestOtherCommands:

    def setup_class(self):
        pass

    def teardown_class(self):
        pass

    def setup_method(self, method):
        pass

    def teardown_method(self, method):
        pass

    def test_spectrum(self, capsys):
        code, out, _ = run(capsys, 'spectrum', '--b', '1', '--n-max', '2', '--format', 'json')
        assert code == EXIT_OK
        doc = json.loads(out)
        assert [row['E_squared'] for row in doc['rows']] == [6.0, 14.0]
        assert doc['rows'][0]['formula_id'] == 'primary'

    def test_spectrum_bad_tension(self, capsys):
        code, _, err = run(capsys, 'spectrum', '--b', '-1')
        assert code == EXIT_USAGE
        assert json.loads(err)['error']['field'] == 'b'

    def test_classify_physics(self, capsys):
        code, out, _ = run(capsys, 'classify', '--a0', '2', '--a1', '-0.25', '--b1', '-0.01', '--c1', '1.4999',
                           '--d1', '0')
        assert code == EXIT_OK
        doc = json.loads(out)
        assert doc['result']['case_label'] == 'III_b'
        assert doc['result']['polynomial_admissible'] is True
        assert doc['gch_params']['mu'] == -1.0

    def test_classify_without_c1(self, capsys):
        code, out, _ = run(capsys, 'classify', '--a0', '1', '--a1', '0', '--b1', '0', '--d1', '-1')
        assert code == EXIT_OK
        doc = json.loads(out)
        assert doc['result']['case_label'] == 'II'
        assert 'gch_params' not in doc

    def test_classify_complex_exponent(self, capsys):
        code, _, err = run(capsys, 'classify', '--a0', '1', '--a1', '1', '--b1', '0', '--d1', '1')
        assert code == EXIT_USAGE
        assert json.loads(err)['error']['type'] == 'ComplexExponentError'

    def test_unknown_suite(self, capsys):
        code, _, err = run(capsys, 'verify', '--suite', 'nope')
        assert code == EXIT_USAGE
        assert json.loads(err)['error']['field'] == 'suite'

    def test_no_command(self, capsys):
        code, _, _ = run(capsys)
        assert code == EXIT_USAGE

    def test_verify_spectrum(self, capsys):
        code, out, _ = run(capsys, 'verify', '--suite', 'spectrum', '--format', 'json')
        assert code == EXIT_OK
        doc = json.loads(out)
        assert doc['summary']['fail'] == 0
        assert all(row['suite'] == 'spectrum' for row in doc['rows'])

    def test_verify_bad_workers(self, capsys):
        code, _, err = run(capsys, 'verify', '--suite', 'spectrum', '--workers', '0')
        assert code == EXIT_USAGE
        assert json.loads(err)['error']['field'] == 'workers'
