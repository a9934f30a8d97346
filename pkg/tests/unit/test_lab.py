"""
Unit tests for the command line: element parsers, reports and exit codes.
"""

import orjson
import pytest

from combinatorics import Permutation, SetPartition
from diagrams import Diagram, RamifiedPair, generator
from errors import DimensionMismatchError, ParseError, VanishingDenominatorError
from lab import RunConfig, RunOutcome, build_report, dump_report
from lab.elements import parse_hecke_element, parse_render_target, parse_twisted_element
from party import PartyElement
from scalars import Q


class TestElementParsers:
    """Text forms of elements."""

    def test_hecke_terms(self, symbolic_ring):
        r = symbolic_ring
        x = parse_hecke_element('(a^2 - 1) * [1 2|3][1 2 3] - q * [1|2|3][2 1 3]')
        assert x.n == 3
        assert x.coefficient((SetPartition.parse('1 2|3'), Permutation.identity(3))) == r.p - r.one
        assert x.coefficient((SetPartition.identity(3), Permutation.parse('2 1 3'))) == -r.q

    def test_hecke_pair_is_reduced(self, symbolic_ring):
        r = symbolic_ring
        x = parse_hecke_element('[1 2][2 1]')
        assert x.terms == {(SetPartition.full(2), Permutation.identity(2)): r.p * r.q}

    def test_hecke_mixed_degrees(self):
        with pytest.raises(DimensionMismatchError):
            parse_hecke_element('[1|2][1 2] + [1|2|3][1 2 3]')

    @pytest.mark.parametrize("text", ['', '[1|2][1 2] junk', 'x * [1|2][1 2]', '[1|2][1 1]'])
    def test_hecke_malformed(self, text):
        with pytest.raises(ParseError):
            parse_hecke_element(text)

    def test_twisted_party_terms(self):
        x = parse_twisted_element('2 * [1 3|2][2 1 3] + [1|2|3][1 2 3]', 'party')
        assert x.terms == {PartyElement.parse('[1 3|2][2 1 3]'): 2, PartyElement.identity(3): 1}

    def test_twisted_diagram_terms(self):
        x = parse_twisted_element('q * [1 2|3 4]', 'diagram')
        assert x.terms == {generator('t_i', (1,), 2): Q}

    def test_render_targets(self):
        assert isinstance(parse_render_target('tied:[1 2|3][2 1 3]'), RamifiedPair)
        assert parse_render_target('[1|2][2 1]') == PartyElement.parse('[1|2][2 1]')
        assert parse_render_target('[1 3|2 4]') == Diagram.identity(2)
        with pytest.raises(ParseError):
            parse_render_target('s_1')


class TestReports:
    """Report documents."""

    def test_sorted_keys(self):
        assert dump_report({'b': 1, 'a': 2}) == b'{\n  "a": 2,\n  "b": 1\n}'

    def test_progress_not_recorded(self):
        config = RunConfig(command='ph dim', seed=3, progress=True, options={'n': 3})
        assert 'progress' not in config.to_dict()
        assert config.to_dict()['options'] == {'n': 3}

    def test_report_shape(self):
        report = build_report(RunConfig(command='ph dim'), RunOutcome({'x': 1}, passed=False), 'run_1')
        assert report == {
            'schema': 1,
            'run_id': 'run_1',
            'config': {'command': 'ph dim', 'seed': 0, 'output': 'text', 'allow_long': False, 'options': {}},
            'passed': False,
            'result': {'x': 1},
        }


class TestCommands:
    """Commands end to end through lab.run."""

    def test_enumerate_text(self, run_cli):
        code, output = run_cli('enumerate', 'party', '--n', '3')
        assert code == 0
        assert output.startswith('enumerate: PASS')
        assert '[PASS] diagram closure (observed 16, expected 16)' in output

    def test_enumerate_json(self, run_cli):
        code, output = run_cli('enumerate', 'jones', '--n', '4', '--output', 'json')
        report = orjson.loads(output)
        assert code == 0
        assert report['schema'] == 1
        assert report['passed'] is True
        assert report['result']['counts'][0]['observed'] == 14

    def test_json_is_reproducible(self, run_cli):
        argv = ('quot', 'dim', '--ideal', 'FF', '--n', '3', '--seed', '7', '--output', 'json')
        first = run_cli(*argv)
        second = run_cli(*argv)
        assert first == second
        assert orjson.loads(first[1])['result']['quotient_dimension'] == 15

    def test_report_file(self, run_cli, tmp_path):
        path = tmp_path / 'out' / 'report.json'
        code, output = run_cli('ph', 'dim', '--n', '3', '--output', 'json', '--report-file', str(path))
        assert code == 0
        assert path.read_text() == output

    def test_normalize(self, run_cli):
        code, output = run_cli('party', 'normalize', '[1 2|3][2 1 3]', '--output', 'json')
        result = orjson.loads(output)['result']
        assert code == 0
        assert result['normal_form'] == '[1 2|3][1 2 3]'
        assert result['shape'] == [2, 1]

    def test_tied_product(self, run_cli):
        code, output = run_cli('party', 'mul', '[1 2|3][1 2 3]', '[1|2|3][2 1 3]', '--monoid', 'tied',
                               '--output', 'json')
        assert code == 0
        assert orjson.loads(output)['result']['product'] == '[1 2|3][2 1 3]'

    def test_green(self, run_cli):
        code, output = run_cli('party', 'green', '--n', '3', '--relation', 'L', '--output', 'json')
        assert code == 0
        assert orjson.loads(output)['result']['counts'][0]['observed'] == 5

    def test_twisted_product(self, run_cli):
        code, output = run_cli('algebra', 'mul', '[1 2|3][1 2 3]', '[1 2|3][1 2 3]', '--output', 'json')
        assert code == 0
        assert orjson.loads(output)['result']['product'] == '(q^2) * [[1 2|3][1 2 3]]'

    def test_word(self, run_cli):
        code, output = run_cli('ph', 'word', 'G1 G1', '--n', '2', '--output', 'json')
        assert code == 0
        assert orjson.loads(output)['result']['terms'] == {'[1|2][1 2]': 'a^2*q^2', '[1 2][1 2]': 'a^4 - a^2'}

    def test_product(self, run_cli):
        code, output = run_cli('ph', 'mul', '[1 2][1 2]', '[1 2][1 2]', '--output', 'json')
        assert code == 0
        assert orjson.loads(output)['result']['terms'] == {'[1 2][1 2]': 'q^2'}

    def test_render(self, run_cli):
        code, output = run_cli('render', '[1 4|2 3]')
        assert code == 0
        assert ' X ' in output.split('\n')


class TestExitCodes:
    """0 on success, 1 on a failed check, 2 on parse and usage errors."""

    def test_failed_check(self, run_cli):
        code, output = run_cli('rep', 'verify', '--n', '3', '--table', 'flat')
        assert code == 1
        assert output.startswith('rep verify: FAIL')
        assert '[FAIL]' in output

    def test_alternate_points(self, run_cli):
        code, _ = run_cli('ph', 'verify', '--suite', 'virtual', '--alternate')
        assert code == 1

    def test_parse_error(self, run_cli):
        code, output = run_cli('party', 'normalize', 'oops')
        assert code == 2
        assert output.startswith('error [PARSE_ERROR]')

    def test_long_run_refused(self, run_cli):
        code, output = run_cli('quot', 'dim', '--ideal', 'FF', '--n', '5', '--output', 'json')
        assert code == 2
        assert orjson.loads(output)['error']['code'] == 'LONG_RUN_REFUSED'

    def test_bound_is_a_check_failure(self, run_cli):
        code, output = run_cli('enumerate', 'partitions', '--n', '9')
        assert code == 1
        assert 'BOUND_EXCEEDED' in output

    def test_handler_error(self, run_cli, mocker):
        mocker.patch('lab.cli.verify_matrix_relations', side_effect=VanishingDenominatorError('pole at the point'))
        code, output = run_cli('rep', 'verify', '--output', 'json')
        error = orjson.loads(output)['error']
        assert code == 1
        assert error['code'] == 'VANISHING_DENOMINATOR'
        assert error['message'] == 'pole at the point'

    @pytest.mark.parametrize("argv", [
        (),
        ('enumerate', 'motzkin', '--n', '3'),
        ('enumerate', 'party', '--n', '0'),
        ('quot', 'dim', '--ideal', 'FF', '--n', '3', '--seed', '-1'),
    ])
    def test_usage_errors(self, run_cli, argv):
        code, _ = run_cli(*argv)
        assert code == 2
