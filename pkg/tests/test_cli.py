import json
import logging

import trace_lab
from src.catalog import get_example_from_name
from src.workspace import workspace_to_dict, write_workspace


def run(capsys, *argv):
    args = trace_lab.get_parser().parse_args(list(argv))
    code = trace_lab.main(args)
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def rows(report):
    lines = report.splitlines()
    assert lines[0] == 'section\tsubject\tvalue\tstatus'
    return [line.split('\t') for line in lines[1:]]


def test_cartan_of_path_algebra(capsys):
    code, out, _ = run(capsys, 'cartan', '--example', 'PathA2')
    assert code == 0
    assert rows(out) == [['cartan', 'cartan matrix', '[[1,1],[0,1]]', 'info']]


def test_validate_catalog(capsys):
    code, out, _ = run(capsys, 'validate', '--example', 'Sweedler')
    assert code == 0
    assert all(row[3] == 'pass' for row in rows(out))


def test_verify_small_group_algebra(capsys):
    code, out, _ = run(capsys, 'verify', '--example', 'GrpF2C2', '--samples', '8')
    assert code == 0
    report = rows(out)
    assert not any(row[3] == 'FAIL' for row in report)
    assert ['trace_field', 't(xi) table', '[[0]]', 'info'] in report
    assert ['partial_trace', 'A,A: t_P(tr f) = t_PX(f)', '2/2', 'pass'] in report
    assert ['hopf', 'A(x)A: projective', 'dim 4', 'pass'] in report


def test_verify_sweedler_skips_frobenius(capsys):
    code, out, _ = run(capsys, 'verify', '--example', 'Sweedler', '--samples', '8')
    assert code == 0
    report = rows(out)
    assert ['frobenius', 'FrobStructure', 'NotUnimodular', 'skipped'] in report
    assert any(row[0] == 'calabi_yau' and row[1].endswith('cyclicity') and row[3] == 'pass' for row in report)
    assert ['nakayama', 'N(k) = D^-1', '[[[1]],[[-1]],[[0]],[[0]]]', 'pass'] in report
    assert ['hopf', 'A(x)A: projective', 'dim 16', 'pass'] in report


def test_verify_s3(capsys):
    code, out, _ = run(capsys, 'verify', '--example', 'GrpF3S3', '--seed', '7', '--samples', '8')
    assert code == 0
    assert ['trace_field', 't(xi) table', '[[2,1],[1,2]]', 'info'] in rows(out)


def test_reports_are_deterministic(capsys):
    first = run(capsys, 'verify', '--example', 'Prod2', '--seed', '3', '--samples', '8')
    second = run(capsys, 'verify', '--example', 'Prod2', '--seed', '3', '--samples', '8')
    assert first[0] == 0
    assert first[1] == second[1]


def test_seed_from_environment(monkeypatch):
    monkeypatch.setenv('TRACE_LAB_SEED', '17')
    assert trace_lab.get_parser().parse_args(['star', '--example', 'Triv']).seed == 17


def test_malformed_seed_environment_warns(monkeypatch, caplog):
    monkeypatch.setenv('TRACE_LAB_SEED', 'abc')
    with caplog.at_level(logging.WARNING, logger='trace_lab'):
        assert trace_lab.default_seed() == 42
    assert [r.levelname for r in caplog.records] == ['WARNING']
    assert "TRACE_LAB_SEED='abc' is not an integer" in caplog.text


def test_valid_seed_environment_is_silent(monkeypatch, caplog):
    monkeypatch.setenv('TRACE_LAB_SEED', '5')
    with caplog.at_level(logging.WARNING, logger='trace_lab'):
        assert trace_lab.default_seed() == 5
    assert caplog.records == []


def test_handle_and_star_tables(capsys):
    code, out, _ = run(capsys, 'handle', '--example', 'GrpQC2')
    assert code == 0
    assert ['handle', 'P1,P1: xi', '[[2]]', 'info'] in rows(out)
    code, out, _ = run(capsys, 'star', '--example', 'GrpQC2')
    assert code == 0
    assert ['star', 'dim HH0', '2', 'info'] in rows(out)


def test_trace_and_nakayama_verbs(capsys):
    code, out, _ = run(capsys, 'trace', '--example', 'PathA2')
    assert code == 0
    assert ['trace', 'modified traces', 'no Frobenius data', 'skipped'] in rows(out)
    code, out, _ = run(capsys, 'nakayama', '--example', 'PathA2')
    assert code == 0
    assert any(row[1] == 'P1: dim N(X)' and row[2].endswith('-> 2') for row in rows(out))


def test_report_to_file(capsys, tmp_path):
    out = tmp_path / 'report.tsv'
    code, stdout, _ = run(capsys, 'cartan', '--example', 'GrpF3S3', '--out', str(out))
    assert code == 0
    assert stdout == ''
    assert out.read_text().splitlines()[1] == 'cartan\tcartan matrix\t[[2,1],[1,2]]\tinfo'


def test_workspace_file_input(capsys, tmp_path):
    path = tmp_path / 'qc2.json'
    write_workspace(get_example_from_name('GrpQC2').get_workspace(), path)
    code, out, _ = run(capsys, 'cartan', '--file', str(path))
    assert code == 0
    assert rows(out)[0][2] == '[[1,0],[0,1]]'


def test_parse_error_exits_with_two(capsys, tmp_path):
    path = tmp_path / 'broken.json'
    path.write_text('{"field": {"characteristic": 4}}')
    code, out, err = run(capsys, 'validate', '--file', str(path))
    assert code == 2
    assert out == ''
    assert '$.field.characteristic' in err


def test_validation_error_exits_with_two(capsys, tmp_path):
    data = workspace_to_dict(get_example_from_name('PathA2').get_workspace())
    data['algebra']['structure'] = [entry for entry in data['algebra']['structure'] if entry[:3] != [1, 2, 1]]
    data['algebra']['structure'].append([1, 2, 2, '1'])
    path = tmp_path / 'defect.json'
    path.write_text(json.dumps(data))
    code, _, err = run(capsys, 'cartan', '--file', str(path))
    assert code == 2
    assert 'associativity' in err
    code, out, _ = run(capsys, 'validate', '--file', str(path))
    assert code == 2
    assert any(row[3] == 'FAIL' for row in rows(out))


def test_missing_idempotents_exit_with_two(capsys, tmp_path):
    data = workspace_to_dict(get_example_from_name('PathA2').get_workspace())
    data['algebra']['idempotents'] = []
    data['algebra']['complete'] = False
    data['modules'] = []
    path = tmp_path / 'bare.json'
    path.write_text(json.dumps(data))
    code, _, err = run(capsys, 'cartan', '--file', str(path))
    assert code == 2
    assert 'MissingIdempotents' in err
