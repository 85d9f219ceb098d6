import json

import pytest

from fillingrec.cli import main
from fillingrec.core.constants import constants


def _run(capsys, argv):
    code = main(argv)
    out = capsys.readouterr().out
    return code, (json.loads(out) if out.strip() else None)


def _terms(report):
    return {(t['coeff'], tuple(t['x']), t['t']) for t in report['terms']}


def test_poly_schur(capsys):
    """测试1：poly 子命令输出 JSON 多项式"""
    code, report = _run(capsys, ["poly", "--family", "schur", "--shape", "1", "--n", "2"])
    assert code == 0
    assert report['num_vars'] == 2
    assert _terms(report) == {(1, (1, 0), 0), (1, (0, 1), 0)}


def test_poly_zero_key(capsys):
    """测试2：零组合的 key 多项式为 1"""
    code, report = _run(capsys, ["poly", "--family", "key", "--alpha", "0,0", "--n", "2"])
    assert code == 0
    assert _terms(report) == {(1, (0, 0), 0)}


def test_seq(capsys):
    """测试3：seq 子命令给出 k = 0..kmax"""
    code, report = _run(capsys, ["seq", "--family", "key", "--alpha", "1,0", "--n", "2", "--kmax", "2"])
    assert code == 0
    assert report['start'] == 0
    assert len(report['values']) == 3
    assert report['spec']['alpha'] == [1, 0]


def test_check_pass_and_fail(capsys):
    """测试4：正确阶通过，指定过低的阶退出码为 1"""
    code, report = _run(capsys, ["check", "--family", "key", "--alpha", "1,0", "--n", "2"])
    assert code == constants.EXIT_CODES['pass']
    assert report['passed']
    assert report['char_poly']['degree'] == 2
    assert {c['test'] for c in report['checks']} == {'annihilation', 'determinant'}

    code, report = _run(capsys, ["check", "--family", "key", "--alpha", "1,0", "--n", "2", "--order", "1"])
    assert code == constants.EXIT_CODES['fail']
    assert not report['passed']


def test_check_dual_grothendieck(capsys):
    """测试5：对偶 Grothendieck 从 k = 1 起检验"""
    code, report = _run(capsys, ["check", "--family", "dual_grothendieck", "--shape", "1", "--n", "2"])
    assert code == 0
    assert report['start'] == 1


def test_usage_errors(capsys, monkeypatch):
    """测试6：用法错误退出码为 2"""
    assert main(["identity", "no_such_identity"]) == constants.EXIT_CODES['usage']
    assert main(["poly", "--family", "schur", "--n", "2"]) == constants.EXIT_CODES['usage'], "缺少 shape"
    assert main(["poly", "--family", "schur", "--shape", "1,2", "--n", "2"]) == constants.EXIT_CODES['usage']
    with pytest.raises(SystemExit) as excinfo:
        main(["poly", "--family", "nope", "--n", "2"])
    assert excinfo.value.code == 2

    monkeypatch.setenv("FILLINGS_THREADS", "abc")
    assert main(["poly", "--family", "schur", "--shape", "1", "--n", "2"]) == constants.EXIT_CODES['usage']
    capsys.readouterr()


def test_window_too_short(capsys):
    """测试7：窗口过短退出码为 3"""
    code = main(["specialize", "--alpha", "1,0", "--kmax", "0"])
    assert code == constants.EXIT_CODES['window']


def test_specialize(capsys):
    """测试8：K_{k(1,0)}(1,1) = k + 1"""
    code, report = _run(capsys, ["specialize", "--alpha", "1,0"])
    assert code == 0
    assert report['coefficients'] == ["1", "1"]
    assert report['verdict'] == 'nonnegative'


def test_identity(capsys):
    """测试9：identity 子命令"""
    code, report = _run(capsys, ["identity", "hlp_sum", "--mu", "1,0", "--n", "2"])
    assert code == 0
    assert report['passed']
    code, report = _run(capsys, ["identity", "key_operator", "--max-size", "2", "--max-n", "2"])
    assert code == 0
    assert report['index_map'] == constants.KEY_INDEX_MAP


def test_polytope_files(capsys, tmp_path):
    """测试10：多面体与面并输入文件"""
    single = tmp_path / "segment.json"
    single.write_text(json.dumps({"polytope": {"A": [[1], [-1]], "b": [2, 0], "box": [[0, 2]]}}))
    code, report = _run(capsys, ["polytope", str(single)])
    assert code == 0
    assert report['lattice_points'] == [[0], [1], [2]]
    assert report['idp_decomposition']
    assert len(report['window']) == report['kmax'] + 1
    assert report['window'][0]['terms'] == [{'coeff': 1, 'x': [0], 't': 0}]
    assert len(report['window'][1]['terms']) == 3

    faces = tmp_path / "faces.json"
    faces.write_text(json.dumps({"faces": [
        {"A": [[1], [-1]], "b": [0, 0], "box": [[0, 0]]},
        {"A": [[1], [-1]], "b": [1, -1], "box": [[1, 1]]},
    ]}))
    code, report = _run(capsys, ["polytope", str(faces)])
    assert code == 0
    assert report['window'][0]['terms'] == [{'coeff': 2, 'x': [0], 't': 0}]

    assert main(["polytope", str(tmp_path / "missing.json")]) == constants.EXIT_CODES['usage']


def test_out_file(capsys, tmp_path):
    """测试11：--out 写文件，stdout 为空"""
    target = tmp_path / "out" / "s.json"
    code, report = _run(capsys, ["poly", "--family", "schur", "--shape", "1", "--n", "1", "--out", str(target)])
    assert code == 0
    assert report is None
    assert json.loads(target.read_text(encoding="utf-8"))['num_vars'] == 1


def test_golden_roundtrip(capsys, tmp_path):
    """测试12：oracle 写出的语料与 transfer 路径逐字节一致"""
    assert main(["golden", "--write", str(tmp_path)]) == 0
    capsys.readouterr()
    assert len(list(tmp_path.glob("*.json"))) == len(constants.GOLDEN_CORPUS)
    code, report = _run(capsys, ["golden", "--check", str(tmp_path)])
    assert code == 0
    assert report['mismatches'] == []

    (tmp_path / "key_102.json").write_text("{}\n", encoding="utf-8")
    code, report = _run(capsys, ["golden", "--check", str(tmp_path)])
    assert code == constants.EXIT_CODES['fail']
    assert report['mismatches'] == [{'name': 'key_102', 'reason': 'differs'}]
