import pytest

from resolvkit import constructions
from resolvkit import fileio
from resolvkit.__main__ import int_range, main
from resolvkit.certificates import Broadcast
from resolvkit.constants import ExitCode
from resolvkit.families import (make_complete, make_f_k, make_grid,
                                make_path)
from resolvkit.graph import Graph


@pytest.fixture
def graph_file(tmp_path):
    def write(g, name='graph.yaml'):
        path = tmp_path / name
        fileio.write_graph(g, path)
        return str(path)
    return write


@pytest.fixture
def certificate_file(tmp_path):
    def write(f, name='certificate.yaml', as_set=False):
        path = tmp_path / name
        fileio.write_certificate(f, path, as_set=as_set)
        return str(path)
    return write


def test_int_range():
    assert int_range('2..4') == range(2, 5)
    assert int_range('3') == range(3, 4)


def test_no_command():
    with pytest.raises(SystemExit) as info:
        main([])
    assert info.value.code == 2


def test_version(capsys):
    with pytest.raises(SystemExit) as info:
        main(['--version'])
    assert info.value.code == 0
    assert capsys.readouterr().out.startswith('rdim (MIT) ')


class TestCompute:

    def test_broadcast_dimension_of_k4(self, graph_file, capsys):
        code = main(['compute', graph_file(make_complete(4)),
                     '--param', 'bdim'])
        out = capsys.readouterr().out
        assert code == ExitCode.OK
        assert 'bdim = 3' in out
        assert 'weights: [0, 1, 1, 1]' in out

    def test_single_vertex(self, graph_file, capsys):
        assert main(['compute', graph_file(Graph(1)), '--param', 'adim']) == 0
        assert 'adim = 0' in capsys.readouterr().out

    def test_oriented_f2(self, graph_file, capsys):
        path = graph_file(make_f_k(2, oriented=True))
        assert main(['compute', path, '--param', 'adim']) == 0
        out = capsys.readouterr().out
        assert 'adim = 2' in out

    def test_naive(self, graph_file, capsys):
        assert main(['compute', graph_file(make_path(5)), '--param', 'dim',
                     '--naive']) == 0
        assert 'set: [4]' in capsys.readouterr().out

    def test_witness_verifies(self, graph_file, tmp_path, capsys):
        graph = graph_file(make_grid(2, 5)[0])
        out = str(tmp_path / 'witness.yaml')
        assert main(['compute', graph, '--param', 'ld', '--out', out]) == 0
        assert main(['verify', graph, out, '--mode', 'ld']) == 0
        assert main(['verify', graph, out, '--mode', 'adjacency']) == 0

    def test_size_limit(self, graph_file):
        path = graph_file(make_path(5))
        assert main(['compute', path, '--param', 'adim',
                     '--max-vertices', '4']) == ExitCode.SIZE_LIMIT

    def test_size_limit_applies_to_naive_search(self, graph_file, capsys):
        assert main(['compute', graph_file(make_path(5)), '--param', 'dim',
                     '--naive', '--max-vertices', '4']) == ExitCode.SIZE_LIMIT
        path = graph_file(make_path(11), name='p11.yaml')
        assert main(['compute', path, '--param', 'dim',
                     '--naive']) == ExitCode.SIZE_LIMIT
        assert main(['compute', path, '--param', 'dim', '--naive',
                     '--max-vertices', '11']) == 0
        assert 'set: [10]' in capsys.readouterr().out

    def test_size_limit_from_config(self, graph_file, tmp_path):
        config = tmp_path / 'config.yaml'
        config.write_text('solver:\n  max_vertices: 3\n')
        path = graph_file(make_path(5))
        assert main(['-c', str(config), 'compute', path,
                     '--param', 'dim']) == ExitCode.SIZE_LIMIT

    def test_invalid_config(self, graph_file, tmp_path):
        config = tmp_path / 'config.yaml'
        config.write_text('- 1\n')
        with pytest.raises(SystemExit) as info:
            main(['-c', str(config), 'compute', graph_file(make_path(2)),
                  '--param', 'dim'])
        assert info.value.code == 2

    def test_unreadable_graph(self, tmp_path):
        path = tmp_path / 'bad.yaml'
        path.write_text('n: [\n')
        assert main(['compute', str(path), '--param', 'adim']) == 2

    def test_missing_graph_file(self, tmp_path):
        with pytest.raises(SystemExit) as info:
            main(['compute', str(tmp_path / 'nope.yaml'), '--param', 'adim'])
        assert info.value.code == 2


class TestVerify:

    def test_grid_construction(self, graph_file, certificate_file):
        n = 16
        graph = graph_file(make_grid(2, n)[0])
        members = constructions.grid2_certificate(n)
        cert = certificate_file(Broadcast.from_set(2 * n, members),
                                as_set=True)
        assert main(['verify', graph, cert, '--mode', 'adjacency']) == 0

    def test_empty_broadcast(self, graph_file, certificate_file, capsys):
        code = main(['verify', graph_file(make_path(3)),
                     certificate_file(Broadcast([0, 0, 0]))])
        out = capsys.readouterr().out.splitlines()
        assert code == ExitCode.INVALID
        assert out[0].startswith('invalid broadcast certificate; '
                                 '3 undifferentiated pair(s)')
        assert out[1:] == ['  undifferentiated: 0 1',
                           '  undifferentiated: 0 2',
                           '  undifferentiated: 1 2']

    def test_locating_dominating_is_stricter(self, graph_file,
                                             certificate_file):
        graph = graph_file(make_path(3))
        cert = certificate_file(Broadcast([1, 0, 0]), as_set=True)
        assert main(['verify', graph, cert, '--mode', 'adjacency']) == 0
        assert main(['verify', graph, cert, '--mode', 'ld']) == 1

    def test_length_mismatch(self, graph_file, certificate_file):
        code = main(['verify', graph_file(make_path(3)),
                     certificate_file(Broadcast([1, 0]))])
        assert code == ExitCode.PARSE_ERROR

    def test_weights_in_set_mode(self, graph_file, certificate_file):
        code = main(['verify', graph_file(make_path(3)),
                     certificate_file(Broadcast([2, 0, 0])),
                     '--mode', 'adjacency'])
        assert code == ExitCode.PARSE_ERROR


class TestGenerate:

    def test_grid_to_stdout(self, capsys):
        assert main(['generate', '--family', 'grid', '--rows', '2',
                     '--cols', '9']) == 0
        out = capsys.readouterr().out
        assert 'n: 18' in out
        assert 'family: grid' in out

    def test_round_trip(self, tmp_path):
        path = str(tmp_path / 'f2.yaml')
        assert main(['generate', '--family', 'f_k', '--k', '2', '--oriented',
                     '--out', path]) == 0
        assert fileio.read_graph(path) == make_f_k(2, oriented=True)

    def test_missing_parameter(self):
        assert main(['generate', '--family', 'kary_tree_out',
                     '--k', '2']) == ExitCode.PARSE_ERROR


class TestConstruct:

    def test_grid2(self, tmp_path):
        path = str(tmp_path / 'c.yaml')
        assert main(['construct', '--kind', 'grid2', '--n', '8',
                     '--out', path]) == 0
        with open(path, encoding='utf-8') as stream:
            document = fileio.load_document(stream)
        assert document['recipe'] == 'C D'
        assert document['value'] == len(document['set']) == 6

    def test_tree_program(self, tmp_path):
        path = str(tmp_path / 'c.yaml')
        assert main(['construct', '--kind', 'tree-dp', '--k', '2', '--n', '3',
                     '--out', path]) == 0
        assert fileio.read_certificate(path, n=7).cost == 4

    def test_layer_parity(self, capsys):
        assert main(['construct', '--kind', 'kary', '--k', '3',
                     '--n', '2']) == 0
        assert 'layer-parity' in capsys.readouterr().out

    def test_grid_needs_two_columns(self):
        with pytest.raises(SystemExit) as info:
            main(['construct', '--kind', 'grid3', '--n', '1'])
        assert info.value.code == 2


class TestBounds:

    def test_grid2(self, capsys):
        assert main(['bounds', '--grid2', '8']) == 0
        assert capsys.readouterr().out.strip() == (
            'adim: 5 <= adim <= 6 [2block]')

    def test_graph_file(self, graph_file, capsys):
        assert main(['bounds', graph_file(make_path(4))]) == 0
        out = capsys.readouterr().out.splitlines()
        assert out == [
            'adim: 2 <= adim <= 4; exact 2 PASS [chain,maxdegree]',
            'adim: 1 <= adim <= 2; exact 2 PASS; ld = 2; bdim = 2 '
            '[boundprop]',
        ]

    def test_needs_one_source(self):
        with pytest.raises(SystemExit) as info:
            main(['bounds'])
        assert info.value.code == 2


class TestTable:

    def test_layers(self, capsys):
        assert main(['table', '--theorem', 'layers', '--k', '2',
                     '--n', '2..3']) == 0
        lines = capsys.readouterr().out.splitlines()
        assert lines[0] == ('| k | n | order | formula | exact | solver | '
                            'parity_set | status |')
        assert lines[2] == '| 2 | 2 | 3 | 2 | 2 | 2 | valid | PASS |'
        assert lines[3] == '| 2 | 3 | 7 | 5 | 4 | 4 | invalid | MISMATCH |'

    def test_grid_csv(self, capsys):
        assert main(['table', '--theorem', '2block', '--n', '2..4',
                     '--format', 'csv']) == 0
        lines = capsys.readouterr().out.splitlines()
        assert lines[0] == ('n,lower,upper,adim,ld_lower,ld,construction,'
                            'status')
        assert len(lines) == 4
        assert all(line.endswith(',ok,PASS') for line in lines[1:])

    def test_grid_beyond_solver_limit(self):
        assert main(['table', '--theorem', '3block',
                     '--n', '2..9']) == ExitCode.SIZE_LIMIT

    def test_out_trees(self, capsys):
        assert main(['table', '--theorem', 'allthesame', '--trials', '5',
                     '--max-vertices', '7', '--format', 'csv']) == 0
        lines = capsys.readouterr().out.splitlines()
        assert lines[0] == 'trial,n,adim,bdim,max_weight,rewritten,status'
        assert len(lines) == 6
        assert all(line.endswith(',PASS') for line in lines[1:])

    def test_degree_bound(self, capsys):
        assert main(['table', '--theorem', 'maxdegree', '--trials', '4',
                     '--max-vertices', '6', '--format', 'csv']) == 0
        lines = capsys.readouterr().out.splitlines()
        assert lines[1] == 'tight(4,3),13,3,4,4,TIGHT'
        assert not any(line.endswith(',FAIL') for line in lines)

    def test_empty_range(self):
        with pytest.raises(SystemExit):
            main(['table', '--theorem', 'layers', '--n', '4..2'])
