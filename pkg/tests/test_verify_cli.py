import pytest

from dycross import cli
from dycross.drawing import loads as load_drawing
from dycross.graph import loads as load_graph
from dycross.iso import is_isomorphic
from dycross.graph import complete_bipartite
from dycross.solver import Budget
from dycross.verify import (CONFIRMED, CONSISTENT, INCONCLUSIVE, verify_move_chain, verify_petersen,
                            verify_second_move, verify_single_move)

QUICK = Budget(node_limit=5)


def test_single_move_k6_is_confirmed_equality():
    rep = verify_single_move(6, Budget())
    assert rep.verdict == CONFIRMED
    assert rep.computed["K6"].ub == rep.computed["G6_1"].ub == 3


def test_single_move_k7_uses_registry():
    rep = verify_single_move(7, QUICK)
    assert rep.verdict == CONSISTENT
    assert rep.registry["K7"].value == 9
    assert rep.computed["G7_1"].ub == 8
    assert "external" in rep.render()


def test_second_move_and_chain():
    rep = verify_second_move(7, QUICK)
    assert rep.verdict == CONSISTENT and rep.computed["G7_2"].ub <= 7
    assert rep.computed["Gstar"].ub == 8
    chain = verify_move_chain(7, 2, QUICK)
    ubs = [chain.computed[k].ub for k in ("K7", "G7_1", "G7_2")]
    assert ubs[0] == 9 and ubs[1] == 8 and ubs[2] <= 7
    assert any("10k+1" in line for line in chain.lines)


def test_chain_outside_range():
    with pytest.raises(ValueError):
        verify_move_chain(6, 3)
    with pytest.raises(ValueError):
        verify_second_move(6)


def test_inconclusive_when_bounds_stay_open():
    rep = verify_move_chain(9, 1, Budget(node_limit=2, restarts=1), max_k=0)
    assert rep.verdict in (CONSISTENT, INCONCLUSIVE)


def test_petersen_report():
    rep = verify_petersen(Budget())
    assert rep.verdict == CONFIRMED
    assert {k: b.ub for k, b in rep.computed.items()} == {"P8": 2, "P9": 2, "P10": 2, "K6": 3, "Q7": 3,
                                                           "P7": 3, "Q8": 3}


def test_cli_gen_and_moves(tmp_path, capsys):
    out = tmp_path / "k4.txt"
    assert cli.main(["gen", "--name", "K4", "--out", str(out)]) == 0
    assert cli.main(["moves", "--in", str(out), "--move", "dy:0,1,2"]) == 0
    g = load_graph(capsys.readouterr().out)
    assert is_isomorphic(g, complete_bipartite(2, 3))


def test_cli_usage_errors(capsys):
    assert cli.main(["moves", "--name", "K5", "--move", "yd:0"]) == 2
    assert cli.main(["moves", "--name", "K5", "--move", "zz:0"]) == 2
    assert cli.main(["gen", "--name", "Nope"]) == 2
    assert cli.main(["gen"]) == 2
    with pytest.raises(SystemExit) as exc:
        cli.main(["cr", "--name", "K5", "--budget", "soon"])
    assert exc.value.code == 2


def test_cli_cr_writes_witness(tmp_path, capsys):
    out = tmp_path / "k33.drawing"
    assert cli.main(["cr", "--name", "K3,3", "--out", str(out)]) == 0
    text = capsys.readouterr().out
    assert "status: exact" in text and "ub: 1" in text
    assert load_drawing(out.read_text()).crossing_count == 1


def test_cli_draw_svg(tmp_path):
    out = tmp_path / "k5.svg"
    assert cli.main(["draw", "--name", "K5", "--format", "svg", "--out", str(out)]) == 0
    assert out.read_text().startswith("<svg")


def test_cli_family(capsys):
    assert cli.main(["family"]) == 0
    text = capsys.readouterr().out
    assert text.startswith("7 members") and "P10" in text


def test_cli_verify_exit_codes(capsys):
    assert cli.main(["verify", "petersen"]) == 0
    assert cli.main(["verify", "thm1", "--n", "7", "--nodes", "5"]) == 0
    assert "consistent-with-bounds" in capsys.readouterr().out


def test_parse_duration():
    assert cli.parse_duration("2m") == 120 and cli.parse_duration("500ms") == 0.5
    assert cli.parse_duration("7") == 7
