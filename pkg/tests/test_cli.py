import json
from fractions import Fraction

import config
from ui import cli
from ui.output import format_polynomial, render_plain_table
from modules.families import euler_poly, geometric_poly
from modules.polybasis import Polynomial


def run(capsys, *argv):
    code = cli.main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_table_csv_row(capsys):
    code, out, _ = run(capsys, "--format", "csv", "table", "s2", "--max-m", "4")
    lines = out.splitlines()
    assert code == 0
    assert lines[0] == "0,1,2,3,4"
    assert lines[-1] == "0,1,7,6,1"
    assert lines[1] == "1,,,,"


def test_table_plain_first_kind(capsys):
    code, out, _ = run(capsys, "table", "s1u", "--max-m", "5")
    assert code == 0
    assert "0 24 50 35 10 1" in out.splitlines()


def test_table_single_cell(capsys):
    code, out, _ = run(capsys, "table", "s2", "--max-m", "0")
    assert code == 0
    assert out == "1\n"


def test_table_stirling_layout_with_errata_note(capsys):
    code, out, _ = run(capsys, "table", "s2", "--max-m", "9", "--layout", "stirling")
    lines = out.splitlines()
    assert code == 0
    assert lines[7].split() == ["1", "28", "462"]
    assert lines[0].split() == ["1", "0", "0", "0", "0", "0", "0", "0", "0", "0"]
    assert any(line.startswith("*") and "461" in line and "462" in line for line in lines)


def test_table_first_kind_errata_in_json(capsys):
    code, out, _ = run(capsys, "--format", "json", "table", "s1u", "--max-m", "9")
    data = json.loads(out)
    assert code == 0
    assert data["command"] == "table"
    assert data["result"]["rows"][9][3] == 118124
    assert any("105056" in note for note in data["notes"])


def test_table_without_errata_has_no_notes(capsys):
    _, out, _ = run(capsys, "--format", "json", "table", "s2", "--max-m", "5")
    assert json.loads(out)["notes"] == []


def test_json_round_trips(capsys):
    _, out, _ = run(capsys, "--format", "json", "expand", "bernoulli-egf", "--order", "6")
    assert json.dumps(json.loads(out), indent=2) + "\n" == out


def test_output_is_deterministic(capsys):
    _, first, _ = run(capsys, "--format", "json", "--seed", "3", "verify", "eq1.10", "--max", "4")
    _, second, _ = run(capsys, "--format", "json", "--seed", "3", "verify", "eq1.10", "--max", "4")
    assert first == second


def test_table_max_m_out_of_range(capsys):
    code, _, err = run(capsys, "table", "s2", "--max-m", "201")
    assert code == 2
    assert "max-m" in err


def test_bad_flag_is_usage_error(capsys):
    assert run(capsys, "table", "s3")[0] == 2
    assert run(capsys, "--format", "xml", "table", "s2")[0] == 2


def test_poly_examples(capsys):
    assert run(capsys, "poly", "omega", "4")[1] == "x + 14x^2 + 36x^3 + 24x^4\n"
    assert run(capsys, "poly", "phi", "0")[1] == "1\n"
    assert run(capsys, "poly", "euler", "1")[1] == "-1/2 + x\n"


def test_poly_omega_seven_csv(capsys):
    _, out, _ = run(capsys, "--format", "csv", "poly", "omega", "7")
    coefficients = [line.split(",")[1] for line in out.splitlines()[1:]]
    assert coefficients == ["0", "1", "126", "1806", "8400", "16800", "15120", "5040"]


def test_poly_json_renders_rationals(capsys):
    _, out, _ = run(capsys, "--format", "json", "poly", "euler", "3")
    data = json.loads(out)
    assert data["result"]["coefficients"] == ["1/4", 0, "-3/2", 1]


def test_format_polynomial():
    assert format_polynomial(Polynomial()) == "0"
    assert format_polynomial(Polynomial([0, -1, 1])) == "-x + x^2"
    assert format_polynomial(euler_poly(3)) == "1/4 - (3/2)x^2 + x^3"
    assert format_polynomial(Polynomial([0, Fraction(-2, 3), 4])) == "-(2/3)x + 4x^2"
    assert format_polynomial(geometric_poly(2)) == "x + 2x^2"


def test_render_plain_table_pads_columns():
    assert render_plain_table([[1, None], [10, 2]]) == " 1\n10 2\n"


def test_powersum_all(capsys):
    code, out, _ = run(capsys, "powersum", "2", "3", "--method", "all")
    assert code == 0
    assert out == "naive: 14\nbernoulli: 14\nstirling: 14\n"


def test_powersum_single_methods(capsys):
    assert run(capsys, "powersum", "1", "100", "--method", "stirling")[1] == "5050\n"
    assert run(capsys, "powersum", "0", "5", "--method", "bernoulli")[1] == "5\n"


def test_powersum_guard(capsys):
    assert run(capsys, "powersum", "2", "1000001", "--method", "naive")[0] == 2
    assert run(capsys, "powersum", "1001", "3")[0] == 2


def test_verify_orthogonality_json(capsys):
    code, out, _ = run(capsys, "--format", "json", "verify", "eq10.2", "--max", "20")
    data = json.loads(out)
    assert code == 0
    assert data["result"]["checked"] == 441
    assert data["result"]["reports"][0]["failures"] == []
    assert data["result"]["status"] == "pass"


def test_verify_bernoulli_routes(capsys):
    code, out, _ = run(capsys, "verify", "eq8.3", "--order", "24")
    assert code == 0
    assert "eq8.3" in out
    assert "pass" in out


def test_verify_all_small(capsys):
    code, out, _ = run(capsys, "--format", "csv", "verify", "all", "--max", "5", "--order", "8")
    lines = out.splitlines()
    assert code == 0
    assert lines[0] == "identity,range,checked,failures,status"
    assert all(line.endswith(",0,pass") for line in lines[1:])


def test_verify_unknown_identity(capsys):
    assert run(capsys, "verify", "eq2.7")[0] == 2


def test_verify_failure_exit_code(capsys, monkeypatch):
    from modules.report import VerificationReport

    def broken(identity_id, opts):
        report = VerificationReport(identity_id, "forced")
        report.check({"m": 0}, 1, 2)
        return report

    monkeypatch.setattr(cli, "run_identity", broken)
    code, out, _ = run(capsys, "verify", "eq1.1")
    assert code == 1
    assert "expected 1, got 2" in out


def test_expand_bernoulli(capsys):
    code, out, _ = run(capsys, "--format", "json", "expand", "bernoulli-egf", "--order", "12")
    data = json.loads(out)
    assert code == 0
    assert data["result"]["egf_coefficients"][12] == "-691/2730"
    assert data["result"]["egf_coefficients"][1] == "-1/2"


def test_expand_stirling_column_csv(capsys):
    _, out, _ = run(capsys, "--format", "csv", "expand", "stirling2-egf", "--n", "2", "--order", "5")
    egf = [line.split(",")[2] for line in out.splitlines()[1:]]
    assert egf == ["0", "0", "1", "3", "7", "15"]


def test_expand_fermi_pole_is_usage_error(capsys):
    assert run(capsys, "expand", "fermi", "--mu", "-1")[0] == 2


def test_expand_rejects_bad_rational(capsys):
    assert run(capsys, "expand", "bell-egf", "--x", "one")[0] == 2


def test_expand_inverse_factorial(capsys):
    code, out, _ = run(capsys, "--format", "json", "expand", "inverse-factorial", "--m", "1", "--terms", "0", "--z", "1")
    data = json.loads(out)
    assert code == 0
    assert data["result"]["partial_sum"] == "1/2"
    assert data["result"]["residual"] == "1/2"
    assert data["result"]["formal_check"] == "pass"


def test_poly_plain_parenthesises_fractional_coefficients(capsys):
    assert run(capsys, "poly", "euler", "3")[1] == "1/4 - (3/2)x^2 + x^3\n"


# Historical tables as printed, misprints included.
# Second kind, n down the rows and m = n..9 across.
PRINTED_SECOND_KIND = {
    1: [1, 1, 1, 1, 1, 1, 1, 1, 1],
    2: [1, 3, 7, 15, 31, 63, 127, 255],
    3: [1, 6, 25, 90, 301, 966, 3025],
    4: [1, 10, 65, 350, 1701, 7770],
    5: [1, 15, 140, 1050, 6951],
    6: [1, 21, 266, 2646],
    7: [1, 28, 461],
    8: [1, 36],
    9: [1],
}

# Unsigned first kind, m down the rows and k = 1..m across.
PRINTED_FIRST_KIND = {
    1: [1],
    2: [1, 1],
    3: [2, 3, 1],
    4: [6, 11, 6, 1],
    5: [24, 50, 35, 10, 1],
    6: [120, 274, 225, 85, 15, 1],
    7: [720, 1764, 1624, 735, 175, 21, 1],
    8: [5040, 13068, 13132, 6769, 1960, 322, 28, 1],
    9: [40320, 109584, 105056, 67284, 22449, 4536, 546, 36, 1],
}

# Geometric polynomials, ascending coefficients.
PRINTED_GEOMETRIC = [
    [1],
    [0, 1],
    [0, 1, 2],
    [0, 1, 6, 6],
    [0, 1, 14, 36, 24],
    [0, 1, 30, 150, 240, 120],
    [0, 1, 62, 540, 1560, 1800, 720],
    [0, 1, 126, 1806, 8400, 16800, 15120, 5040],
]


def _expected_cell(kind, m, n, printed):
    errata = config.FIGURE_ERRATA.get((kind, m, n))
    if errata is None:
        return printed
    assert printed == errata[0]
    return errata[1]


def test_second_kind_table_reproduces_printed_table(capsys):
    code, out, _ = run(capsys, "--format", "json", "table", "s2", "--max-m", "9", "--layout", "stirling")
    rows = json.loads(out)["result"]["rows"]
    assert code == 0
    checked = 0
    for n, printed_row in PRINTED_SECOND_KIND.items():
        assert rows[n][:n] == [None] * n
        for m, printed in enumerate(printed_row, start=n):
            assert rows[n][m] == _expected_cell("s2", m, n, printed)
            checked += 1
    assert checked == 45


def test_first_kind_table_reproduces_printed_table(capsys):
    code, out, _ = run(capsys, "--format", "json", "table", "s1u", "--max-m", "9")
    rows = json.loads(out)["result"]["rows"]
    assert code == 0
    checked = 0
    for m, printed_row in PRINTED_FIRST_KIND.items():
        assert rows[m][0] == 0
        for k, printed in enumerate(printed_row, start=1):
            assert rows[m][k] == _expected_cell("s1u", m, k, printed)
            checked += 1
    assert checked == 45


def test_errata_cover_exactly_the_misprints():
    misprints = {("s2", 9, 7), ("s1u", 9, 3)}
    assert set(config.FIGURE_ERRATA) == misprints
    assert PRINTED_SECOND_KIND[7][9 - 7] == config.FIGURE_ERRATA[("s2", 9, 7)][0]
    assert PRINTED_FIRST_KIND[9][3 - 1] == config.FIGURE_ERRATA[("s1u", 9, 3)][0]


def test_geometric_polynomials_reproduce_printed_list(capsys):
    for m, printed in enumerate(PRINTED_GEOMETRIC):
        code, out, _ = run(capsys, "--format", "json", "poly", "omega", str(m))
        assert code == 0
        assert json.loads(out)["result"]["coefficients"] == printed
