from duvalk3.cli import (
    CATALOG_ENV,
    EX_DATAERR,
    EX_NOINPUT,
    EX_OK,
    EX_REJECT,
    EX_USAGE,
    main,
)


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestBasketCommand:
    def test_table_row(self, capsys):
        code, out, _ = run(capsys, "basket", "1", "2", "3", "3", "--degree", "9")
        assert code == EX_OK
        assert "A_1 3A_2" in out
        assert "-9" in out

    def test_smooth_quartic_prints_empty(self, capsys):
        code, out, _ = run(capsys, "basket", "1", "1", "1", "1", "--degree", "4")
        assert code == EX_OK
        assert "(empty)" in out
        assert "-16" in out

    def test_not_well_formed_rejected(self, capsys):
        code, _, err = run(capsys, "basket", "2", "2", "2", "3", "--degree", "9")
        assert code == EX_REJECT
        assert "well-formed" in err

    def test_not_quasismooth_rejected(self, capsys):
        code, _, err = run(capsys, "basket", "1", "1", "2", "2", "--degree", "3")
        assert code == EX_REJECT
        assert "quasismooth" in err

    def test_not_du_val_rejected(self, capsys):
        code, _, err = run(capsys, "basket", "1", "1", "5", "5", "--degree", "10")
        assert code == EX_REJECT
        assert "du Val" in err

    def test_wrong_arity_is_usage_error(self, capsys):
        code, _, _ = run(capsys, "basket", "1", "2", "3", "--degree", "6")
        assert code == EX_USAGE

    def test_nonpositive_weight_is_usage_error(self, capsys):
        code, _, _ = run(capsys, "basket", "0", "1", "1", "1", "--degree", "4")
        assert code == EX_USAGE

    def test_tsv_format(self, capsys):
        code, out, _ = run(
            capsys, "basket", "1", "2", "2", "5", "--degree", "10", "--format", "tsv"
        )
        assert code == EX_OK
        assert out.strip().split("\t") == ["F_10 ⊂ P(1,2,2,5)", "5A_1", "-11"]


class TestSigmaCommand:
    def test_basket_tokens(self, capsys):
        code, out, _ = run(capsys, "sigma", "5A_1")
        assert code == EX_OK
        assert out.strip() == "-11"

    def test_multiple_tokens(self, capsys):
        code, out, _ = run(capsys, "sigma", "A_1", "A_7", "A_10")
        assert code == EX_OK
        assert out.strip() == "2"

    def test_irregular_surface(self, capsys):
        code, out, _ = run(capsys, "sigma", "--q", "1", "-")
        assert code == EX_OK
        assert out.strip() == "0"

    def test_bad_token_is_usage_error(self, capsys):
        code, _, _ = run(capsys, "sigma", "B_2")
        assert code == EX_USAGE

    def test_bound_violation_rejected(self, capsys):
        code, _, err = run(capsys, "sigma", "A_19", "A_1")
        assert code == EX_REJECT
        assert "19" in err


class TestPlumbingCommand:
    def test_prints_form_and_signature(self, capsys):
        code, out, _ = run(capsys, "plumbing", "A_3")
        assert code == EX_OK
        assert "sigma = -3" in out
        assert "(0, 3, 0)" in out

    def test_cartan_flag(self, capsys):
        code, out, _ = run(capsys, "plumbing", "A_2", "--cartan")
        assert code == EX_OK
        assert "sigma = 2" in out

    def test_euler_weight(self, capsys):
        code, out, _ = run(capsys, "plumbing", "A_1", "--euler-weight", "3")
        assert code == EX_OK
        assert "sigma = 1" in out

    def test_bad_type_is_usage_error(self, capsys):
        code, _, _ = run(capsys, "plumbing", "F_4")
        assert code == EX_USAGE


class TestTableVerify:
    def test_embedded_catalog_passes(self, capsys):
        code, out, _ = run(capsys, "table", "verify")
        assert code == EX_OK
        assert "19 rows: 19 ok, 0 mismatched" in out

    def test_missing_file(self, capsys):
        code, _, err = run(capsys, "table", "verify", "--catalog", "missing.txt")
        assert code == EX_NOINPUT
        assert "cannot open" in err

    def test_parse_error(self, capsys, tmp_path):
        bad = tmp_path / "bad.txt"
        bad.write_text("not a row\n", encoding="utf-8")
        code, _, err = run(capsys, "table", "verify", "--catalog", str(bad))
        assert code == EX_DATAERR
        assert "line 1" in err

    def test_mismatch_reported(self, capsys, tmp_path):
        fixture = tmp_path / "wrong.txt"
        fixture.write_text(
            "F_5 ⊂ P(1,1,1,2) | 1,1,1,2 | 5 | A_2 | -14\n", encoding="utf-8"
        )
        code, out, _ = run(capsys, "table", "verify", "--catalog", str(fixture))
        assert code == EX_REJECT
        assert "MISMATCH" in out

    def test_env_var_default(self, capsys, tmp_path, monkeypatch):
        fixture = tmp_path / "cat.txt"
        fixture.write_text(
            "F_4 ⊂ P(1,1,1,1) | 1,1,1,1 | 4 | - | -16\n", encoding="utf-8"
        )
        monkeypatch.setenv(CATALOG_ENV, str(fixture))
        code, out, _ = run(capsys, "table", "verify")
        assert code == EX_OK
        assert "1 rows: 1 ok" in out


class TestBsyCommand:
    def test_q1_table_row(self, capsys):
        code, out, _ = run(
            capsys, "bsy", "--q", "1", "--basket", "5A_1", "--degree", "2"
        )
        assert code == EX_OK
        assert out.count("-11/2·p_*[pt_F×E] + [X]") == 2  # both routes printed
        assert "PASS" in out

    def test_q3(self, capsys):
        code, out, _ = run(capsys, "bsy", "--q", "3")
        assert code == EX_OK
        assert "PASS" in out

    def test_invalid_q_is_usage_error(self, capsys):
        code, _, _ = run(capsys, "bsy", "--q", "4")
        assert code == EX_USAGE

    def test_basket_with_q2_is_usage_error(self, capsys):
        code, _, _ = run(capsys, "bsy", "--q", "2", "--basket", "A_1")
        assert code == EX_USAGE

    def test_fiber_q_flag(self, capsys):
        code, out, _ = run(capsys, "bsy", "--q", "1", "--fiber-q", "2")
        assert code == EX_OK
        assert "sigma(fiber) = 0" in out


class TestSearchCommand:
    def test_small_run_output_shape(self, capsys):
        code, out, _ = run(capsys, "search", "--max-weight", "4")
        assert code == EX_OK
        lines = out.strip().splitlines()
        assert lines[0].startswith("F_4 ⊂ P(1,1,1,1) | 1,1,1,1 | 4 | - | -16")
        assert lines[-1].startswith("# families:")

    def test_target_filter(self, capsys):
        code, out, _ = run(capsys, "search", "--max-weight", "6", "--target", "-15")
        assert code == EX_OK
        rows = [l for l in out.splitlines() if not l.startswith("#")]
        assert all("| -15" in row for row in rows)
        assert rows  # F_5 is in range

    def test_jobs_do_not_change_output(self, capsys):
        _, serial, _ = run(capsys, "search", "--max-weight", "10")
        _, parallel, _ = run(capsys, "search", "--max-weight", "10", "--jobs", "3")
        assert serial == parallel

    def test_tsv_format(self, capsys):
        code, out, _ = run(capsys, "search", "--max-weight", "4", "--format", "tsv")
        assert code == EX_OK
        first = out.splitlines()[0]
        assert first.split("\t") == ["F_4 ⊂ P(1,1,1,1)", "1,1,1,1", "4", "-", "-16"]

    def test_output_reloads_as_catalog(self, capsys, tmp_path):
        from duvalk3.catalog import load_catalog

        _, out, _ = run(capsys, "search", "--max-weight", "8")
        rows = load_catalog(out)
        assert all(row.codim == 1 for row in rows)


class TestUsage:
    def test_no_command(self, capsys):
        assert run(capsys, *[])[0] == EX_USAGE

    def test_help_exits_zero(self, capsys):
        code, out, _ = run(capsys, "--help")
        assert code == EX_OK
        assert "duvalk3" in out

    def test_unknown_command(self, capsys):
        assert run(capsys, "frobnicate")[0] == EX_USAGE
