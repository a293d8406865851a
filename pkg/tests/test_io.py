"""File formats, rendering, and classification descriptions."""
import math

import numpy as np
import pytest

from opnorm import classify
from opnorm.io import (
    REPORT_CSV_HEADER,
    SCAN_CSV_HEADER,
    MatrixParseError,
    describe_class,
    format_complex,
    format_number,
    load_matrix,
    parse_matrix_csv,
    parse_matrix_json,
    report_csv_header,
    scan_csv,
)
from opnorm.strategy import ScanCell


class TestFormatting:
    def test_format_number(self):
        assert format_number(15.0) == "15"
        assert format_number(-0.0) == "0"
        assert format_number(1.0 / 3.0) == "0.333333333333"
        assert format_number(math.sqrt(107.0)) == "10.3440804328"

    def test_format_complex(self):
        assert format_complex(1.5) == "1.5"
        assert format_complex(1.5 + 2.0j) == "1.5+2j"
        assert format_complex(1.0 - 1.0j) == "1-1j"
        assert format_complex(-1.0j) == "0-1j"

    def test_report_header(self):
        assert report_csv_header() == REPORT_CSV_HEADER


class TestCsvParsing:
    def test_round_trip(self, loshu):
        A = parse_matrix_csv("8,1,6\n3,5,7\n4,9,2\n")
        np.testing.assert_array_equal(A, loshu.astype(complex))

    def test_blank_lines_and_spaces(self):
        A = parse_matrix_csv("\n 1 , 2 \n\n 3 , 4 \n\n")
        np.testing.assert_array_equal(A, np.array([[1, 2], [3, 4]], dtype=complex))

    def test_bad_entry_location(self):
        with pytest.raises(MatrixParseError) as exc:
            parse_matrix_csv("1,2\n3,x\n")
        assert exc.value.line == 2 and exc.value.col == 2
        assert str(exc.value) == "parse error at line 2 column 2: bad entry 'x'"

    def test_ragged_rows(self):
        with pytest.raises(MatrixParseError) as exc:
            parse_matrix_csv("1,2\n3\n")
        assert exc.value.line == 2

    def test_not_square(self):
        with pytest.raises(MatrixParseError):
            parse_matrix_csv("1,2\n3,4\n5,6\n")

    def test_empty(self):
        with pytest.raises(MatrixParseError) as exc:
            parse_matrix_csv("  \n\n")
        assert exc.value.line == 1 and exc.value.col == 1


class TestJsonParsing:
    def test_round_trip(self):
        text = '{"n": 2, "entries": [[[1, 0], [0, -1]], [[0.5, 2], [3, 0]]]}'
        A = parse_matrix_json(text)
        np.testing.assert_array_equal(
            A, np.array([[1.0, -1.0j], [0.5 + 2.0j, 3.0]]))

    def test_syntax_error_location(self):
        with pytest.raises(MatrixParseError) as exc:
            parse_matrix_json('{"n": 2,\n "entries": }')
        assert exc.value.line == 2

    def test_missing_keys(self):
        with pytest.raises(MatrixParseError):
            parse_matrix_json('{"n": 2}')
        with pytest.raises(MatrixParseError):
            parse_matrix_json('[1, 2]')

    def test_bad_n(self):
        with pytest.raises(MatrixParseError):
            parse_matrix_json('{"n": 0, "entries": []}')
        with pytest.raises(MatrixParseError):
            parse_matrix_json('{"n": "2", "entries": [[[1,0],[0,0]],[[0,0],[1,0]]]}')

    def test_bad_cells(self):
        with pytest.raises(MatrixParseError):
            parse_matrix_json('{"n": 1, "entries": [[[1]]]}')
        with pytest.raises(MatrixParseError):
            parse_matrix_json('{"n": 1, "entries": [[1]]}')
        with pytest.raises(MatrixParseError):
            parse_matrix_json('{"n": 1, "entries": [[[true, 0]]]}')

    def test_wrong_row_count(self):
        with pytest.raises(MatrixParseError):
            parse_matrix_json('{"n": 2, "entries": [[[1,0],[0,0]]]}')


class TestLoadMatrix:
    def test_csv_file(self, tmp_path, loshu):
        path = tmp_path / "m.csv"
        path.write_text("8,1,6\n3,5,7\n4,9,2\n")
        np.testing.assert_array_equal(load_matrix(str(path)), loshu.astype(complex))

    def test_json_file(self, tmp_path):
        path = tmp_path / "m.json"
        path.write_text('{"n": 1, "entries": [[[2, -3]]]}')
        np.testing.assert_array_equal(load_matrix(str(path)), np.array([[2.0 - 3.0j]]))

    def test_missing_file(self, tmp_path):
        with pytest.raises(MatrixParseError) as exc:
            load_matrix(str(tmp_path / "nope.csv"))
        assert "cannot read" in str(exc.value)


class TestDescribe:
    def test_identity_and_general(self):
        assert describe_class(classify(np.eye(3))) == "identity"
        assert describe_class(classify(np.array([[1.0, 2.0], [3.0, 4.0]]))) == "general"

    def test_magic(self, loshu):
        assert describe_class(classify(loshu)) == "magic-squared alpha=15"

    def test_scaled_all_ones(self):
        assert describe_class(classify(np.full((3, 3), 2.0))) == "scaled-all-ones a=2"

    def test_unitary_permutation(self):
        A = np.array([[0.0, -1.0j], [1.0, 0.0]])
        # row i holds phases[i] in column sigma[i]
        assert describe_class(classify(A)) == "unitary-permutation sigma=(2,1) phases=(0-1j,1)"

    def test_circulant(self):
        from opnorm import circulant_matrix
        A = circulant_matrix([1.0, 2.0, 3.0], [2, 3, 1])
        assert describe_class(classify(A)) == "circulant a=(1,2,3) sigma=(2,3,1)"


class TestScanCsv:
    def test_rendering(self):
        cells = [ScanCell(0.0, 0.5, math.sqrt(107.0), "exact", "column-norm")]
        text = scan_csv(cells)
        lines = text.split("\n")
        assert lines[0] == SCAN_CSV_HEADER == "u,v,value,status,method"
        assert lines[1] == "0,0.5,10.3440804328,exact,column-norm"
        assert text.endswith("\n")
