"""Trace CSV format: header, precision, round trip."""

import pytest

from rachjam import (
    TRACE_CSV_HEADER,
    TraceCsvError,
    TraceRecord,
    read_trace_csv,
    run_scenario,
    write_trace_csv,
)

from conftest import make_scenario


def sample_records():
    return [
        TraceRecord(ro=0, measured_db=51.0, threshold_db=17.4, attacker_tx=True,
                    ue_attempt=True, ue_power_db=56.4, detected=True),
        TraceRecord(ro=1, measured_db=17.4, threshold_db=25.464, attacker_tx=False,
                    ue_attempt=False, ue_power_db=None, detected=False),
    ]


def test_header_and_formatting(tmp_path):
    path = tmp_path / "trace.csv"
    write_trace_csv(path, sample_records(), [17.4, 25.464])
    lines = path.read_text(encoding="utf-8").splitlines()
    assert lines[0] == ",".join(TRACE_CSV_HEADER)
    assert lines[1] == "0,51.000000,17.400000,1,1,56.400000,1,17.400000"
    assert lines[2] == "1,17.400000,25.464000,0,0,,0,25.464000"


def test_round_trip(tmp_path):
    path = tmp_path / "trace.csv"
    records = sample_records()
    write_trace_csv(path, records, [17.4, 25.464])
    parsed, analytic = read_trace_csv(path)
    assert parsed == records
    assert analytic == [17.4, 25.464]


def test_round_trip_of_simulated_trace(tmp_path):
    s = make_scenario(period=3, ramp_step_db=1.0, horizon=32)
    records, _ = run_scenario(s)
    analytic = [r.threshold_db for r in records]
    path = tmp_path / "trace.csv"
    write_trace_csv(path, records, analytic)
    parsed, _ = read_trace_csv(path)
    assert len(parsed) == len(records)
    for a, b in zip(parsed, records):
        # exact at the written 6-decimal precision
        assert a.ro == b.ro
        assert a.measured_db == pytest.approx(b.measured_db, abs=5e-7)
        assert a.threshold_db == pytest.approx(b.threshold_db, abs=5e-7)
        assert (a.attacker_tx, a.ue_attempt, a.detected) == (b.attacker_tx, b.ue_attempt, b.detected)


def test_length_mismatch_rejected(tmp_path):
    with pytest.raises(ValueError, match="equal length"):
        write_trace_csv(tmp_path / "t.csv", sample_records(), [17.4])


def test_wrong_header_rejected(tmp_path):
    path = tmp_path / "t.csv"
    path.write_text("ro,thresh\n0,1\n", encoding="utf-8")
    with pytest.raises(TraceCsvError, match="header"):
        read_trace_csv(path)


def test_short_row_rejected(tmp_path):
    path = tmp_path / "t.csv"
    path.write_text(",".join(TRACE_CSV_HEADER) + "\n0,1.0,2.0\n", encoding="utf-8")
    with pytest.raises(TraceCsvError, match="fields"):
        read_trace_csv(path)


def test_bad_number_rejected(tmp_path):
    path = tmp_path / "t.csv"
    path.write_text(
        ",".join(TRACE_CSV_HEADER) + "\n0,abc,17.400000,0,0,,0,17.400000\n", encoding="utf-8"
    )
    with pytest.raises(TraceCsvError, match="measured_db"):
        read_trace_csv(path)


def test_bad_flag_rejected(tmp_path):
    path = tmp_path / "t.csv"
    path.write_text(
        ",".join(TRACE_CSV_HEADER) + "\n0,17.400000,17.400000,2,0,,0,17.400000\n", encoding="utf-8"
    )
    with pytest.raises(TraceCsvError, match="attacker_tx"):
        read_trace_csv(path)


def test_empty_and_headerless_files_rejected(tmp_path):
    path = tmp_path / "t.csv"
    path.write_text("", encoding="utf-8")
    with pytest.raises(TraceCsvError, match="empty"):
        read_trace_csv(path)
    path.write_text(",".join(TRACE_CSV_HEADER) + "\n", encoding="utf-8")
    with pytest.raises(TraceCsvError, match="no data rows"):
        read_trace_csv(path)


def test_missing_file(tmp_path):
    with pytest.raises(TraceCsvError, match="cannot read"):
        read_trace_csv(tmp_path / "absent.csv")
