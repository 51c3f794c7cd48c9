import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from pedvis.core import DiagnosisRecord
from pedvis.errors import SchemaError
from pedvis.ingest import (
    Dataset,
    ValidationReport,
    load_dataset,
    parse_dataset,
    serialize_dataset,
)

from generators import random_dataset_text

HEADER16 = (
    "PersonID,FamilyID,Sex,MotherID,FatherID,Age,VitalStatus,"
    + ",".join(f"Dx{i}" for i in range(16))
)


def make_csv(rows, header=HEADER16):
    return header + "\n" + "".join(r + "\n" for r in rows)


def row(pid, fam="F", sex="M", mother="", father="", age=40, vital="alive", dx=None):
    cells = [pid, fam, sex, mother, father, str(age), vital] + [""] * 16
    for index, at in (dx or {}).items():
        cells[7 + index] = str(at)
    return ",".join(cells)


class TestParseBasics:
    def test_header_only_gives_empty_dataset_and_warning(self):
        ds = parse_dataset(HEADER16 + "\n")
        assert isinstance(ds, Dataset)
        assert ds.families == {}
        assert any(w.code == "NO_DATA" for w in ds.warnings)

    def test_three_row_fixture(self):
        text = make_csv(
            [
                row("F1"),
                row("M1", sex="F"),
                row(
                    "C1",
                    mother="M1",
                    father="F1",
                    age=40,
                    vital="suicide",
                    dx={0: 34},
                ),
            ]
        )
        ds = parse_dataset(text)
        assert isinstance(ds, Dataset)
        assert list(ds.families) == ["F"]
        c1 = ds.families["F"].persons["C1"]
        assert c1.diagnoses == (DiagnosisRecord(disease_index=0, age_at_diagnosis=34),)

    def test_missing_fixed_columns_is_schema_error(self):
        with pytest.raises(SchemaError):
            parse_dataset("PersonID,FamilyID,Sex\nx,y,M\n")

    def test_zero_disease_columns_is_schema_error(self):
        with pytest.raises(SchemaError):
            parse_dataset("PersonID,FamilyID,Sex,MotherID,FatherID,Age,VitalStatus\n")

    def test_duplicate_disease_column_is_schema_error(self):
        bad = "PersonID,FamilyID,Sex,MotherID,FatherID,Age,VitalStatus,A,A\n"
        with pytest.raises(SchemaError):
            parse_dataset(bad)

    def test_crlf_accepted(self):
        text = make_csv([row("F1")]).replace("\n", "\r\n")
        ds = parse_dataset(text)
        assert isinstance(ds, Dataset)
        assert "F1" in ds.families["F"].persons

    def test_non_16_disease_count_warns(self):
        header = "PersonID,FamilyID,Sex,MotherID,FatherID,Age,VitalStatus,OnlyOne"
        ds = parse_dataset(header + "\n" + "A,F,M,,,40,alive,\n")
        assert isinstance(ds, Dataset)
        assert any(w.code == "DISEASE_COUNT" and w.row == 1 for w in ds.warnings)


class TestRowErrors:
    def errors_of(self, text):
        report = parse_dataset(text)
        assert isinstance(report, ValidationReport)
        return report.errors

    def test_bad_enum_vital_status(self):
        errors = self.errors_of(make_csv([row("A", vital="zombie")]))
        assert [(e.row, e.code) for e in errors] == [(2, "BAD_ENUM")]

    def test_bad_enum_sex(self):
        errors = self.errors_of(make_csv([row("A", sex="X")]))
        assert [(e.row, e.code) for e in errors] == [(2, "BAD_ENUM")]

    def test_bad_shape(self):
        errors = self.errors_of(HEADER16 + "\nA,F,M\n")
        assert [(e.row, e.code) for e in errors] == [(2, "BAD_SHAPE")]

    def test_bad_id(self):
        errors = self.errors_of(make_csv([row("A+B")]))
        assert [(e.row, e.code) for e in errors] == [(2, "BAD_ID")]

    def test_negative_age(self):
        errors = self.errors_of(make_csv([row("A", age=-3)]))
        assert [(e.row, e.code) for e in errors] == [(2, "BAD_AGE")]

    def test_bad_diagnosis_cell(self):
        bad = row("A").rsplit(",", 1)[0] + ",x"
        errors = self.errors_of(make_csv([bad]))
        assert [(e.row, e.code) for e in errors] == [(2, "BAD_DIAGNOSIS")]

    def test_diagnosis_exceeding_age(self):
        errors = self.errors_of(make_csv([row("A", age=30, dx={2: 35})]))
        assert [(e.row, e.code) for e in errors] == [(2, "DIAGNOSIS_EXCEEDS_AGE")]

    def test_duplicate_person(self):
        errors = self.errors_of(make_csv([row("A"), row("A")]))
        assert [(e.row, e.code) for e in errors] == [(3, "DUPLICATE_PERSON")]

    def test_dangling_parent(self):
        errors = self.errors_of(make_csv([row("A", mother="GHOST")]))
        assert [(e.row, e.code) for e in errors] == [(2, "DANGLING_PARENT")]

    def test_parent_in_other_family_is_dangling(self):
        errors = self.errors_of(
            make_csv([row("A", fam="F1"), row("B", fam="F2", mother="A", sex="F")])
        )
        assert [(e.row, e.code) for e in errors] == [(3, "DANGLING_PARENT")]

    def test_cycle(self):
        text = make_csv(
            [row("A", mother="B"), row("B", sex="F", mother="A")]
        )
        errors = self.errors_of(text)
        assert {e.code for e in errors} == {"CYCLE"}
        assert {e.row for e in errors} == {2, 3}

    def test_error_isolation_other_family_still_counted(self):
        text = make_csv([row("A", vital="zombie", fam="BAD"), row("B", fam="GOOD")])
        _, report = load_dataset(text)
        assert [(e.row, e.code) for e in report.errors] == [(2, "BAD_ENUM")]
        assert report.counts["families"] == 1
        assert report.counts["persons"] == 1

    def test_errors_empty_iff_parse_succeeded(self):
        good, good_report = load_dataset(make_csv([row("A")]))
        bad, bad_report = load_dataset(make_csv([row("A", age=-1)]))
        assert good is not None and good_report.ok
        assert bad is None and not bad_report.ok


class TestSerialize:
    def test_empty_dataset_serializes_to_header_only(self):
        ds = parse_dataset(HEADER16 + "\n")
        assert serialize_dataset(ds) == HEADER16 + "\n"

    def test_row_order_family_then_person(self):
        text = make_csv(
            [
                row("z9", fam="B"),
                row("a1", fam="B"),
                row("m5", fam="A"),
            ]
        )
        out = serialize_dataset(parse_dataset(text))
        ids = [line.split(",")[0] for line in out.splitlines()[1:]]
        assert ids == ["m5", "a1", "z9"]

    def test_output_uses_lf_and_no_quotes(self, nine):
        out = serialize_dataset(nine)
        assert "\r" not in out
        assert '"' not in out
        assert out.endswith("\n")

    def test_round_trip_nine_families(self, nine, nine_csv):
        assert parse_dataset(nine_csv) == nine
        assert serialize_dataset(parse_dataset(nine_csv)) == nine_csv


class TestProperties:
    @settings(max_examples=50, deadline=None)
    @given(seed=st.integers(0, 2**32 - 1))
    def test_round_trip_random_datasets(self, seed):
        text = random_dataset_text(random.Random(seed))
        ds = parse_dataset(text)
        assert isinstance(ds, Dataset)
        again = parse_dataset(serialize_dataset(ds))
        assert again == ds

    @settings(max_examples=30, deadline=None)
    @given(seed=st.integers(0, 2**32 - 1))
    def test_row_permutation_invariance(self, seed):
        rng = random.Random(seed)
        text = random_dataset_text(rng)
        header, *rows = text.rstrip("\n").split("\n")
        rng.shuffle(rows)
        shuffled = header + "\n" + "".join(r + "\n" for r in rows)
        assert parse_dataset(shuffled) == parse_dataset(text)

    @settings(max_examples=30, deadline=None)
    @given(seed=st.integers(0, 2**32 - 1))
    def test_diagnosis_bound_enforced_after_parse(self, seed):
        ds = parse_dataset(random_dataset_text(random.Random(seed)))
        assert isinstance(ds, Dataset)
        for graph in ds.families.values():
            for p in graph.persons.values():
                for d in p.diagnoses:
                    assert d.age_at_diagnosis <= p.age_years
                    assert d.disease_index < ds.disease_count
