"""Built-in synthetic dataset: nine families, sixteen diseases.

The families are hand-shaped to exercise every feature end to end:

* ``27251`` — a suicide victim whose two children also died by suicide,
  all three diagnosed with depression (two parent-child lineage chains).
* ``68939`` — two suicide siblings in the same generation (no chain).
* ``149``  — ten generations deep; the generation-9 victim ``P7`` carries
  five diagnoses while generations 7-9 are otherwise entirely alive.
* ``3105`` — two founder couples joined by marriage (virtual-root layout).
* ``4218`` — a single-parent unit, an unknown-sex person, and a suicide
  without any diagnosis (no radial chart).
* ``5530`` — one wide generation with six siblings.
* ``6611`` — a remarriage: one man in two couple units.
* ``7842`` — a three-generation suicide chain sharing depression.
* ``8903`` — a small nuclear family.

All ids are synthetic.  The dataset parses without warnings, so
``parse_dataset(make_nine_families_csv())`` equals ``nine_families_dataset()``.
"""

from __future__ import annotations

from .core import DiagnosisRecord, Person, Sex, VitalStatus, build_graph
from .ingest import Dataset

DISEASE_NAMES: tuple[str, ...] = (
    "Depression",
    "Anxiety",
    "BipolarDisorder",
    "Schizophrenia",
    "PTSD",
    "OCD",
    "ADHD",
    "SubstanceAbuse",
    "AlcoholDependence",
    "EatingDisorder",
    "PersonalityDisorder",
    "Insomnia",
    "ChronicPain",
    "Epilepsy",
    "Migraine",
    "Dementia",
)

_SEX = {"M": Sex.MALE, "F": Sex.FEMALE, "U": Sex.UNKNOWN}
_VITAL = {
    "alive": VitalStatus.ALIVE,
    "deceased": VitalStatus.DECEASED,
    "suicide": VitalStatus.SUICIDE,
}

# (person_id, family_id, sex, mother_id, father_id, age, vital,
#  {disease name: age at diagnosis})
_ROWS: tuple[tuple, ...] = (
    # --- family 149: ten generations, one heavily diagnosed gen-9 victim.
    ("P1", "149", "M", "", "", 88, "deceased", {}),
    ("P2", "149", "F", "", "", 84, "deceased", {}),
    ("P3", "149", "M", "P2", "P1", 90, "deceased", {}),
    ("P4", "149", "F", "", "", 82, "deceased", {}),
    ("P5", "149", "M", "P4", "P3", 77, "deceased", {}),
    ("P6", "149", "F", "", "", 85, "deceased", {}),
    ("P8", "149", "M", "P6", "P5", 79, "deceased", {}),
    ("P9", "149", "F", "", "", 83, "deceased", {}),
    ("P10", "149", "M", "P9", "P8", 81, "deceased", {}),
    ("P11", "149", "F", "", "", 76, "deceased", {}),
    ("P12", "149", "M", "P11", "P10", 74, "deceased", {}),
    ("P13", "149", "F", "", "", 88, "deceased", {}),
    ("P14", "149", "M", "P13", "P12", 92, "deceased", {}),
    ("P15", "149", "F", "", "", 87, "deceased", {}),
    ("P16", "149", "M", "P15", "P14", 80, "alive", {}),
    ("P17", "149", "F", "", "", 78, "alive", {}),
    ("P18", "149", "M", "P17", "P16", 55, "alive", {}),
    ("P19", "149", "F", "", "", 54, "alive", {}),
    (
        "P7",
        "149",
        "M",
        "P19",
        "P18",
        34,
        "suicide",
        {
            "Depression": 28,
            "Anxiety": 30,
            "PTSD": 31,
            "Insomnia": 33,
            "SubstanceAbuse": 34,
        },
    ),
    ("P20", "149", "F", "P19", "P18", 31, "alive", {}),
    ("P21", "149", "M", "P19", "P18", 29, "alive", {}),
    # --- family 27251: suicide father, two suicide children, all depressed.
    ("27251_01", "27251", "M", "", "", 70, "suicide", {"Depression": 45, "Insomnia": 50}),
    ("27251_02", "27251", "F", "", "", 92, "alive", {"Anxiety": 60}),
    ("27251_03", "27251", "M", "27251_02", "27251_01", 38, "suicide", {"Depression": 30}),
    (
        "27251_04",
        "27251",
        "F",
        "27251_02",
        "27251_01",
        41,
        "suicide",
        {"Depression": 33, "Anxiety": 29},
    ),
    ("27251_05", "27251", "F", "", "", 39, "alive", {}),
    ("27251_06", "27251", "F", "27251_05", "27251_03", 12, "alive", {}),
    ("27251_07", "27251", "M", "", "", 45, "alive", {}),
    ("27251_08", "27251", "M", "27251_04", "27251_07", 15, "alive", {"ADHD": 9}),
    # --- family 3105: two founder couples joined by one marriage.
    ("3105_A1", "3105", "M", "", "", 88, "deceased", {}),
    ("3105_A2", "3105", "F", "", "", 84, "deceased", {}),
    ("3105_A3", "3105", "M", "3105_A2", "3105_A1", 58, "alive", {}),
    ("3105_A4", "3105", "F", "3105_A2", "3105_A1", 61, "alive", {}),
    ("3105_B1", "3105", "M", "", "", 90, "deceased", {}),
    ("3105_B2", "3105", "F", "", "", 85, "alive", {}),
    ("3105_B3", "3105", "F", "3105_B2", "3105_B1", 57, "alive", {}),
    ("3105_C1", "3105", "F", "3105_B3", "3105_A3", 24, "alive", {"Anxiety": 19}),
    ("3105_C2", "3105", "M", "3105_B3", "3105_A3", 20, "alive", {"ADHD": 9}),
    # --- family 4218: single mother, unknown-sex child, chartless suicide.
    ("4218_01", "4218", "F", "", "", 66, "deceased", {}),
    ("4218_02", "4218", "U", "4218_01", "", 44, "alive", {"OCD": 23}),
    ("4218_03", "4218", "F", "4218_01", "", 41, "alive", {}),
    ("4218_04", "4218", "M", "", "", 50, "suicide", {}),
    ("4218_05", "4218", "M", "4218_03", "4218_04", 19, "alive", {"Epilepsy": 7}),
    ("4218_06", "4218", "F", "4218_03", "4218_04", 16, "alive", {}),
    # --- family 5530: six siblings in one generation.
    ("5530_01", "5530", "M", "", "", 95, "deceased", {"Dementia": 88}),
    ("5530_02", "5530", "F", "", "", 91, "deceased", {}),
    ("5530_03", "5530", "F", "5530_02", "5530_01", 65, "alive", {"BipolarDisorder": 40}),
    (
        "5530_04",
        "5530",
        "M",
        "5530_02",
        "5530_01",
        70,
        "deceased",
        {"AlcoholDependence": 35, "ChronicPain": 55},
    ),
    ("5530_05", "5530", "F", "5530_02", "5530_01", 62, "alive", {}),
    ("5530_06", "5530", "M", "5530_02", "5530_01", 60, "alive", {"Schizophrenia": 25}),
    ("5530_07", "5530", "F", "5530_02", "5530_01", 58, "alive", {"EatingDisorder": 20}),
    ("5530_08", "5530", "M", "5530_02", "5530_01", 55, "alive", {}),
    ("5530_09", "5530", "M", "", "", 67, "alive", {}),
    ("5530_10", "5530", "F", "5530_03", "5530_09", 30, "alive", {"Migraine": 18}),
    ("5530_11", "5530", "F", "", "", 44, "alive", {}),
    ("5530_12", "5530", "M", "5530_11", "5530_06", 21, "alive", {}),
    # --- family 6611: remarriage (6611_03 appears in two couple units).
    ("6611_01", "6611", "M", "", "", 80, "deceased", {}),
    ("6611_02", "6611", "F", "", "", 75, "deceased", {}),
    ("6611_03", "6611", "M", "6611_02", "6611_01", 52, "alive", {}),
    ("6611_04", "6611", "F", "", "", 50, "alive", {}),
    ("6611_05", "6611", "F", "6611_04", "6611_03", 25, "alive", {"PersonalityDisorder": 22}),
    ("6611_06", "6611", "F", "", "", 47, "alive", {}),
    ("6611_07", "6611", "M", "6611_06", "6611_03", 20, "alive", {}),
    ("6611_08", "6611", "M", "6611_02", "6611_01", 30, "suicide", {"Depression": 24}),
    # --- family 68939: two suicide siblings, non-suicide parents (no chain).
    ("68939_01", "68939", "M", "", "", 77, "deceased", {}),
    ("68939_02", "68939", "F", "", "", 74, "alive", {}),
    ("68939_03", "68939", "F", "68939_02", "68939_01", 29, "suicide", {"Depression": 25}),
    (
        "68939_04",
        "68939",
        "M",
        "68939_02",
        "68939_01",
        33,
        "suicide",
        {"Depression": 28, "SubstanceAbuse": 30},
    ),
    ("68939_05", "68939", "F", "68939_02", "68939_01", 36, "alive", {"Migraine": 22}),
    ("68939_06", "68939", "M", "", "", 38, "alive", {}),
    ("68939_07", "68939", "F", "68939_03", "68939_06", 10, "alive", {}),
    # --- family 7842: a three-generation suicide chain sharing depression.
    ("7842_01", "7842", "M", "", "", 66, "suicide", {"Depression": 40}),
    ("7842_02", "7842", "F", "", "", 89, "alive", {}),
    (
        "7842_03",
        "7842",
        "M",
        "7842_02",
        "7842_01",
        44,
        "suicide",
        {"Depression": 30, "AlcoholDependence": 38},
    ),
    ("7842_04", "7842", "F", "", "", 70, "alive", {}),
    ("7842_05", "7842", "F", "7842_04", "7842_03", 27, "suicide", {"Depression": 22}),
    ("7842_06", "7842", "M", "7842_04", "7842_03", 41, "alive", {}),
    # --- family 8903: small nuclear family.
    ("8903_01", "8903", "M", "", "", 68, "alive", {"Migraine": 25}),
    ("8903_02", "8903", "F", "", "", 66, "alive", {"Anxiety": 45, "Insomnia": 50}),
    ("8903_03", "8903", "M", "8903_02", "8903_01", 40, "alive", {}),
    ("8903_04", "8903", "F", "8903_02", "8903_01", 38, "alive", {"PTSD": 29}),
)


def _person(row: tuple) -> Person:
    pid, fam, sex, mother, father, age, vital, dx = row
    diagnoses = tuple(
        DiagnosisRecord(disease_index=DISEASE_NAMES.index(name), age_at_diagnosis=at)
        for name, at in sorted(dx.items(), key=lambda kv: DISEASE_NAMES.index(kv[0]))
    )
    return Person(
        person_id=pid,
        family_id=fam,
        sex=_SEX[sex],
        mother_id=mother or None,
        father_id=father or None,
        age_years=age,
        vital_status=_VITAL[vital],
        diagnoses=diagnoses,
    )


def nine_families_dataset() -> Dataset:
    """The built-in dataset as parsed objects."""
    by_family: dict[str, list[Person]] = {}
    for row in _ROWS:
        p = _person(row)
        by_family.setdefault(p.family_id, []).append(p)
    families = {fid: build_graph(ps) for fid, ps in sorted(by_family.items())}
    return Dataset(families=families, disease_names=DISEASE_NAMES, warnings=[])


def make_nine_families_csv() -> str:
    """The built-in dataset in canonical CSV form."""
    from .ingest import serialize_dataset

    return serialize_dataset(nine_families_dataset())
