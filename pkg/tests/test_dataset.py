import json
from collections import Counter

import pytest
from hypothesis import given, strategies as st

from vulaug.dataset import (BalanceSpec, DatasetFile, LeakageError, MalformedRow, MissingColumn,
                            MissingDate, SchemaMismatch, SplitSpec, build_training_set,
                            dedup_and_filter, import_tabular, read_canonical, split,
                            write_canonical)
from vulaug.engine import GENERATED, CodeSample
from vulaug.scan import fingerprint
from vulaug.syntax import parse_unit

FUNCS = [
    "int f(int a){ return a + 1; }",
    "int g(int a){ if (a > 0) return 1; else return 0; }",
    "void h(int *p){ *p += 2; }",
]


def write_csv(path, rows, header=("func", "vul")):
    import csv
    with open(path, "w", newline="", encoding="latin-1") as fh:
        w = csv.writer(fh)
        w.writerow(header)
        w.writerows(rows)
    return path


def test_import_three_rows(tmp_path):
    path = write_csv(tmp_path / "d.csv", [(FUNCS[0], 1), (FUNCS[1], 0), (FUNCS[2], 0)])
    ds = import_tabular(path, {"code": "func", "label": "vul"})
    assert [r.label for r in ds] == [1, 0, 0]
    assert (len(ds.by_label(1)), len(ds.by_label(0))) == (1, 2)
    assert [r.id for r in ds] == ["row0", "row1", "row2"]
    assert all(r.provenance == "original" for r in ds)


def test_import_keeps_duplicates(tmp_path):
    path = write_csv(tmp_path / "d.csv", [(FUNCS[0], 1), (FUNCS[0], 1)])
    assert len(import_tabular(path, {"code": "func", "label": "vul"})) == 2


def test_import_tsv_with_metadata_and_empty_code(tmp_path):
    path = tmp_path / "d.tsv"
    path.write_text("id\tcode\ttarget\tcwe\tdate\n"
                    "a1\tint f(void){return 0;}\t1\tCWE-787\t2016-03-01\n"
                    "a2\t \t0\t\t2018-01-01\n", encoding="latin-1")
    ds = import_tabular(path, {"code": "code", "label": "target", "id": "id", "cwe": "cwe",
                               "date": "date"})
    assert len(ds) == 1 and ds.counts == {"rows": 2, "empty_code": 1}
    r = ds.records[0]
    assert (r.id, r.cwe, r.published, r.year) == ("a1", "CWE-787", "2016-03-01", 2016)


def test_import_missing_column(tmp_path):
    path = write_csv(tmp_path / "d.csv", [(FUNCS[0], 1)])
    with pytest.raises(MissingColumn):
        import_tabular(path, {"code": "func", "label": "target"})


@pytest.mark.parametrize("rows,bad", [
    ([(FUNCS[0], 1), (FUNCS[1], "maybe")], 1),
    ([(FUNCS[0], 1, "extra")], 0),
])
def test_import_malformed_row(tmp_path, rows, bad):
    path = write_csv(tmp_path / "d.csv", rows)
    with pytest.raises(MalformedRow) as err:
        import_tabular(path, {"code": "func", "label": "vul"})
    assert err.value.index == bad


def test_dedup_whitespace_variants():
    ds = DatasetFile([CodeSample("a", "int f(int a){ return a+1; }", 1),
                      CodeSample("b", "int f(int a)\n{\n\treturn a + 1;  // same\n}\n", 1)])
    out = dedup_and_filter(ds)
    assert [r.id for r in out] == ["a"] and out.counts["duplicates"] == 1


def test_dedup_drops_unparseable():
    out = dedup_and_filter(DatasetFile([CodeSample("x", "int f( {", 0),
                                        CodeSample("y", FUNCS[0], 0)]))
    assert [r.id for r in out] == ["y"] and out.counts["parse_failures"] == 1


@given(st.lists(st.sampled_from(FUNCS + ["int f( {", "garbage ;", FUNCS[0].replace(" ", "  ")]),
                max_size=12))
def test_dedup_postcondition(sources):
    ds = DatasetFile([CodeSample(f"s{i}", s, i % 2) for i, s in enumerate(sources)])
    out = dedup_and_filter(ds)
    fps = [fingerprint(r.source) for r in out]
    assert len(fps) == len(set(fps))
    for r in out:
        parse_unit(r.source)
    assert len(out) + out.counts["duplicates"] + out.counts["parse_failures"] == len(ds)


def samples(n, years=None):
    return DatasetFile([CodeSample(f"s{i:04d}", f"int f{i}(void){{return {i};}}", i % 2,
                                   published=f"{years[i % len(years)]}-06-01" if years else None)
                        for i in range(n)])


@pytest.mark.parametrize("n,ratios,sizes", [
    (10, (8, 1, 1), (8, 1, 1)),
    (100, (8, 1, 1), (80, 10, 10)),
    (7, (8, 1, 1), (5, 1, 1)),
    (20, (2, 1, 1), (10, 5, 5)),
])
def test_split_sizes(n, ratios, sizes):
    parts = split(samples(n), SplitSpec(ratios=ratios, seed=3))
    assert tuple(len(p) for p in parts) == sizes


@given(st.integers(0, 300), st.integers(0, 2**32))
def test_split_is_a_deterministic_partition(n, seed):
    ds = samples(n)
    a = split(ds, SplitSpec(seed=seed))
    b = split(ds, SplitSpec(seed=seed))
    assert [[r.id for r in p] for p in a] == [[r.id for r in p] for p in b]
    ids = [r.id for p in a for r in p]
    assert sorted(ids) == sorted(r.id for r in ds)


def test_date_cutoff_split():
    ds = samples(60, years=list(range(2015, 2021)))
    train, valid, test = split(ds, SplitSpec("date_cutoff", cutoff_year=2017, seed=1))
    assert all(r.year < 2017 for r in train)
    assert all(r.year >= 2017 for r in valid.records + test.records)
    assert len(train) == 20 and abs(len(valid) - len(test)) <= 1
    assert len(train) + len(valid) + len(test) == 60


def test_date_cutoff_needs_dates():
    with pytest.raises(MissingDate):
        split(samples(4), SplitSpec("date_cutoff", cutoff_year=2017))


def make_train(n_vul, n_non, per_root):
    originals = [CodeSample(f"v{i}", "x", 1) for i in range(n_vul)] + \
                [CodeSample(f"n{i}", "x", 0) for i in range(n_non)]
    variants = [CodeSample(f"{o.id}#v{k}", "y", o.label, provenance=GENERATED,
                           lineage=(("R2_CondNegate", (0, 1)),), parent_id=o.id)
                for o in originals for k in range(per_root)]
    return DatasetFile(originals), DatasetFile(variants)


def test_balance_factor_one_is_originals_only():
    train, variants = make_train(5, 20, 4)
    res = build_training_set(train, variants, BalanceSpec(expansion_factor=1))
    assert not res.insufficient
    assert res.dataset.counts == {"vulnerable": 5, "non_vulnerable": 5, "generated": 0}


def test_balance_augm_vul():
    train, variants = make_train(10, 100, 5)
    res = build_training_set(train, variants, BalanceSpec("augm_vul", 3, seed=9))
    c = res.dataset.counts
    assert (c["vulnerable"], c["non_vulnerable"], c["generated"]) == (30, 30, 20)
    picked = Counter(r.root_id for r in res.dataset if r.provenance == GENERATED)
    assert sorted(picked.values()) == [2] * 10  # round robin over roots
    assert all(r.label == 1 for r in res.dataset if r.provenance == GENERATED)


def test_balance_augm_both():
    train, variants = make_train(10, 100, 5)
    res = build_training_set(train, variants, BalanceSpec("augm_both", 3, seed=9))
    c = res.dataset.counts
    assert (c["vulnerable"], c["non_vulnerable"], c["generated"]) == (30, 30, 40)


def test_balance_insufficient_variants():
    train, variants = make_train(10, 100, 1)
    res = build_training_set(train, variants, BalanceSpec("augm_vul", 3))
    assert res.insufficient and res.warnings
    c = res.dataset.counts
    assert c["vulnerable"] == c["non_vulnerable"] == 20


def test_balance_is_seeded():
    train, variants = make_train(10, 100, 5)
    a = build_training_set(train, variants, BalanceSpec("augm_both", 3, seed=4))
    b = build_training_set(train, variants, BalanceSpec("augm_both", 3, seed=4))
    assert [r.id for r in a.dataset] == [r.id for r in b.dataset]


def test_leakage_rejected():
    train, variants = make_train(4, 4, 2)
    held_out = CodeSample("t0", "x", 1)
    leaked = CodeSample("t0#v0", "y", 1, provenance=GENERATED,
                        lineage=(("R3_AssignSplit", (0, 1)),), parent_id="t0")
    with pytest.raises(LeakageError):
        build_training_set(train, DatasetFile(variants.records + [leaked]), BalanceSpec())
    assert held_out.id not in {r.id for r in train}


def test_round_trip_empty(tmp_path):
    path = tmp_path / "e.jsonl"
    write_canonical(DatasetFile(), path)
    lines = path.read_text().splitlines()
    assert len(lines) == 1 and json.loads(lines[0])["schema_version"] == 1
    assert read_canonical(path).records == []


record_strategy = st.builds(
    CodeSample,
    id=st.text(min_size=1, max_size=8),
    source=st.text(alphabet=st.characters(max_codepoint=255), max_size=40),
    label=st.integers(0, 1),
    cwe=st.none() | st.just("CWE-787"),
    published=st.none() | st.just("2019-02-03"),
)


@given(st.lists(record_strategy, max_size=20, unique_by=lambda r: r.id))
def test_round_trip_property(tmp_path_factory, records):
    path = tmp_path_factory.mktemp("rt") / "d.jsonl"
    write_canonical(DatasetFile(records), path)
    assert read_canonical(path).records == records


def test_round_trip_thousand_with_newlines(tmp_path, corpus):
    recs = []
    for i in range(1000):
        base = corpus[i % len(corpus)]
        recs.append(CodeSample(f"r{i}", base.source + "/* \x00\r\n\t\xe9 */\n", i % 2,
                               cwe=base.cwe, project=base.project, published=base.published,
                               provenance=GENERATED if i % 3 else "original",
                               lineage=(("R5_CmpMirror", (i, i + 5)),) if i % 3 else (),
                               parent_id=base.id if i % 3 else None))
    path = tmp_path / "k.jsonl"
    write_canonical(recs, path)
    assert sum(1 for _ in open(path)) == 1001
    assert read_canonical(path).records == recs


def test_schema_mismatch(tmp_path):
    path = tmp_path / "s.jsonl"
    path.write_text('{"schema_version": 99, "records": 0}\n')
    with pytest.raises(SchemaMismatch):
        read_canonical(path)


def test_duplicate_ids_refused(tmp_path):
    with pytest.raises(ValueError):
        write_canonical([CodeSample("a", "x", 1), CodeSample("a", "y", 0)], tmp_path / "d.jsonl")
