import csv
import json

import pytest

from vulaug.cli import (EXIT_DATA, EXIT_DIVERGENT, EXIT_ENVIRONMENT, EXIT_INSUFFICIENT, EXIT_OK,
                        EXIT_USAGE, main, manifest_path)
from vulaug.corpus import listing1
from vulaug.dataset import DatasetFile, read_canonical, write_canonical
from vulaug.engine import GENERATED, CodeSample

FUNCS = [
    "int f(int a){ if (a > 1) return 1; else return 0; }",
    "int g(int a){ a += 2; return a; }",
    "void h(int n){ while (n) { n--; } }",
]


def tabular(path, rows):
    with open(path, "w", newline="") as fh:
        w = csv.writer(fh)
        w.writerow(["code", "target", "date"])
        w.writerows(rows)
    return str(path)


def manifest(path):
    return json.loads(manifest_path(path).read_text())


def run_import(tmp_path, rows):
    out = tmp_path / "ds.jsonl"
    code = main(["import", tabular(tmp_path / "in.csv", rows), "-o", str(out),
                 "--col-code", "code", "--col-label", "target", "--col-date", "date"])
    return code, out


def test_import_three_rows(tmp_path):
    code, out = run_import(tmp_path, [(FUNCS[0], 1, "2016"), (FUNCS[1], 0, "2018"),
                                      (FUNCS[2], 0, "2019")])
    assert code == EXIT_OK
    ds = read_canonical(out)
    assert [r.label for r in ds] == [1, 0, 0]
    m = manifest(out)
    assert m["command"] == "import" and len(m["outputs"][str(out)]) == 64


def test_import_duplicate(tmp_path, capsys):
    code, out = run_import(tmp_path, [(FUNCS[0], 1, ""), (FUNCS[0].replace(" ", "  "), 1, ""),
                                      (FUNCS[1], 0, "")])
    assert code == EXIT_OK and len(read_canonical(out)) == 2
    assert "1 duplicate removed" in capsys.readouterr().err


def test_import_unparseable(tmp_path):
    code, out = run_import(tmp_path, [(FUNCS[0], 1, ""), ("int f( {", 0, ""), (FUNCS[1], 0, "")])
    assert code == EXIT_OK and len(read_canonical(out)) == 2
    assert manifest(out)["counts"]["parse_failures"] == 1


def test_import_missing_column_is_data_error(tmp_path):
    code = main(["import", tabular(tmp_path / "in.csv", [(FUNCS[0], 1, "")]), "-o",
                 str(tmp_path / "o.jsonl"), "--col-code", "func", "--col-label", "target"])
    assert code == EXIT_DATA


def corpus_file(tmp_path, n=100):
    recs = [CodeSample(f"s{i:03d}", f"int f{i}(int a){{ return a + {i}; }}", i % 2,
                       published=f"{2014 + i % 7}-01-01") for i in range(n)]
    path = tmp_path / "all.jsonl"
    write_canonical(recs, path)
    return path


def test_split_ratios(tmp_path):
    src = corpus_file(tmp_path)
    out = tmp_path / "a"
    assert main(["split", str(src), "--out-dir", str(out), "--ratios", "8:1:1", "--seed", "7"]) == 0
    sizes = [len(read_canonical(out / f"all.{p}.jsonl")) for p in ("train", "valid", "test")]
    assert sizes == [80, 10, 10]


def test_split_deterministic(tmp_path):
    src = corpus_file(tmp_path)
    for d in ("a", "b"):
        assert main(["split", str(src), "--out-dir", str(tmp_path / d), "--seed", "7"]) == 0
    for p in ("train", "valid", "test"):
        assert (tmp_path / "a" / f"all.{p}.jsonl").read_bytes() == \
               (tmp_path / "b" / f"all.{p}.jsonl").read_bytes()


def test_split_cutoff_year(tmp_path):
    src = corpus_file(tmp_path)
    assert main(["split", str(src), "--out-dir", str(tmp_path), "--cutoff-year", "2017"]) == 0
    train = read_canonical(tmp_path / "all.train.jsonl")
    valid = read_canonical(tmp_path / "all.valid.jsonl")
    assert all(r.year < 2017 for r in train) and all(r.year >= 2017 for r in valid)


def test_bad_ratios_is_usage_error(tmp_path):
    assert main(["split", str(corpus_file(tmp_path)), "--out-dir", str(tmp_path),
                 "--ratios", "8:1"]) == EXIT_USAGE


@pytest.fixture
def listing_file(tmp_path):
    path = tmp_path / "listing.jsonl"
    write_canonical([listing1()], path)
    return path


def test_augment_single_rule(listing_file, tmp_path):
    out = tmp_path / "v.jsonl"
    assert main(["augment", str(listing_file), "-o", str(out), "--rules", "R3"]) == 0
    recs = read_canonical(out).records
    assert [r.provenance for r in recs] == ["original", GENERATED]
    assert "cnt = cnt - 1;" in recs[1].source
    assert recs[1].source.replace("cnt = cnt - 1", "cnt -= 1") == recs[0].source
    m = manifest(out)
    assert m["stats"]["applied"]["R3_AssignSplit"] == 1
    assert m["throughput_variants_per_s"] >= 0


def test_augment_depth_superset(listing_file, tmp_path):
    shallow, deep = tmp_path / "d1.jsonl", tmp_path / "d3.jsonl"
    assert main(["augment", str(listing_file), "-o", str(shallow), "--depth", "1"]) == 0
    assert main(["augment", str(listing_file), "-o", str(deep), "--depth", "3"]) == 0
    a = {r.source for r in read_canonical(shallow)}
    b = {r.source for r in read_canonical(deep)}
    assert a < b


def test_augment_workers_identical(tmp_path, corpus):
    src = tmp_path / "c.jsonl"
    write_canonical(corpus[:30], src)
    outs = []
    for w in ("1", "8"):
        out = tmp_path / f"w{w}.jsonl"
        assert main(["augment", str(src), "-o", str(out), "--workers", w, "--depth", "2"]) == 0
        outs.append(out)
    assert outs[0].read_bytes() == outs[1].read_bytes()
    assert manifest(outs[0])["stats"] == manifest(outs[1])["stats"]


def test_augment_bad_depth(listing_file, tmp_path):
    assert main(["augment", str(listing_file), "-o", str(tmp_path / "x"), "--depth", "0"]) == EXIT_USAGE
    assert main(["augment", str(listing_file), "-o", str(tmp_path / "x"), "--rules", "R9"]) == EXIT_USAGE


def balance_inputs(tmp_path, n_vul, n_non, per_root):
    originals = [CodeSample(f"v{i}", "x", 1) for i in range(n_vul)] + \
                [CodeSample(f"n{i}", "x", 0) for i in range(n_non)]
    variants = [CodeSample(f"{o.id}#v{k}", "y", o.label, provenance=GENERATED,
                           lineage=(("R2_CondNegate", (0, 1)),), parent_id=o.id)
                for o in originals for k in range(per_root)]
    train, var = tmp_path / "train.jsonl", tmp_path / "var.jsonl"
    write_canonical(originals, train)
    write_canonical(variants, var)
    return str(train), str(var)


def test_balance_factor_one(tmp_path):
    train, var = balance_inputs(tmp_path, 4, 10, 2)
    out = tmp_path / "b.jsonl"
    assert main(["balance", train, "--variants", var, "-o", str(out), "--factor", "1"]) == 0
    recs = read_canonical(out).records
    assert len(recs) == 8 and all(r.provenance == "original" for r in recs)


def test_balance_insufficient_exit_code(tmp_path):
    train, var = balance_inputs(tmp_path, 4, 40, 1)
    out = tmp_path / "b.jsonl"
    code = main(["balance", train, "--variants", var, "-o", str(out), "--mode", "augm-vul"])
    assert code == EXIT_INSUFFICIENT
    m = manifest(out)
    assert m["insufficient_variants"] is True and m["warnings"]


def test_balance_leakage_is_data_error(tmp_path):
    train, var = balance_inputs(tmp_path, 4, 4, 1)
    stray = DatasetFile([CodeSample("t9#v0", "y", 1, provenance=GENERATED,
                                    lineage=(("R2_CondNegate", (0, 1)),), parent_id="t9")])
    write_canonical(stray, tmp_path / "stray.jsonl")
    code = main(["balance", train, "--variants", str(tmp_path / "stray.jsonl"), "-o",
                 str(tmp_path / "b.jsonl")])
    assert code == EXIT_DATA


def test_verify_missing_compiler(tmp_path):
    assert main(["verify", "--compiler-cmd", "no-such-cc-xyz -o {out} {src}"]) == EXIT_ENVIRONMENT


@pytest.mark.slow
def test_verify_planted_fault(tmp_path, monkeypatch, capsys):
    from vulaug import rules
    from vulaug.rules import RuleId

    def buggy(tree, site, ctx):
        from vulaug.syntax import Edit
        node = tree.nodes[site.anchor]
        lhs = tree.text(site.bindings["target"])
        return [Edit.replace(node.start, node.end, f"{lhs} = {lhs} - 1")]

    monkeypatch.setitem(rules.REWRITERS, RuleId.R3_AssignSplit, buggy)
    prog = tmp_path / "oracle" / "sum"
    prog.mkdir(parents=True)
    (prog / "main.c").write_text("#include <stdio.h>\nint main(void)\n{\n\tint x, t = 0;\n"
                                 "\twhile (scanf(\"%d\", &x) == 1)\n\t\tt += x;\n"
                                 "\tprintf(\"%d\\n\", t);\n\treturn 0;\n}\n")
    for i in range(1, 6):
        (prog / f"input_{i}.txt").write_text(" ".join(str(k * i) for k in range(4)))
    code = main(["verify", "--oracle-dir", str(tmp_path / "oracle"), "--rules", "R3", "--depth", "1"])
    assert code == EXIT_DIVERGENT
    assert "DIVERGENT sum" in capsys.readouterr().out


def test_stats_from_manifest_and_file(listing_file, tmp_path, capsys):
    out = tmp_path / "v.jsonl"
    assert main(["augment", str(listing_file), "-o", str(out), "--rules", "R3"]) == 0
    capsys.readouterr()
    assert main(["stats", str(manifest_path(out))]) == 0
    text = capsys.readouterr().out
    assert "share.R3_AssignSplit=100.00" in text
    assert main(["stats", str(out)]) == 0
    assert "share.R3_AssignSplit=100.00" in capsys.readouterr().out


def test_stats_empty(tmp_path, capsys):
    path = tmp_path / "e.jsonl"
    write_canonical([], path)
    assert main(["stats", str(path)]) == 0
    text = capsys.readouterr().out
    assert "samples_out=0" in text and "share.R2_CondNegate=0.00" in text


def test_stats_full_corpus_shares(tmp_path, corpus, capsys):
    src, out = tmp_path / "c.jsonl", tmp_path / "v.jsonl"
    write_canonical(corpus, src)
    assert main(["augment", str(src), "-o", str(out)]) == 0
    capsys.readouterr()
    main(["stats", str(manifest_path(out))])
    shares = [float(l.split("=")[1]) for l in capsys.readouterr().out.splitlines()
              if l.startswith("share.")]
    assert shares == sorted(shares, reverse=True) and abs(sum(shares) - 100) <= 0.1


def test_missing_input_is_data_error(tmp_path):
    assert main(["stats", str(tmp_path / "nope.jsonl")]) == EXIT_DATA


def test_version_and_usage(capsys):
    assert main(["--version"]) == EXIT_OK
    assert main([]) == EXIT_USAGE
