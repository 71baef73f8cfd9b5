import shutil

import pytest

from vulaug import rules
from vulaug.corpus import oracle_dir
from vulaug.engine import AugmentConfig, CodeSample
from vulaug.rules import RuleId, find_sites, transform
from vulaug.syntax import UNIT, Edit, parse_unit
from vulaug.verify import (CompilerUnavailable, OracleProgram, Status, differential_test,
                           load_oracle_dir, reparse_check, structural_change_check,
                           verify_corpus)

needs_cc = pytest.mark.skipif(not any(shutil.which(c) for c in ("cc", "gcc", "clang")),
                              reason="no C compiler")

SUM_PROG = """#include <stdio.h>

int main(void)
{
    int x, total = 0;

    while (scanf("%d", &x) == 1)
        total += x;
    printf("%d\\n", total);
    return 0;
}
"""


def sum_program():
    return OracleProgram("sum", SUM_PROG, [(f"input_{i}.txt", s) for i, s in
                                           enumerate(["1 2 3", "", "-4 4", "10", "7 7 7 7"], 1)])


@pytest.fixture(scope="module")
def oracle():
    return {p.name: p for p in load_oracle_dir(oracle_dir())}


def test_oracle_corpus_shape(oracle):
    assert len(oracle) >= 30
    assert all(len(p.input_cases) >= 5 for p in oracle.values())


def test_reparse_accepts_rule_output(listing):
    tree = parse_unit(listing.source)
    site = find_sites(tree, [RuleId.R3_AssignSplit])[0][0]
    assert reparse_check(transform(tree, site), listing)


def test_reparse_rejects_corruption(listing):
    broken = listing.source.replace("while (cnt)", "if ( {")
    assert not reparse_check(broken, listing)
    assert not reparse_check("if ( {")


def test_reparse_ignores_untouched_error_regions():
    original = "int f(int a)\n{\n\t@@ odd;\n\ta += 1;\n\treturn a;\n}\n"
    variant = original.replace("a += 1", "a = a + 1")
    assert not reparse_check(variant)
    assert reparse_check(variant, original)


def test_structural_change(listing):
    tree = parse_unit(listing.source)
    r7 = transform(tree, find_sites(tree, [RuleId.R7_WhileToFor])[0][0])
    assert structural_change_check(listing, r7)
    assert not structural_change_check(listing, listing)
    assert not structural_change_check(listing.source, listing.source.replace("\n", "\n  "))


@needs_cc
def test_bubble_sort_cond_negate_equivalent(oracle):
    prog = oracle["bubble_sort"]
    tree = parse_unit(prog.source, UNIT)
    sites, _ = find_sites(tree, [RuleId.R2_CondNegate])
    assert sites
    verdict = differential_test(prog, transform(tree, sites[0]))
    assert verdict.status is Status.equivalent


@needs_cc
def test_mutated_decrement_diverges(oracle):
    prog = oracle["copy_data"]
    mutated = prog.source.replace("cnt -= 1;", "cnt -= 2;")
    assert mutated != prog.source
    verdict = differential_test(prog, mutated, timeout=2.0)
    assert verdict.status is Status.divergent
    assert verdict.evidence


@needs_cc
def test_variant_that_fails_to_compile_is_divergent():
    prog = sum_program()
    verdict = differential_test(prog, SUM_PROG.replace("total += x;", "total += ;"))
    assert verdict.status is Status.divergent and "compile" in verdict.detail


def test_fragment_without_main_is_incomparable(listing):
    prog = OracleProgram("frag", listing.source, [("input_1.txt", "")])
    verdict = differential_test(prog, listing.source)
    assert verdict.status is Status.incomparable
    assert verdict.incomparable_reason == "not_self_contained"


@needs_cc
def test_original_compile_failure_is_incomparable():
    prog = OracleProgram("broken", SUM_PROG.replace("total += x;", "total += ;"),
                         [("input_1.txt", "1")])
    verdict = differential_test(prog, SUM_PROG)
    assert verdict.status is Status.incomparable and verdict.incomparable_reason == "compile_failure"


@needs_cc
def test_timeout_is_incomparable():
    spin = SUM_PROG.replace("printf", "for (;;) {}\n    printf", 1)
    prog = OracleProgram("spin", SUM_PROG, [("input_1.txt", "1")])
    verdict = differential_test(prog, spin, timeout=0.5)
    assert verdict.status is Status.incomparable and verdict.incomparable_reason == "timeout"


@needs_cc
@pytest.mark.parametrize("name", ["copy_data", "bubble_sort", "float_cmp"])
def test_verdict_symmetry(oracle, name):
    prog = oracle[name]
    tree = parse_unit(prog.source, UNIT)
    sites, _ = find_sites(tree)
    variant = transform(tree, sites[-1])
    mutated = prog.source.replace("printf(\"", "printf(\"#", 1)
    for other in (variant, mutated):
        forward = differential_test(prog, other).status
        backward = differential_test(OracleProgram(name, other, prog.input_cases), prog.source).status
        assert forward is backward


@needs_cc
def test_planted_fault_is_reported_once(monkeypatch):
    def buggy(tree, site, ctx):
        node = tree.nodes[site.anchor]
        lhs = tree.text(site.bindings["target"])
        rhs = tree.text(site.bindings["value"])
        return [Edit.replace(node.start, node.end, f"{lhs} = {lhs} {node.op[:-1]} {rhs} + 1")]

    monkeypatch.setitem(rules.REWRITERS, RuleId.R3_AssignSplit, buggy)
    cfg = AugmentConfig(enabled_rules={RuleId.R3_AssignSplit, RuleId.R5_CmpMirror}, max_chain_depth=1)
    report = verify_corpus([sum_program()], cfg)
    assert report.variants == 1 and len(report.divergent) == 1
    prog, vid, lineage, verdict = report.divergent[0]
    assert (prog, vid) == ("sum", "sum#v0")
    start = SUM_PROG.index("total += x")
    assert lineage == (("R3_AssignSplit", (start, start + len("total += x"))),)
    assert "DIVERGENT sum sum#v0 [R3_AssignSplit@" in report.render()
    assert not report.ok


def test_empty_corpus():
    report = verify_corpus([], AugmentConfig())
    assert (report.programs, report.variants, report.divergent) == (0, 0, [])
    assert report.ok


def test_missing_compiler(listing):
    prog = sum_program()
    with pytest.raises(CompilerUnavailable):
        differential_test(prog, SUM_PROG, compiler_cmd="no-such-cc-xyz -o {out} {src}")
    with pytest.raises(CompilerUnavailable):
        verify_corpus([prog], AugmentConfig(), compiler_cmd="no-such-cc-xyz {src}")


def test_oracle_loader_requires_single_source(tmp_path):
    (tmp_path / "a.c").write_text("int main(void){return 0;}")
    (tmp_path / "b.c").write_text("int main(void){return 0;}")
    with pytest.raises(ValueError):
        OracleProgram.load(tmp_path)


def test_sample_objects_accepted(listing):
    variant = CodeSample("v", listing.source.replace("cnt -= 1", "cnt = cnt - 1"), 1)
    assert reparse_check(variant, listing)
    assert structural_change_check(listing, variant)
