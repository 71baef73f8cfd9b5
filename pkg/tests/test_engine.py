import pytest
from hypothesis import given, settings, strategies as st

from vulaug.engine import (GENERATED, ORIGINAL, AugmentConfig, CodeSample, RuleStats,
                           generate_variants, replay_lineage, report_stats, run_corpus)
from vulaug.rules import ALL_RULES, RuleId
from vulaug.scan import fingerprint
from vulaug.verify import reparse_check, structural_change_check

LEVEL1_R7 = "\tfor (; cnt; cnt -= 1) { dst[i] = src[i]; i++; }\n"
LEVEL1_R3 = "\twhile (cnt) { dst[i] = src[i]; i++; cnt = cnt - 1; }\n"
COMPOSED = "\tfor (; cnt; cnt = cnt - 1) { dst[i] = src[i]; i++; }\n"


def body_line(src):
    return src.splitlines(keepends=True)[4].replace("    ", "\t")


def test_listing_level_one(listing):
    variants, stats = generate_variants(listing, AugmentConfig(max_chain_depth=1))
    assert [body_line(v.source) for v in variants] == [LEVEL1_R7, LEVEL1_R3]
    assert [v.lineage[0][0] for v in variants] == ["R7_WhileToFor", "R3_AssignSplit"]
    assert stats.samples_out == 2 and stats.multi_transform_count == 0


def test_listing_composed_variant(listing):
    variants, _ = generate_variants(listing, AugmentConfig(max_chain_depth=2))
    composed = [v for v in variants if body_line(v.source) == COMPOSED]
    assert len(composed) == 1
    assert [r for r, _ in composed[0].lineage] == ["R7_WhileToFor", "R3_AssignSplit"]


def test_zero_site_sample():
    s = CodeSample("z", "int f(void){return 0;}", 0)
    variants, stats = generate_variants(s, AugmentConfig())
    assert variants == [] and stats.samples_out == 0 and stats.parseable_samples == 1


def test_unparseable_sample_counted():
    variants, stats = generate_variants(CodeSample("bad", "int f( {", 1), AugmentConfig())
    assert variants == [] and stats.parse_failures == 1 and stats.parseable_samples == 0


def test_variant_metadata(listing):
    variants, _ = generate_variants(listing, AugmentConfig())
    for k, v in enumerate(variants):
        assert v.id == f"listing1#v{k}"
        assert v.provenance == GENERATED and v.parent_id == "listing1" and v.root_id == "listing1"
        assert v.label == listing.label and v.lineage


def test_cap_applies_in_enumeration_order(listing):
    full, _ = generate_variants(listing, AugmentConfig())
    capped, stats = generate_variants(listing, AugmentConfig(max_variants_per_sample=3))
    assert [v.source for v in capped] == [v.source for v in full[:3]]
    assert stats.samples_out == 3


def test_config_validation():
    with pytest.raises(ValueError):
        AugmentConfig(max_chain_depth=0)
    with pytest.raises(ValueError):
        AugmentConfig(enabled_rules=frozenset())
    assert AugmentConfig(enabled_rules={"R2", "r5"}).enabled_rules == {
        RuleId.R2_CondNegate, RuleId.R5_CmpMirror}


def test_run_corpus_additivity():
    a = CodeSample("a", "void f(int n, int x){ while (n) { x += 2; n -= 1; } }", 1)
    b = CodeSample("b", "int f(int x, int y){ x *= 2; if (x > y) return 1; else return 0; }", 0)
    cfg = AugmentConfig(max_chain_depth=1)
    va, _ = generate_variants(a, cfg)
    vb, _ = generate_variants(b, cfg)
    assert (len(va), len(vb)) == (3, 3)
    out, stats = run_corpus([a, b], cfg)
    assert len(out) == 8 and stats.samples_out == 6 and stats.samples_in == 2
    assert [r.id for r in out] == ["a"] + [v.id for v in va] + ["b"] + [v.id for v in vb]


def test_run_corpus_workers_agree(corpus):
    cfg = AugmentConfig(max_chain_depth=2)
    subset = corpus[:60]
    one, s1 = run_corpus(subset, cfg, workers=1)
    many, s8 = run_corpus(subset, cfg, workers=8)
    assert sorted((r.id, r.source) for r in one) == sorted((r.id, r.source) for r in many)
    assert s1.to_dict() == s8.to_dict()


def test_global_dedup_removes_cross_sample_twins():
    src = "void f(int n){ n += 1; }"
    twins = [CodeSample("a", src, 1), CodeSample("b", src, 1)]
    cfg = AugmentConfig(global_dedup=True)
    out, stats = run_corpus(twins, cfg)
    assert [r.id for r in out] == ["a", "a#v0", "b"]
    assert stats.samples_out == 1 and sum(stats.applied.values()) == 1


def test_stats_counts_match_lineage(corpus):
    out, stats = run_corpus(corpus[:40], AugmentConfig())
    variants = [r for r in out if r.provenance == GENERATED]
    assert sum(stats.applied.values()) == sum(len(v.lineage) for v in variants)
    assert stats.multi_transform_count == sum(1 for v in variants if len(v.lineage) >= 2)


def test_dedup_soundness(corpus):
    for sample in corpus[:50]:
        variants, _ = generate_variants(sample, AugmentConfig())
        fps = [fingerprint(sample.source)] + [fingerprint(v.source) for v in variants]
        assert len(fps) == len(set(fps)), sample.id


def test_lineage_replay(corpus):
    for sample in corpus[::7]:
        variants, _ = generate_variants(sample, AugmentConfig())
        for v in variants:
            assert replay_lineage(sample, v.lineage) == v.source, (sample.id, v.lineage)


def test_variants_reparse_and_change_structure(corpus):
    for sample in corpus[::5]:
        for v in generate_variants(sample, AugmentConfig())[0]:
            assert reparse_check(v, sample)
            assert structural_change_check(sample, v)


@settings(max_examples=25)
@given(st.sets(st.sampled_from(ALL_RULES), min_size=1), st.sets(st.sampled_from(ALL_RULES)),
       st.integers(1, 3))
def test_more_rules_never_fewer_variants(corpus, base, extra, depth):
    small = AugmentConfig(enabled_rules=frozenset(base), max_chain_depth=depth)
    large = AugmentConfig(enabled_rules=frozenset(base | extra), max_chain_depth=depth)
    for sample in corpus[::23]:
        a = {v.source for v in generate_variants(sample, small)[0]}
        b = {v.source for v in generate_variants(sample, large)[0]}
        assert len(b) >= len(a)


@given(st.integers(0, 1))
def test_label_conservation(corpus, label):
    samples = [CodeSample(s.id, s.source, label) for s in corpus[:15]]
    out, _ = run_corpus(samples, AugmentConfig(max_chain_depth=2))
    assert all(r.label == label for r in out)
    assert all((r.provenance == ORIGINAL) == (r.lineage == ()) for r in out)


def test_report_single_rule_share():
    stats = RuleStats(samples_in=1, samples_out=4, parseable_samples=1)
    stats.applied["R2_CondNegate"] = 4
    text = report_stats(stats)
    assert "share.R2_CondNegate=100.00" in text
    assert "share.R5_CmpMirror=0.00" in text


def test_report_empty_stats():
    text = report_stats(RuleStats())
    assert "samples_out=0" in text and "multi_transform_pct=0.00" in text
    assert all(line.endswith("=0.00") for line in text.splitlines() if line.startswith("share."))


def test_report_shares_descending_and_sum(corpus):
    _, stats = run_corpus(corpus[:50], AugmentConfig())
    shares = [float(line.split("=")[1]) for line in report_stats(stats).splitlines()
              if line.startswith("share.")]
    assert shares == sorted(shares, reverse=True)
    assert abs(sum(shares) - 100.0) <= 0.1


def test_stats_dict_round_trip(corpus):
    _, stats = run_corpus(corpus[:10], AugmentConfig())
    assert RuleStats.from_dict(stats.to_dict()).to_dict() == stats.to_dict()
