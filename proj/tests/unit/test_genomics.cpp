#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "matchtime/error.hpp"
#include "matchtime/genomics.hpp"
#include "matchtime/matching.hpp"

using namespace matchtime;

namespace {

std::vector<FastaRecord> parse(const std::string& text, const std::string& source = {}) {
  std::istringstream in(text);
  return parse_fasta(in, source);
}

FastaRecord record(std::string header, std::string sequence, std::string source = {}) {
  return {std::move(header), std::move(sequence), std::move(source), {}};
}

std::string random_bases(std::mt19937_64& gen, std::size_t n, const char* alphabet = "ACGT",
                         std::size_t k = 4) {
  std::string s(n, 'A');
  for (auto& c : s) c = alphabet[gen() % k];
  return s;
}

}  // namespace

TEST(ParseFasta, Examples) {
  const auto recs = parse(">seq1 some description\nACGT\nAC\n>seq2\nGGGG\n");
  ASSERT_EQ(recs.size(), 2u);
  EXPECT_EQ(recs[0].header, "seq1 some description");
  EXPECT_EQ(recs[0].id(), "seq1");
  EXPECT_EQ(recs[0].sequence, "ACGTAC");
  EXPECT_EQ(recs[1].sequence, "GGGG");
}

TEST(ParseFasta, CrlfLowercaseAndBlankLines) {
  const auto recs = parse(">a\r\nacgt\r\n\r\nnnAC \r\n>b\r\ntt\r\n", "x.fa");
  ASSERT_EQ(recs.size(), 2u);
  EXPECT_EQ(recs[0].header, "a");
  EXPECT_EQ(recs[0].sequence, "ACGTNNAC");
  EXPECT_EQ(recs[0].source_file, "x.fa");
  EXPECT_EQ(recs[1].sequence, "TT");
}

TEST(ParseFasta, Errors) {
  try {
    parse("ACGT\n>a\nAC\n");
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 1u);
  }
  try {
    parse(">a\nAC\n>b\n\n>c\nGG\n");
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 3u);
  }
  EXPECT_THROW(parse(">only\n"), ParseError);
  EXPECT_TRUE(parse("").empty());
}

TEST(ParseFasta, RoundTrip) {
  std::mt19937_64 gen(4);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<FastaRecord> recs;
    const std::size_t n = 1 + gen() % 5;
    for (std::size_t i = 0; i < n; ++i) {
      recs.push_back(record("r" + std::to_string(i) + " desc " + std::to_string(gen() % 100),
                            random_bases(gen, 1 + gen() % 300, "ACGTN", 5), "in.fa"));
    }
    std::ostringstream out;
    write_fasta(out, recs, 1 + gen() % 80);
    EXPECT_EQ(parse(out.str(), "in.fa"), recs);
  }
}

TEST(AmbiguityPolicy, Names) {
  EXPECT_EQ(parse_ambiguity_policy("reject"), AmbiguityPolicy::reject_record);
  EXPECT_EQ(parse_ambiguity_policy("split-at-ambiguity"), AmbiguityPolicy::split_at_ambiguity);
  EXPECT_EQ(parse_ambiguity_policy("skip"), AmbiguityPolicy::skip_symbol);
  EXPECT_THROW(parse_ambiguity_policy("drop"), InvalidInput);
  for (auto p : {AmbiguityPolicy::reject_record, AmbiguityPolicy::split_at_ambiguity,
                 AmbiguityPolicy::skip_symbol}) {
    EXPECT_EQ(parse_ambiguity_policy(to_string(p)), p);
  }
}

TEST(Filter, Examples) {
  std::string with_n(1000, 'A');
  with_n[500] = 'N';
  const std::vector<FastaRecord> recs{record("short", std::string(999, 'A')),
                                      record("ambiguous", with_n),
                                      record("ok", std::string(1500, 'C'))};
  const auto result = to_coding_sequences(recs, FilterPolicy{});
  ASSERT_EQ(result.accepted.size(), 1u);
  EXPECT_EQ(result.accepted[0].id, "ok");
  EXPECT_EQ(result.accepted[0].length(), 1500u);
  ASSERT_EQ(result.rejections.size(), 2u);
  EXPECT_EQ(result.rejections[0].id, "short");
  EXPECT_EQ(result.rejections[0].reason, "too-short (999 bp < 1000)");
  EXPECT_EQ(result.rejections[1].id, "ambiguous");
  EXPECT_EQ(result.rejections[1].reason, "ambiguous-base ('N' at position 500)");

  std::ostringstream log;
  write_rejection_log(log, result.rejections);
  EXPECT_EQ(log.str(),
            "short\ttoo-short (999 bp < 1000)\nambiguous\tambiguous-base ('N' at position 500)\n");
}

TEST(Filter, ExactThresholdIsAccepted) {
  const std::vector<FastaRecord> recs{record("edge", std::string(1000, 'G'))};
  EXPECT_EQ(to_coding_sequences(recs, FilterPolicy{}).accepted.size(), 1u);
}

TEST(Filter, Encoding) {
  const std::vector<FastaRecord> recs{record("x", "ACGTTGCA")};
  const auto result = to_coding_sequences(recs, FilterPolicy{2, AmbiguityPolicy::reject_record});
  ASSERT_EQ(result.accepted.size(), 1u);
  const auto s = result.accepted[0].symbols.symbols();
  EXPECT_EQ(std::vector<Symbol>(s.begin(), s.end()),
            (std::vector<Symbol>{0, 1, 2, 3, 3, 2, 1, 0}));
}

TEST(Filter, SplitAndSkipPolicies) {
  const std::vector<FastaRecord> recs{record("a", "ACGTNNACGTACNG"), record("b", "NNNN")};
  const auto split =
      to_coding_sequences(recs, FilterPolicy{4, AmbiguityPolicy::split_at_ambiguity});
  ASSERT_EQ(split.accepted.size(), 2u);
  EXPECT_EQ(split.accepted[0].id, "a/1");
  EXPECT_EQ(split.accepted[0].length(), 4u);
  EXPECT_EQ(split.accepted[1].id, "a/2");
  EXPECT_EQ(split.accepted[1].length(), 6u);
  ASSERT_EQ(split.rejections.size(), 2u);
  EXPECT_EQ(split.rejections[0].id, "a/3");
  EXPECT_EQ(split.rejections[1].id, "b");
  EXPECT_EQ(split.rejections[1].reason, "no-canonical-bases");

  const auto skip = to_coding_sequences(recs, FilterPolicy{4, AmbiguityPolicy::skip_symbol});
  ASSERT_EQ(skip.accepted.size(), 1u);
  EXPECT_EQ(skip.accepted[0].length(), 11u);
  ASSERT_EQ(skip.rejections.size(), 1u);
  EXPECT_EQ(skip.rejections[0].id, "b");
}

TEST(Filter, ThresholdNeverBelowTwo) {
  const std::vector<FastaRecord> recs{record("one", "A"), record("two", "AC")};
  const auto result = to_coding_sequences(recs, FilterPolicy{0, AmbiguityPolicy::reject_record});
  ASSERT_EQ(result.accepted.size(), 1u);
  EXPECT_EQ(result.accepted[0].id, "two");
}

TEST(FilterProperty, SoundAndComplete) {
  std::mt19937_64 gen(77);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<FastaRecord> recs;
    const std::size_t n = 1 + gen() % 20;
    for (std::size_t i = 0; i < n; ++i) {
      std::string seq = random_bases(gen, 1 + gen() % 200);
      if (gen() % 3 == 0) seq[gen() % seq.size()] = 'N';
      recs.push_back(record("r" + std::to_string(i), seq));
    }
    const FilterPolicy policy{1 + gen() % 150, AmbiguityPolicy::reject_record};
    const auto result = to_coding_sequences(recs, policy);
    EXPECT_EQ(result.accepted.size() + result.rejections.size(), recs.size());
    for (const auto& c : result.accepted) {
      EXPECT_GE(c.length(), std::max<std::size_t>(policy.t_min, 2));
      for (Symbol s : c.symbols.symbols()) EXPECT_LT(s, 4);
    }
  }
}

TEST(ChromosomeResolver, HeaderPatterns) {
  const ChromosomeResolver r;
  EXPECT_EQ(r.resolve(record("NM_1 chromosome 7 cds", "A")), "7");
  EXPECT_EQ(r.resolve(record("gene chr:x", "A")), "X");
  EXPECT_EQ(r.resolve(record("gene chr12_random", "A")), "12");
  EXPECT_EQ(r.resolve(record("gene Chromosome=MT", "A")), "MT");
  EXPECT_EQ(r.resolve(record("gene chr123", "A", "/data/genes.fa")), "genes");
  EXPECT_EQ(r.resolve(record("gene", "A")), "unknown");
}

TEST(ChromosomeResolver, RefSeqAccessions) {
  const ChromosomeResolver r;
  EXPECT_EQ(r.resolve(record("lcl|NC_000001.11_cds_NP_1 [gene=X]", "A")), "1");
  EXPECT_EQ(r.resolve(record("lcl|NC_000023.11_cds", "A")), "X");
  EXPECT_EQ(r.resolve(record("lcl|NC_000024.10_cds", "A")), "Y");
  EXPECT_EQ(r.resolve(record("lcl|NC_012920.1_cds", "A")), "MT");
}

TEST(ChromosomeResolver, MappingTakesPrecedence) {
  ChromosomeResolver r;
  std::istringstream map("# comment\n/data/a.fa\t21\nb.fa 22 # trailing\n");
  r.load_mapping(map);
  EXPECT_EQ(r.resolve(record("chr3 gene", "A", "/data/a.fa")), "21");
  EXPECT_EQ(r.resolve(record("chr3 gene", "A", "/other/b.fa")), "22");
  EXPECT_EQ(r.resolve(record("chr3 gene", "A", "/other/c.fa")), "3");
  std::istringstream bad("only-one-field\n");
  EXPECT_THROW(r.load_mapping(bad), ParseError);
}

TEST(ChromosomeResolver, CustomPattern) {
  ChromosomeResolver r;
  r.set_header_pattern(R"(\[loc=(\w+)\])");
  EXPECT_EQ(r.resolve(record("g [loc=q7]", "A")), "Q7");
  EXPECT_THROW(r.set_header_pattern("("), InvalidInput);
}

TEST(ChromosomeLabel, NaturalOrder) {
  std::vector<std::string> labels{"10", "X", "2", "1", "MT", "Y", "22", "chr10", "chr2"};
  std::sort(labels.begin(), labels.end(),
            [](const std::string& a, const std::string& b) { return chromosome_label_less(a, b); });
  EXPECT_EQ(labels, (std::vector<std::string>{"1", "2", "10", "22", "MT", "X", "Y", "chr2",
                                              "chr10"}));
  EXPECT_FALSE(chromosome_label_less("5", "5"));
}

TEST(Grouping, GroupsAndPools) {
  std::mt19937_64 gen(12);
  std::vector<FastaRecord> recs;
  const char* chrom[] = {"chr2", "chr10", "chr2", "chr1", "chr10"};
  for (int i = 0; i < 5; ++i) {
    recs.push_back(record(std::string("g") + std::to_string(i) + " " + chrom[i],
                          random_bases(gen, 50 + 10 * i)));
  }
  ChromosomeResolver().assign(recs);
  const auto filtered = to_coding_sequences(recs, FilterPolicy{10, AmbiguityPolicy::reject_record});
  const auto grouped = group_and_sample(filtered.accepted, 3);

  ASSERT_EQ(grouped.groups.size(), 3u);
  EXPECT_EQ(grouped.groups[0].label, "1");
  EXPECT_EQ(grouped.groups[1].label, "2");
  EXPECT_EQ(grouped.groups[2].label, "10");
  EXPECT_EQ(grouped.groups[1].count(), 2u);
  EXPECT_DOUBLE_EQ(grouped.groups[1].mean_length, (50.0 + 70.0) / 2.0);
  EXPECT_EQ(grouped.pooled.label, "pooled");
  EXPECT_EQ(grouped.pooled.count(), 5u);

  // Samples match the naive oracle applied record by record.
  const auto& second = grouped.groups[1].samples.samples();
  for (std::size_t j = 0; j < 2; ++j) {
    const auto& x = filtered.accepted[j == 0 ? 0 : 2].symbols.symbols();
    EXPECT_EQ(second[j].ell_plus, naive_matching_time_forward(x));
    EXPECT_EQ(second[j].ell_minus, naive_matching_time_reversed(x));
    EXPECT_EQ(second[j].t, x.size());
  }

  const auto again = group_and_sample(filtered.accepted, 1);
  for (std::size_t g = 0; g < 3; ++g) {
    const auto a = again.groups[g].samples.samples();
    const auto b = grouped.groups[g].samples.samples();
    EXPECT_TRUE(std::equal(a.begin(), a.end(), b.begin(), b.end()));
  }
  EXPECT_THROW(group_and_sample(std::span<const CodingSequence>{}), InvalidInput);
}
