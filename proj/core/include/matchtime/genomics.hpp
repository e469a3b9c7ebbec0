#pragma once

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <map>
#include <optional>
#include <regex>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "matchtime/estimators.hpp"
#include "matchtime/sequence.hpp"

namespace matchtime {

struct FastaRecord {
  std::string header;    // header line without the leading '>'
  std::string sequence;  // upper-cased, whitespace removed
  std::string source_file;
  std::string chromosome;

  // First whitespace-delimited token of the header.
  std::string id() const;

  friend bool operator==(const FastaRecord&, const FastaRecord&) = default;
};

// Streaming FASTA reader. Accepts LF and CRLF and arbitrary line wrapping;
// blank lines are ignored. Throws ParseError on sequence data before the
// first header or on a header with no sequence.
std::vector<FastaRecord> parse_fasta(std::istream& in, const std::string& source_file = {});
std::vector<FastaRecord> read_fasta_file(const std::filesystem::path& path);

void write_fasta(std::ostream& out, std::span<const FastaRecord> records, std::size_t width = 60);

// A=0, C=1, G=2, T=3.
Alphabet dna_alphabet();

enum class AmbiguityPolicy {
  reject_record,       // drop any record containing a non-ACGT character
  split_at_ambiguity,  // keep each maximal ACGT run as its own sequence
  skip_symbol,         // delete non-ACGT characters and keep the rest
};

AmbiguityPolicy parse_ambiguity_policy(std::string_view name);
std::string_view to_string(AmbiguityPolicy policy);

struct FilterPolicy {
  std::size_t t_min = 1000;
  AmbiguityPolicy ambiguity = AmbiguityPolicy::reject_record;
};

struct CodingSequence {
  SymbolSequence symbols;
  std::string id;
  std::string chromosome;

  std::size_t length() const noexcept { return symbols.size(); }
};

struct Rejection {
  std::string id;
  std::string reason;
};

// Every unit inspected (a record, or a fragment under split_at_ambiguity)
// ends up in exactly one of the two lists, in input order.
struct FilterResult {
  std::vector<CodingSequence> accepted;
  std::vector<Rejection> rejections;
};

FilterResult to_coding_sequences(std::span<const FastaRecord> records, const FilterPolicy& policy);

// One "<id>\t<reason>" line per rejection.
void write_rejection_log(std::ostream& out, std::span<const Rejection> rejections);

// Assigns a chromosome label to each record. Rules, first match wins:
//   1. the record's source file appears in the file mapping;
//   2. the header regex matches (label = first capture group);
//   3. the header carries a RefSeq chromosome accession (NC_000001 .. NC_000024, NC_012920);
//   4. the stem of the source file name.
class ChromosomeResolver {
public:
  ChromosomeResolver();

  // Mapping file: "<path or file name><TAB or spaces><label>" per line,
  // '#' starts a comment.
  void load_mapping(std::istream& in);
  void load_mapping_file(const std::filesystem::path& path);
  void map_file(const std::string& path, const std::string& label);
  void set_header_pattern(const std::string& pattern);

  std::string resolve(const FastaRecord& record) const;
  void assign(std::vector<FastaRecord>& records) const;

private:
  std::map<std::string, std::string> by_file_;
  std::regex header_pattern_;
};

// Natural ordering of labels: "2" < "10" and "chr2" < "chr10".
bool chromosome_label_less(std::string_view a, std::string_view b);

struct ChromosomeGroup {
  std::string label;
  SampleSet samples;
  double mean_length = 0.0;

  std::size_t count() const noexcept { return samples.size(); }
};

// Groups sorted by label; within a group samples keep input order.
struct GroupedSamples {
  std::vector<ChromosomeGroup> groups;
  ChromosomeGroup pooled;
};

GroupedSamples group_and_sample(std::span<const CodingSequence> sequences, std::size_t workers = 1);

}  // namespace matchtime
