#include "matchtime/genomics.hpp"

#include <algorithm>
#include <array>
#include <iterator>
#include <cctype>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "matchtime/error.hpp"
#include "matchtime/matching.hpp"
#include "matchtime/parallel.hpp"

namespace matchtime {

namespace {

constexpr std::array<std::int16_t, 256> make_base_codes() {
  std::array<std::int16_t, 256> codes{};
  for (auto& c : codes) {
    c = -1;
  }
  codes['A'] = 0;
  codes['C'] = 1;
  codes['G'] = 2;
  codes['T'] = 3;
  return codes;
}

constexpr auto kBaseCode = make_base_codes();

bool is_blank(std::string_view line) {
  return std::all_of(line.begin(), line.end(),
                     [](unsigned char c) { return std::isspace(c) != 0; });
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
    s.remove_prefix(1);
  }
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
    s.remove_suffix(1);
  }
  return s;
}

std::vector<Symbol> encode(std::string_view bases) {
  std::vector<Symbol> out(bases.size());
  for (std::size_t i = 0; i < bases.size(); ++i) {
    out[i] = static_cast<Symbol>(kBaseCode[static_cast<unsigned char>(bases[i])]);
  }
  return out;
}

void admit(std::string_view bases, std::string id, const FastaRecord& record,
           const FilterPolicy& policy, FilterResult& result) {
  // A matching sample needs at least two symbols whatever the threshold.
  const std::size_t t_min = std::max<std::size_t>(policy.t_min, 2);
  if (bases.size() < t_min) {
    result.rejections.push_back({std::move(id), "too-short (" + std::to_string(bases.size()) +
                                                    " bp < " + std::to_string(t_min) + ")"});
    return;
  }
  result.accepted.push_back(
      {SymbolSequence(encode(bases), dna_alphabet()), std::move(id), record.chromosome});
}

}  // namespace

std::string FastaRecord::id() const {
  const std::string_view h = trim(header);
  const auto end = std::find_if(h.begin(), h.end(),
                                [](unsigned char c) { return std::isspace(c) != 0; });
  return std::string(h.begin(), end);
}

std::vector<FastaRecord> parse_fasta(std::istream& in, const std::string& source_file) {
  std::vector<FastaRecord> records;
  std::string line;
  std::size_t line_no = 0;
  std::size_t header_line = 0;
  auto close_record = [&] {
    if (!records.empty() && records.back().sequence.empty()) {
      throw ParseError(header_line, "record '" + records.back().id() + "' has no sequence");
    }
  };

  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') {
      line.pop_back();
    }
    if (!line.empty() && line.front() == '>') {
      close_record();
      header_line = line_no;
      records.push_back({std::string(trim(std::string_view(line).substr(1))), {}, source_file, {}});
      continue;
    }
    if (is_blank(line)) {
      continue;
    }
    if (records.empty()) {
      throw ParseError(line_no, "sequence data before the first '>' header");
    }
    auto& seq = records.back().sequence;
    for (unsigned char c : line) {
      if (!std::isspace(c)) {
        seq.push_back(static_cast<char>(std::toupper(c)));
      }
    }
  }
  close_record();
  return records;
}

std::vector<FastaRecord> read_fasta_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw InvalidInput("cannot open FASTA file " + path.string());
  }
  return parse_fasta(in, path.string());
}

void write_fasta(std::ostream& out, std::span<const FastaRecord> records, std::size_t width) {
  if (width == 0) {
    width = std::string::npos;
  }
  for (const auto& r : records) {
    out << '>' << r.header << '\n';
    for (std::size_t i = 0; i < r.sequence.size(); i += width) {
      out << std::string_view(r.sequence).substr(i, width) << '\n';
    }
  }
}

Alphabet dna_alphabet() { return Alphabet::range(4); }

AmbiguityPolicy parse_ambiguity_policy(std::string_view name) {
  if (name == "reject" || name == "reject-record") {
    return AmbiguityPolicy::reject_record;
  }
  if (name == "split" || name == "split-at-ambiguity") {
    return AmbiguityPolicy::split_at_ambiguity;
  }
  if (name == "skip" || name == "skip-symbol") {
    return AmbiguityPolicy::skip_symbol;
  }
  throw InvalidInput("unknown ambiguity policy '" + std::string(name) + "'");
}

std::string_view to_string(AmbiguityPolicy policy) {
  switch (policy) {
    case AmbiguityPolicy::reject_record:
      return "reject-record";
    case AmbiguityPolicy::split_at_ambiguity:
      return "split-at-ambiguity";
    case AmbiguityPolicy::skip_symbol:
      return "skip-symbol";
  }
  return "reject-record";
}

FilterResult to_coding_sequences(std::span<const FastaRecord> records, const FilterPolicy& policy) {
  FilterResult result;
  for (const auto& record : records) {
    const std::string_view seq = record.sequence;
    std::string id = record.id();
    switch (policy.ambiguity) {
      case AmbiguityPolicy::reject_record: {
        if (seq.size() < policy.t_min) {
          admit(seq, std::move(id), record, policy, result);
          break;
        }
        const auto bad = std::find_if(seq.begin(), seq.end(), [](unsigned char c) {
          return kBaseCode[c] < 0;
        });
        if (bad != seq.end()) {
          result.rejections.push_back(
              {std::move(id), "ambiguous-base ('" + std::string(1, *bad) + "' at position " +
                                  std::to_string(bad - seq.begin()) + ")"});
          break;
        }
        admit(seq, std::move(id), record, policy, result);
        break;
      }
      case AmbiguityPolicy::skip_symbol: {
        std::string kept;
        kept.reserve(seq.size());
        std::copy_if(seq.begin(), seq.end(), std::back_inserter(kept),
                     [](unsigned char c) { return kBaseCode[c] >= 0; });
        admit(kept, std::move(id), record, policy, result);
        break;
      }
      case AmbiguityPolicy::split_at_ambiguity: {
        std::size_t fragment = 0;
        std::size_t i = 0;
        while (i < seq.size()) {
          if (kBaseCode[static_cast<unsigned char>(seq[i])] < 0) {
            ++i;
            continue;
          }
          std::size_t j = i;
          while (j < seq.size() && kBaseCode[static_cast<unsigned char>(seq[j])] >= 0) {
            ++j;
          }
          admit(seq.substr(i, j - i), id + "/" + std::to_string(++fragment), record, policy,
                result);
          i = j;
        }
        if (fragment == 0) {
          result.rejections.push_back({std::move(id), "no-canonical-bases"});
        }
        break;
      }
    }
  }
  return result;
}

void write_rejection_log(std::ostream& out, std::span<const Rejection> rejections) {
  for (const auto& r : rejections) {
    out << r.id << '\t' << r.reason << '\n';
  }
}

ChromosomeResolver::ChromosomeResolver() {
  set_header_pattern(R"((?:chromosome|chr)[\s:=_]*([0-9]{1,2}|X|Y|MT|M)(?![0-9A-Za-z]))");
}

void ChromosomeResolver::load_mapping(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string::npos) {
      line.erase(hash);
    }
    if (is_blank(line)) {
      continue;
    }
    std::istringstream fields(line);
    std::string path;
    std::string label;
    if (!(fields >> path >> label)) {
      throw ParseError(line_no, "mapping line needs '<file> <label>'");
    }
    map_file(path, label);
  }
}

void ChromosomeResolver::load_mapping_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw InvalidInput("cannot open chromosome mapping " + path.string());
  }
  load_mapping(in);
}

void ChromosomeResolver::map_file(const std::string& path, const std::string& label) {
  by_file_[path] = label;
}

void ChromosomeResolver::set_header_pattern(const std::string& pattern) {
  try {
    header_pattern_ = std::regex(pattern, std::regex::ECMAScript | std::regex::icase);
  } catch (const std::regex_error& e) {
    throw InvalidInput("invalid header pattern: " + std::string(e.what()));
  }
}

std::string ChromosomeResolver::resolve(const FastaRecord& record) const {
  if (!record.source_file.empty()) {
    if (auto it = by_file_.find(record.source_file); it != by_file_.end()) {
      return it->second;
    }
    const std::string name = std::filesystem::path(record.source_file).filename().string();
    if (auto it = by_file_.find(name); it != by_file_.end()) {
      return it->second;
    }
  }

  std::smatch match;
  if (std::regex_search(record.header, match, header_pattern_) && match.size() > 1 &&
      match[1].matched) {
    std::string label = match[1].str();
    std::transform(label.begin(), label.end(), label.begin(),
                   [](unsigned char c) { return static_cast<char>(std::toupper(c)); });
    return label;
  }

  static const std::regex refseq(R"(NC_0(?:000(\d\d)|(12920))\.)");
  if (std::regex_search(record.header, match, refseq)) {
    if (match[2].matched) {
      return "MT";
    }
    const int number = std::stoi(match[1].str());
    if (number >= 1 && number <= 22) {
      return std::to_string(number);
    }
    if (number == 23) {
      return "X";
    }
    if (number == 24) {
      return "Y";
    }
  }

  if (!record.source_file.empty()) {
    return std::filesystem::path(record.source_file).stem().string();
  }
  return "unknown";
}

void ChromosomeResolver::assign(std::vector<FastaRecord>& records) const {
  for (auto& r : records) {
    r.chromosome = resolve(r);
  }
}

bool chromosome_label_less(std::string_view a, std::string_view b) {
  std::size_t i = 0;
  std::size_t j = 0;
  auto digit = [](char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; };
  while (i < a.size() && j < b.size()) {
    if (digit(a[i]) && digit(b[j])) {
      std::size_t ei = i;
      std::size_t ej = j;
      while (ei < a.size() && digit(a[ei])) ++ei;
      while (ej < b.size() && digit(b[ej])) ++ej;
      std::string_view na = a.substr(i, ei - i);
      std::string_view nb = b.substr(j, ej - j);
      while (na.size() > 1 && na.front() == '0') na.remove_prefix(1);
      while (nb.size() > 1 && nb.front() == '0') nb.remove_prefix(1);
      if (na.size() != nb.size()) {
        return na.size() < nb.size();
      }
      if (na != nb) {
        return na < nb;
      }
      i = ei;
      j = ej;
      continue;
    }
    if (a[i] != b[j]) {
      return a[i] < b[j];
    }
    ++i;
    ++j;
  }
  if ((a.size() - i) != (b.size() - j)) {
    return a.size() - i < b.size() - j;
  }
  return a < b;
}

GroupedSamples group_and_sample(std::span<const CodingSequence> sequences, std::size_t workers) {
  if (sequences.empty()) {
    throw InvalidInput("no coding sequences to sample");
  }
  std::vector<MatchingSample> samples(sequences.size());
  parallel_for(sequences.size(), workers,
               [&](std::size_t i) { samples[i] = extract_sample(sequences[i].symbols); });

  std::vector<std::string> labels;
  for (const auto& s : sequences) {
    labels.push_back(s.chromosome);
  }
  std::sort(labels.begin(), labels.end(), chromosome_label_less);
  labels.erase(std::unique(labels.begin(), labels.end()), labels.end());

  GroupedSamples out;
  out.pooled.label = "pooled";
  std::map<std::string, std::size_t> index;
  for (const auto& label : labels) {
    index[label] = out.groups.size();
    out.groups.push_back({label, {}, 0.0});
  }
  std::vector<double> total_length(out.groups.size(), 0.0);
  double pooled_length = 0.0;
  for (std::size_t i = 0; i < sequences.size(); ++i) {
    const std::size_t g = index.at(sequences[i].chromosome);
    out.groups[g].samples.add(samples[i]);
    total_length[g] += static_cast<double>(sequences[i].length());
    out.pooled.samples.add(samples[i]);
    pooled_length += static_cast<double>(sequences[i].length());
  }
  for (std::size_t g = 0; g < out.groups.size(); ++g) {
    out.groups[g].mean_length = total_length[g] / static_cast<double>(out.groups[g].count());
  }
  out.pooled.mean_length = pooled_length / static_cast<double>(sequences.size());
  return out;
}

}  // namespace matchtime
