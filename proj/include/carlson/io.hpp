#pragma once

// JSON file formats: coloring files (located words, finite sets, naturals,
// classical words) and certificate files.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "json.hpp"

#include "carlson/certificate.hpp"
#include "carlson/coloring.hpp"
#include "carlson/spans.hpp"

namespace carlson {

using Json = nlohmann::ordered_json;

enum class Domain {
  Located,   // FIN_A(0, N) plus the unit, canonical_index order
  FinSets,   // subsets of [0, N), finset_to_nat order
  Naturals,  // [0, 2^N): the same table read through the binary encoding
  Words,     // classical words, rule only
};

std::string to_string(Domain d);
Domain parse_domain(std::string_view text);

/// A classical-word coloring; the rule reads the word as a located word at
/// positions 0..len-1.
struct WordColoring {
  Alphabet alphabet;
  unsigned colors;
  Rule rule;

  Color operator()(std::string_view u) const;
};

struct ColoringFile {
  Domain domain = Domain::Located;
  std::optional<Coloring> located;
  std::optional<SetColoring> sets;
  std::optional<WordColoring> words;

  std::uint64_t content_hash() const;
};

Json to_json(const Coloring& f);
Json to_json(const SetColoring& g, Domain domain = Domain::FinSets);
Json to_json(const WordColoring& w);
ColoringFile coloring_from_json(const Json& j);

/// Hash binding a certificate to an ordered list of set colorings.
std::uint64_t instance_hash(std::span<const SetColoring> gs);

enum class CertificateKind { HJ, Carlson, Match, Schedule, FU };
std::string to_string(CertificateKind k);

struct FuBundle {
  FinSetSequence x;
  FuCertificate cert;
};

struct CertificateFile {
  CertificateKind kind = CertificateKind::HJ;
  std::uint64_t instance = 0;
  std::optional<std::uint64_t> partner;  // strong-proximality schedules
  unsigned window = 0;
  std::string tool_version;
  std::string alphabet;  // empty for fu certificates
  std::variant<HJWitness, CarlsonCertificate, MatchStructure, WitnessSchedule, FuBundle> payload;
};

Json to_json(const CertificateFile& c);
/// Throws MalformedCertificate on any structural problem.
CertificateFile certificate_from_json(const Json& j);

CertificateFile make_certificate(const Coloring& f, const HJWitness& w);
CertificateFile make_certificate(const Coloring& f, const CarlsonCertificate& c);
CertificateFile make_certificate(const Coloring& f, const MatchStructure& m);
CertificateFile make_certificate(const Coloring& f, const Coloring* g, const WitnessSchedule& s, unsigned window);
CertificateFile make_certificate(std::span<const SetColoring> gs, const FinSetSequence& x, const FuCertificate& c);

/// Two-space indented JSON with a trailing newline; stable for fixed input.
std::string dump(const Json& j);
Json read_json_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

/// "{0:*,1:*} {2:a,3:*}" or the same separated by ';' or ','.
std::vector<Word> parse_word_list(std::string_view text, const Alphabet& alphabet);
std::string to_string(std::span<const Word> words, const Alphabet& alphabet);
/// "[[0,1],[2]]" as a finite-set list.
std::vector<FinSet> parse_finset_list(std::string_view text);
std::string to_string(const FinSet& e);

}  // namespace carlson
