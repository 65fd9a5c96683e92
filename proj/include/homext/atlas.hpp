#pragma once

#include <cstddef>
#include <iosfwd>
#include <set>
#include <string>
#include <vector>

#include "homext/engine.hpp"
#include "homext/execution.hpp"
#include "homext/graph.hpp"

namespace homext {

inline constexpr const char* kAtlasSchema = "homext-atlas";
inline constexpr int kAtlasVersion = 1;

struct AtlasRecord {
  std::string id;
  /// The labelling the witnesses refer to.
  std::string graph6;
  /// Canonical graph6, empty above the canonical form cap.
  std::string canonical;
  std::size_t order = 0;
  MembershipVector membership;
  std::string generator;
  std::string params;
  std::size_t max_domain = 0;
};

/// Which graphs an atlas run covers: every class of exactly / at most `order`
/// vertices, or the graphs of a file.
struct AtlasCorpus {
  enum class Kind { ExactOrder, UpToOrder, File } kind = Kind::UpToOrder;
  std::size_t order = 0;
  std::string file_label;
  std::vector<Graph> graphs;  // File only
};

std::string atlas_header(const AtlasCorpus& c);
std::string to_json_line(const AtlasRecord& r);
AtlasRecord record_from_json_line(const std::string& line);
/// True for the schema header line.
bool is_atlas_header(const std::string& line);

/// Records for the corpus, in id order, skipping ids in `skip`.
std::vector<AtlasRecord> build_atlas(const AtlasCorpus& c, const std::set<std::string>& skip,
                                     Execution exec = Execution::Parallel);

/// Ids already present in an atlas stream; throws ParseError on a malformed line.
std::set<std::string> read_atlas_ids(std::istream& is);

/// Writes the header (when asked) and one line per record not in `skip`.
void write_atlas(std::ostream& os, const AtlasCorpus& c, const std::set<std::string>& skip, bool header,
                 Execution exec = Execution::Parallel);

}  // namespace homext
