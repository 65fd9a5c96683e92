#include "homext/atlas.hpp"

#include <cstdio>
#include <istream>
#include <ostream>

#include <json.hpp>

#include "homext/canonical.hpp"
#include "homext/corpus.hpp"
#include "homext/graph_io.hpp"

namespace homext {

using json = nlohmann::ordered_json;

namespace {

std::string class_label(MorphismKind x, EndoKind y) { return std::string{symbol(x), symbol(y)}; }

std::string corpus_label(const AtlasCorpus& c) {
  switch (c.kind) {
    case AtlasCorpus::Kind::ExactOrder: return "order=" + std::to_string(c.order);
    case AtlasCorpus::Kind::UpToOrder: return "order<=" + std::to_string(c.order);
    case AtlasCorpus::Kind::File: return "file:" + c.file_label;
  }
  return "?";
}

Outcome outcome_from_name(const std::string& s) {
  if (s == "holds") return Outcome::Holds;
  if (s == "fails") return Outcome::Fails;
  if (s == "unknown") return Outcome::UnknownAtBound;
  throw ParseError("bad verdict in atlas record: " + s);
}

std::string outcome_word(Outcome o) {
  switch (o) {
    case Outcome::Holds: return "holds";
    case Outcome::Fails: return "fails";
    case Outcome::UnknownAtBound: return "unknown";
  }
  return "?";
}

std::string padded(std::size_t index) {
  char buf[24];
  std::snprintf(buf, sizeof buf, "%05zu", index);
  return buf;
}

struct Pending {
  std::string id;
  Graph graph;
  std::string params;
};

}  // namespace

std::string atlas_header(const AtlasCorpus& c) {
  json h;
  h["schema"] = kAtlasSchema;
  h["version"] = kAtlasVersion;
  h["corpus"] = corpus_label(c);
  h["mode"] = "finite-exact";
  json classes = json::array();
  for (MorphismKind x : kLocalKinds)
    for (EndoKind y : kAllEndoKinds) classes.push_back(class_label(x, y));
  h["classes"] = classes;
  return h.dump();
}

bool is_atlas_header(const std::string& line) {
  try {
    const auto j = json::parse(line);
    return j.is_object() && j.contains("schema");
  } catch (const json::exception&) {
    return false;
  }
}

std::string to_json_line(const AtlasRecord& r) {
  json j;
  j["id"] = r.id;
  j["graph6"] = r.graph6;
  j["canonical"] = r.canonical;
  j["order"] = r.order;
  json verdicts, witnesses = json::object();
  for (MorphismKind x : kLocalKinds)
    for (EndoKind y : kAllEndoKinds) {
      const Verdict& v = r.membership.at(x, y);
      verdicts[class_label(x, y)] = outcome_word(v.outcome);
      if (v.outcome == Outcome::Fails) witnesses[class_label(x, y)] = report_line(x, y, v);
    }
  j["membership"] = verdicts;
  j["witnesses"] = witnesses;
  j["generator"] = {{"name", r.generator}, {"params", r.params}, {"seed", nullptr}};
  j["bounds"] = {{"k", r.max_domain}, {"N", r.order}, {"depth", nullptr}};
  return j.dump();
}

AtlasRecord record_from_json_line(const std::string& line) {
  try {
    const auto j = json::parse(line);
    AtlasRecord r;
    r.id = j.at("id").get<std::string>();
    r.graph6 = j.at("graph6").get<std::string>();
    r.canonical = j.at("canonical").get<std::string>();
    r.order = j.at("order").get<std::size_t>();
    for (MorphismKind x : kLocalKinds)
      for (EndoKind y : kAllEndoKinds) {
        const std::string label = class_label(x, y);
        Verdict& v = r.membership.at(x, y);
        v.outcome = outcome_from_name(j.at("membership").at(label).get<std::string>());
        if (v.outcome == Outcome::Fails && j.at("witnesses").contains(label)) {
          const auto text = j["witnesses"][label].get<std::string>();
          const auto m = text.find("map="), s = text.find(" stuck=");
          if (m != std::string::npos && s != std::string::npos) {
            v.witness = PartialMap::parse(std::string_view(text).substr(m + 4, s - m - 4));
            const auto stuck = text.substr(s + 7);
            if (stuck != "-") v.stuck = static_cast<Vertex>(std::stoul(stuck));
          }
        }
      }
    r.generator = j.at("generator").at("name").get<std::string>();
    r.params = j.at("generator").at("params").get<std::string>();
    r.max_domain = j.at("bounds").at("k").get<std::size_t>();
    return r;
  } catch (const json::exception& e) {
    throw ParseError(std::string("bad atlas record: ") + e.what());
  }
}

std::vector<AtlasRecord> build_atlas(const AtlasCorpus& c, const std::set<std::string>& skip, Execution exec) {
  std::vector<Pending> todo;
  auto add_order = [&](std::size_t n) {
    const auto graphs = enumerate_graphs(n);
    for (std::size_t i = 0; i < graphs.size(); ++i) {
      auto id = "n" + std::to_string(n) + "-" + padded(i);
      if (!skip.count(id)) todo.push_back({std::move(id), graphs[i], "order=" + std::to_string(n)});
    }
  };
  switch (c.kind) {
    case AtlasCorpus::Kind::ExactOrder:
      add_order(c.order);
      break;
    case AtlasCorpus::Kind::UpToOrder:
      for (std::size_t n = 1; n <= c.order; ++n) add_order(n);
      break;
    case AtlasCorpus::Kind::File:
      for (std::size_t i = 0; i < c.graphs.size(); ++i) {
        auto id = "file-" + padded(i);
        if (!skip.count(id)) todo.push_back({std::move(id), c.graphs[i], "file=" + c.file_label});
      }
      break;
  }

  std::vector<Graph> graphs;
  for (const auto& p : todo) graphs.push_back(p.graph);
  const auto vectors = classify_corpus(graphs, exec);

  std::vector<AtlasRecord> out;
  for (std::size_t i = 0; i < todo.size(); ++i) {
    AtlasRecord r;
    r.id = todo[i].id;
    const Graph& g = todo[i].graph;
    r.graph6 = to_graph6(g);
    if (g.order() <= kCanonicalCap) r.canonical = canonical_key(g);
    r.order = g.order();
    r.membership = vectors[i];
    r.generator = c.kind == AtlasCorpus::Kind::File ? "file" : "enumeration";
    r.params = todo[i].params;
    r.max_domain = g.order();
    out.push_back(std::move(r));
  }
  return out;
}

std::set<std::string> read_atlas_ids(std::istream& is) {
  std::set<std::string> ids;
  std::string line;
  while (std::getline(is, line)) {
    if (line.empty() || is_atlas_header(line)) continue;
    ids.insert(record_from_json_line(line).id);
  }
  return ids;
}

void write_atlas(std::ostream& os, const AtlasCorpus& c, const std::set<std::string>& skip, bool header,
                 Execution exec) {
  if (header) os << atlas_header(c) << '\n';
  for (const auto& r : build_atlas(c, skip, exec)) os << to_json_line(r) << '\n';
}

}  // namespace homext
