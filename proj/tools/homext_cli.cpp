#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "homext/age.hpp"
#include "homext/atlas.hpp"
#include "homext/canonical.hpp"
#include "homext/claims.hpp"
#include "homext/engine.hpp"
#include "homext/generators.hpp"
#include "homext/graph_io.hpp"
#include "homext/properties.hpp"

using namespace homext;

namespace {

constexpr int kClaimFailure = 1;
constexpr int kInputError = 2;

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Common {
  std::size_t max_domain = 4;
  std::size_t horizon = 64;
  std::size_t depth = 16;
  std::size_t window = 8;
  std::uint64_t seed = 0;
  std::string format = "text";
  std::string input;
  std::vector<std::string> spec;

  BoundedParams bounds() const {
    BoundedParams p;
    p.max_domain = max_domain;
    p.horizon = horizon;
    p.depth = depth;
    p.window = window;
    return p;
  }
};

void add_common(CLI::App* cmd, Common& c, bool with_spec = true) {
  cmd->add_option("--max-domain,-k", c.max_domain, "largest local morphism domain");
  cmd->add_option("--horizon,-N", c.horizon, "truncation horizon for oracle graphs");
  cmd->add_option("--depth", c.depth, "back-and-forth depth");
  cmd->add_option("--window", c.window, "local morphisms are drawn from the first W vertices");
  cmd->add_option("--seed", c.seed, "seed for randomised generators");
  cmd->add_option("--format", c.format, "output format")->check(CLI::IsMember({"text", "graph6", "json"}));
  if (with_spec) {
    cmd->add_option("--input,-i", c.input, "graph file (text or graph6; '-' for stdin)");
    cmd->add_option("spec", c.spec, "generator name and parameters");
  }
}

// A generated or loaded graph: finite, or an oracle seen through a horizon.
struct Source {
  std::string label;
  std::optional<Graph> graph;
  std::optional<OracleGraph> oracle;

  Truncation truncation(std::size_t horizon) const {
    return graph ? Truncation::of(*graph) : Truncation::of(*oracle, horizon);
  }
  Graph materialise(std::size_t horizon) const { return graph ? *graph : oracle_truncate(*oracle, horizon); }
};

std::size_t number(const std::vector<std::string>& spec, std::size_t i) {
  if (i >= spec.size()) throw InputError("generator '" + spec[0] + "' needs more parameters");
  try {
    std::size_t pos = 0;
    const auto v = std::stoul(spec[i], &pos);
    if (pos == spec[i].size()) return v;
  } catch (const std::exception&) {
  }
  throw InputError("bad parameter '" + spec[i] + "'");
}

Cardinal cardinal(const std::vector<std::string>& spec, std::size_t i) {
  if (i < spec.size() && (spec[i] == "omega" || spec[i] == "w")) return Cardinal::countable();
  return Cardinal::finite(number(spec, i));
}

std::vector<Graph> load_graphs(const std::string& path) {
  if (path == "-") return read_graphs(std::cin);
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  return read_graphs(in);
}

Source resolve(const Common& c) {
  const auto& s = c.spec;
  if (!c.input.empty()) {
    if (!s.empty()) throw InputError("give either --input or a generator, not both");
    auto graphs = load_graphs(c.input);
    if (graphs.size() != 1) throw InputError("expected exactly one graph in " + c.input);
    return {c.input, std::move(graphs.front()), std::nullopt};
  }
  if (s.empty()) throw InputError("no graph given");
  const std::string& name = s[0];
  Source out;
  std::ostringstream label;
  for (std::size_t i = 0; i < s.size(); ++i) label << (i ? " " : "") << s[i];
  out.label = label.str();
  if (name == "k")
    out.graph = complete_graph(number(s, 1));
  else if (name == "i")
    out.graph = independent_graph(number(s, 1));
  else if (name == "path")
    out.graph = path_graph(number(s, 1));
  else if (name == "cycle")
    out.graph = cycle_graph(number(s, 1));
  else if (name == "comp") {
    auto v = composite(cardinal(s, 1), cardinal(s, 2));
    if (auto* g = std::get_if<Graph>(&v))
      out.graph = *g;
    else
      out.oracle = std::get<OracleGraph>(v);
  } else if (name == "rs")
    out.oracle = rs_graph(number(s, 1));
  else if (name == "rado")
    out.oracle = rado_bit();
  else if (name == "knfree")
    out.graph = knfree_generic(number(s, 1), number(s, 2), c.seed).graph;
  else if (name == "h3prime")
    out.graph = h3_prime(number(s, 1), c.seed).graph;
  else if (name == "radoplus")
    out.graph = rado_plus_dominating(number(s, 1));
  else
    throw InputError("unknown generator '" + name + "'");
  return out;
}

VertexSet parse_probe(const std::string& text) {
  VertexSet out;
  std::istringstream is(text);
  for (std::string item; std::getline(is, item, ',');) {
    const auto dash = item.find('-');
    try {
      if (dash == std::string::npos) {
        out.push_back(static_cast<Vertex>(std::stoul(item)));
      } else {
        const auto lo = std::stoul(item.substr(0, dash)), hi = std::stoul(item.substr(dash + 1));
        for (auto v = lo; v <= hi; ++v) out.push_back(static_cast<Vertex>(v));
      }
    } catch (const std::exception&) {
      throw InputError("bad probe entry '" + item + "'");
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

void emit_graph(const Graph& g, const std::string& format) {
  if (format == "graph6") {
    std::cout << to_graph6(g) << '\n';
  } else if (format == "json") {
    nlohmann::ordered_json j;
    j["order"] = g.order();
    j["edges"] = g.edges();
    std::cout << j.dump() << '\n';
  } else {
    write_text(std::cout, g);
  }
}

int cmd_generate(const Common& c, std::optional<std::size_t> truncate) {
  const Source src = resolve(c);
  if (src.oracle && !truncate) throw InputError(src.label + " is infinite; pass --truncate N");
  emit_graph(src.materialise(truncate.value_or(0)), c.format);
  return 0;
}

std::string outcome_word(Outcome o) { return std::string(name(o)); }

int cmd_classify(const Common& c, bool bounded) {
  const Source src = resolve(c);
  const bool exact = src.graph && !bounded && src.graph->order() <= kCanonicalCap;
  MembershipVector mv;
  if (exact) {
    mv = classify_finite(*src.graph);
  } else {
    const Truncation t = src.truncation(c.horizon);
    for (MorphismKind x : kLocalKinds)
      for (EndoKind y : kAllEndoKinds) mv.at(x, y) = decide_xy_bounded(t, x, y, c.bounds());
  }
  if (c.format == "json") {
    nlohmann::ordered_json j;
    j["graph"] = src.label;
    j["mode"] = exact ? "finite-exact" : "bounded";
    for (MorphismKind x : kLocalKinds)
      for (EndoKind y : kAllEndoKinds) {
        const Verdict& v = mv.at(x, y);
        j["verdicts"][std::string{symbol(x), symbol(y)}] = report_line(x, y, v);
      }
    std::cout << j.dump() << '\n';
  } else {
    std::cout << "# " << src.label << (exact ? " (finite, exact)" : " (bounded)") << '\n';
    for (MorphismKind x : kLocalKinds)
      for (EndoKind y : kAllEndoKinds) {
        const Verdict& v = mv.at(x, y);
        std::cout << report_line(x, y, v);
        if (!v.note.empty()) std::cout << "  # " << v.note;
        std::cout << '\n';
      }
  }
  return 0;
}

int cmd_atlas(const Common& c, std::optional<std::size_t> order, std::optional<std::size_t> max_order,
              const std::string& output) {
  AtlasCorpus corpus;
  if (!c.input.empty()) {
    corpus.kind = AtlasCorpus::Kind::File;
    corpus.file_label = std::filesystem::path(c.input).filename().string();
    corpus.graphs = load_graphs(c.input);
  } else if (order) {
    corpus.kind = AtlasCorpus::Kind::ExactOrder;
    corpus.order = *order;
  } else if (max_order) {
    corpus.kind = AtlasCorpus::Kind::UpToOrder;
    corpus.order = *max_order;
  } else {
    throw InputError("atlas needs --order, --max-order or --input");
  }
  if (corpus.kind != AtlasCorpus::Kind::File && (corpus.order < 1 || corpus.order > 7))
    throw InputError("exhaustive atlas supports orders 1..7");

  if (output.empty()) {
    write_atlas(std::cout, corpus, {}, true);
    return 0;
  }
  std::set<std::string> done;
  bool fresh = true;
  if (std::filesystem::exists(output) && std::filesystem::file_size(output) > 0) {
    std::ifstream in(output);
    std::string first;
    std::getline(in, first);
    if (first != atlas_header(corpus)) throw InputError(output + " holds a different atlas");
    done = read_atlas_ids(in);
    fresh = false;
  }
  std::ofstream out(output, std::ios::app);
  if (!out) throw InputError("cannot write " + output);
  write_atlas(out, corpus, done, fresh);
  return 0;
}

int cmd_verify(const Common& c, const std::string& claims_path) {
  std::ifstream in(claims_path);
  if (!in) throw InputError("cannot open " + claims_path);
  const auto claims = parse_claims(in);
  const auto results = verify_claims(claims, c.bounds());
  bool all = true;
  for (const auto& r : results) {
    std::cout << (r.passed ? "PASS" : "FAIL") << " line " << r.claim.line << ": " << r.claim.text << '\n';
    for (const auto& d : r.details) std::cout << "    " << d << '\n';
    all &= r.passed;
  }
  std::cout << (all ? "all claims hold" : "some claims failed") << '\n';
  return all ? 0 : kClaimFailure;
}

int cmd_age(const Common& c, std::size_t size, const std::string& criterion, std::size_t cap) {
  const Source src = resolve(c);
  const Truncation t = src.truncation(c.horizon);
  const auto age = compute_age(t, size, cap);
  for (const auto& line : age_report(age)) std::cout << line << '\n';
  for (const auto& v : order_violations(age, compute_age_order(age))) std::cout << "order violation: " << v << '\n';
  if (!criterion.empty()) {
    const auto rep = check_criterion(age, criterion_from_name(criterion));
    std::cout << "criterion " << name(rep.which) << ": " << outcome_word(rep.outcome) << '\n';
    for (const auto& cond : rep.conditions) {
      std::cout << "  " << outcome_word(cond.outcome) << ' ' << cond.name;
      if (!cond.witness.empty()) std::cout << " witness=" << cond.witness;
      std::cout << '\n';
    }
  }
  return 0;
}

int cmd_check(const Common& c, const std::string& what, const std::string& probe_text) {
  const Source src = resolve(c);
  const Truncation t = src.truncation(c.horizon);
  std::optional<VertexSet> probe;
  if (!probe_text.empty()) probe = parse_probe(probe_text);

  if (what == "alpha-sigma") {
    const auto r = check_alpha_sigma_bound(t.graph());
    std::cout << "alpha=" << r.alpha << " sigma=" << r.sigma << " bound=" << r.bound
              << " inequality=" << (r.holds ? "true" : "false") << '\n';
    return 0;
  }
  if (what == "extension-axioms") {
    const std::size_t size = probe ? probe->size() : 8;
    if (probe && (probe->empty() || probe->back() + 1 != probe->size()))
      throw InputError("extension axioms take a prefix probe such as 0-7");
    const auto r = check_extension_axioms(t.graph(), size);
    std::cout << (r.failures.empty() ? "HOLD" : "FAIL") << " extension-axioms pairs=" << r.pairs_checked
              << " failures=" << r.failures.size() << '\n';
    return r.failures.empty() ? 0 : kClaimFailure;
  }
  if (what == "HH" || what == "HE" || what == "ME") {
    const auto rep = check_criterion(t, criterion_from_name(what), c.max_domain);
    std::cout << name(rep.outcome) << " criterion=" << what << '\n';
    for (const auto& cond : rep.conditions)
      std::cout << "  " << name(cond.outcome) << ' ' << cond.name
                << (cond.witness.empty() ? "" : " witness=" + cond.witness) << '\n';
    return rep.outcome == Outcome::Fails ? kClaimFailure : 0;
  }
  const Property p = property_from_name(what);
  const auto r = check_property(t, p, c.max_domain, probe);
  std::cout << name(r.outcome) << " property=" << name(p) << " k=" << c.max_domain << " instances=" << r.instances;
  if (!r.witness.empty()) std::cout << ' ' << r.witness;
  std::cout << '\n';
  return r.outcome == Outcome::Fails ? kClaimFailure : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Morphism-extension classes of finite and countable graphs"};
  app.require_subcommand(1);

  Common gen_opts, cls_opts, atlas_opts, verify_opts, age_opts, check_opts;

  auto* gen = app.add_subcommand("generate", "emit a generated graph");
  add_common(gen, gen_opts);
  std::optional<std::size_t> truncate;
  gen->add_option("--truncate", truncate, "vertex count for infinite generators");

  auto* cls = app.add_subcommand("classify", "18 verdicts for one graph");
  add_common(cls, cls_opts);
  bool bounded = false;
  cls->add_flag("--bounded", bounded, "use the bounded search even for small finite graphs");

  auto* atlas = app.add_subcommand("atlas", "JSONL atlas of small graphs");
  add_common(atlas, atlas_opts);
  std::optional<std::size_t> order, max_order;
  std::string output;
  atlas->add_option("--order", order, "every graph with exactly this many vertices");
  atlas->add_option("--max-order", max_order, "every graph with 1..n vertices");
  atlas->add_option("--output,-o", output, "append to this file, skipping ids already present");

  auto* verify = app.add_subcommand("verify-poset", "check a claims file");
  add_common(verify, verify_opts, false);
  std::string claims_path;
  verify->add_option("claims", claims_path, "claims file")->required();

  auto* age = app.add_subcommand("age", "age, cone flags and criteria");
  add_common(age, age_opts);
  std::size_t age_size = 3, cap = kDefaultEmbeddingCap;
  std::string criterion;
  age->add_option("--size", age_size, "largest age member");
  age->add_option("--cap", cap, "copies examined per age member");
  age->add_option("--criterion", criterion, "HH, HE or ME")->check(CLI::IsMember({"HH", "HE", "ME"}));

  auto* check = app.add_subcommand("check", "one property or criterion");
  add_common(check, check_opts);
  std::string what, probe;
  check->add_option("--property,-p", what,
                    "cone, cocone, domain-step, image-step, alpha-sigma, extension-axioms, HH, HE or ME")
      ->required();
  check->add_option("--probe", probe, "vertices to quantify over, e.g. 0-7,256");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kInputError;
  }

  try {
    if (*gen) return cmd_generate(gen_opts, truncate);
    if (*cls) return cmd_classify(cls_opts, bounded);
    if (*atlas) return cmd_atlas(atlas_opts, order, max_order, output);
    if (*verify) return cmd_verify(verify_opts, claims_path);
    if (*age) return cmd_age(age_opts, age_size, criterion, cap);
    if (*check) return cmd_check(check_opts, what, probe);
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const GraphError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInputError;
  }
  return 0;
}
