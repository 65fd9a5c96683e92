#include "homext/morphism.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <sstream>
#include <stdexcept>

namespace homext {

char symbol(MorphismKind k) {
  switch (k) {
    case MorphismKind::Isomorphism: return 'I';
    case MorphismKind::Monomorphism: return 'M';
    case MorphismKind::Homomorphism: return 'H';
    case MorphismKind::NotHomomorphism: return '-';
  }
  return '?';
}

char symbol(EndoKind y) {
  switch (y) {
    case EndoKind::H: return 'H';
    case EndoKind::M: return 'M';
    case EndoKind::I: return 'I';
    case EndoKind::E: return 'E';
    case EndoKind::B: return 'B';
    case EndoKind::A: return 'A';
  }
  return '?';
}

MorphismKind morphism_kind_from_symbol(char c) {
  switch (c) {
    case 'I': return MorphismKind::Isomorphism;
    case 'M': return MorphismKind::Monomorphism;
    case 'H': return MorphismKind::Homomorphism;
    default: throw std::invalid_argument(std::string("unknown local morphism type: ") + c);
  }
}

EndoKind endo_kind_from_symbol(char c) {
  switch (c) {
    case 'H': return EndoKind::H;
    case 'M': return EndoKind::M;
    case 'I': return EndoKind::I;
    case 'E': return EndoKind::E;
    case 'B': return EndoKind::B;
    case 'A': return EndoKind::A;
    default: throw std::invalid_argument(std::string("unknown endomorphism type: ") + c);
  }
}

std::string_view name(MorphismKind k) {
  switch (k) {
    case MorphismKind::Isomorphism: return "isomorphism";
    case MorphismKind::Monomorphism: return "monomorphism";
    case MorphismKind::Homomorphism: return "homomorphism";
    case MorphismKind::NotHomomorphism: return "not a homomorphism";
  }
  return "?";
}

bool endo_implies(EndoKind stronger, EndoKind weaker) {
  if (stronger == weaker || weaker == EndoKind::H) return true;
  switch (stronger) {
    case EndoKind::A: return true;
    case EndoKind::B: return weaker == EndoKind::M || weaker == EndoKind::E;
    case EndoKind::I: return weaker == EndoKind::M;
    default: return false;
  }
}

MorphismKind restriction_kind(EndoKind y) {
  switch (y) {
    case EndoKind::H:
    case EndoKind::E: return MorphismKind::Homomorphism;
    case EndoKind::M:
    case EndoKind::B: return MorphismKind::Monomorphism;
    case EndoKind::I:
    case EndoKind::A: return MorphismKind::Isomorphism;
  }
  return MorphismKind::Homomorphism;
}

PartialMap::PartialMap(std::vector<Pair> pairs) : pairs_(std::move(pairs)) {
  std::sort(pairs_.begin(), pairs_.end());
  for (std::size_t i = 1; i < pairs_.size(); ++i)
    if (pairs_[i - 1].first == pairs_[i].first)
      throw std::invalid_argument("partial map assigns vertex " + std::to_string(pairs_[i].first) + " twice");
}

VertexSet PartialMap::domain() const {
  VertexSet d;
  d.reserve(pairs_.size());
  for (auto [s, t] : pairs_) d.push_back(s);
  return d;
}

VertexSet PartialMap::image() const {
  VertexSet img;
  img.reserve(pairs_.size());
  for (auto [s, t] : pairs_) img.push_back(t);
  std::sort(img.begin(), img.end());
  img.erase(std::unique(img.begin(), img.end()), img.end());
  return img;
}

std::optional<Vertex> PartialMap::operator()(Vertex v) const {
  auto it = std::lower_bound(pairs_.begin(), pairs_.end(), Pair{v, 0});
  if (it != pairs_.end() && it->first == v) return it->second;
  return std::nullopt;
}

bool PartialMap::covers(Vertex v) const {
  return std::any_of(pairs_.begin(), pairs_.end(), [v](const Pair& p) { return p.second == v; });
}

bool PartialMap::injective() const { return image().size() == pairs_.size(); }

PartialMap PartialMap::with(Vertex source, Vertex target) const {
  auto p = pairs_;
  p.emplace_back(source, target);
  return PartialMap(std::move(p));
}

PartialMap PartialMap::restricted_to(const VertexSet& s) const {
  std::vector<Pair> p;
  for (auto pr : pairs_)
    if (std::binary_search(s.begin(), s.end(), pr.first)) p.push_back(pr);
  return PartialMap(std::move(p));
}

PartialMap PartialMap::inverse() const {
  if (!injective()) throw std::invalid_argument("inverse of a non-injective map");
  std::vector<Pair> p;
  for (auto [s, t] : pairs_) p.emplace_back(t, s);
  return PartialMap(std::move(p));
}

std::string PartialMap::to_string() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < pairs_.size(); ++i) {
    if (i) os << ',';
    os << pairs_[i].first << "->" << pairs_[i].second;
  }
  return os.str();
}

PartialMap PartialMap::parse(std::string_view text) {
  std::vector<Pair> pairs;
  while (!text.empty()) {
    auto comma = text.find(',');
    auto item = text.substr(0, comma);
    auto arrow = item.find("->");
    if (arrow == std::string_view::npos) throw std::invalid_argument("bad map entry: " + std::string(item));
    Vertex s = 0, t = 0;
    auto a = item.substr(0, arrow), b = item.substr(arrow + 2);
    auto r1 = std::from_chars(a.data(), a.data() + a.size(), s);
    auto r2 = std::from_chars(b.data(), b.data() + b.size(), t);
    if (r1.ec != std::errc{} || r1.ptr != a.data() + a.size() || r2.ec != std::errc{} ||
        r2.ptr != b.data() + b.size())
      throw std::invalid_argument("bad map entry: " + std::string(item));
    pairs.emplace_back(s, t);
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  return PartialMap(std::move(pairs));
}

namespace {

struct LocalEnumerator {
  const Graph& g;
  std::size_t window;
  MorphismKind kind;
  const std::function<bool(const PartialMap&)>& visit;
  VertexSet domain;
  std::vector<Vertex> image;
  bool stopped = false;

  bool compatible(std::size_t i, Vertex t) const {
    for (std::size_t j = 0; j < i; ++j) {
      const bool src = g.adjacent(domain[j], domain[i]);
      const bool same = image[j] == t;
      if (same && (src || kind >= MorphismKind::Monomorphism)) return false;
      if (src && !g.adjacent(image[j], t)) return false;
      if (kind == MorphismKind::Isomorphism && !src && g.adjacent(image[j], t)) return false;
    }
    return true;
  }

  void assign(std::size_t i) {
    if (stopped) return;
    if (i == domain.size()) {
      std::vector<PartialMap::Pair> p;
      for (std::size_t j = 0; j < domain.size(); ++j) p.emplace_back(domain[j], image[j]);
      if (!visit(PartialMap(std::move(p)))) stopped = true;
      return;
    }
    for (Vertex t = 0; t < window && !stopped; ++t) {
      if (!compatible(i, t)) continue;
      image[i] = t;
      assign(i + 1);
    }
  }

  void domains(std::size_t size, Vertex from) {
    if (stopped) return;
    if (domain.size() == size) {
      image.assign(size, 0);
      assign(0);
      return;
    }
    for (Vertex v = from; v < window && !stopped; ++v) {
      domain.push_back(v);
      domains(size, v + 1);
      domain.pop_back();
    }
  }
};

}  // namespace

void for_each_local_morphism(const Graph& g, std::size_t window, MorphismKind kind, std::size_t max_domain,
                             const std::function<bool(const PartialMap&)>& visit) {
  if (kind == MorphismKind::NotHomomorphism) throw std::invalid_argument("enumerate homomorphisms or stronger");
  window = std::min(window, g.order());
  LocalEnumerator e{g, window, kind, visit, {}, {}, false};
  for (std::size_t size = 1; size <= max_domain && size <= window && !e.stopped; ++size) e.domains(size, 0);
}

std::vector<PartialMap> enumerate_local_morphisms(const Graph& g, MorphismKind kind, std::size_t max_domain) {
  std::vector<PartialMap> out;
  for_each_local_morphism(g, kind, max_domain, [&](const PartialMap& f) {
    out.push_back(f);
    return true;
  });
  return out;
}

std::vector<VertexSet> kernel(const PartialMap& f) {
  std::map<Vertex, VertexSet> by_image;
  for (auto [s, t] : f.pairs()) by_image[t].push_back(s);
  std::vector<VertexSet> blocks;
  for (auto& [t, b] : by_image) blocks.push_back(std::move(b));
  std::sort(blocks.begin(), blocks.end(), [](const VertexSet& a, const VertexSet& b) { return a.front() < b.front(); });
  return blocks;
}

VertexSet transversal(const PartialMap& f) {
  VertexSet t;
  for (const auto& b : kernel(f)) t.push_back(b.front());
  return t;
}

}  // namespace homext
