#include "ontofit/homomorphism.hpp"

#include <bit>
#include <boost/dynamic_bitset.hpp>
#include <limits>
#include <string>
#include <unordered_set>

#include "ontofit/errors.hpp"

namespace ontofit {
namespace detail {

using Bits = boost::dynamic_bitset<>;

struct Rel {
  int arity = 0;
  std::vector<std::uint32_t> flat;
  std::size_t count = 0;
  std::vector<std::vector<std::vector<std::uint32_t>>> by_pos;  // [pos][value] -> tuple ids
  std::vector<Bits> proj;
  bool packed = true;
  unsigned bits = 1;
  std::unordered_set<std::uint64_t> packed_keys;
  std::unordered_set<std::string> string_keys;

  const std::uint32_t* tuple(std::size_t t) const { return flat.data() + t * arity; }

  std::uint64_t pack(const std::uint32_t* t) const {
    std::uint64_t k = 0;
    for (int p = 0; p < arity; ++p) k |= static_cast<std::uint64_t>(t[p]) << (p * bits);
    return k;
  }
  std::string key(const std::uint32_t* t) const {
    return std::string(reinterpret_cast<const char*>(t), arity * sizeof(std::uint32_t));
  }
  void insert(const std::uint32_t* t) {
    if (packed) {
      packed_keys.insert(pack(t));
    } else {
      string_keys.insert(key(t));
    }
  }
  bool has(const std::uint32_t* t) const {
    return packed ? packed_keys.count(pack(t)) != 0 : string_keys.count(key(t)) != 0;
  }
};

struct TargetIndex {
  std::size_t m = 0;
  std::unordered_map<Symbol, Rel> rels;

  const Rel* rel(Symbol s) const {
    auto it = rels.find(s);
    return it == rels.end() ? nullptr : &it->second;
  }
};

}  // namespace detail

using detail::Bits;
using detail::Rel;
using detail::TargetIndex;

HomTarget::HomTarget(const Instance& dst) : dst_(&dst), index_(std::make_unique<TargetIndex>()) {
  TargetIndex& ix = *index_;
  ix.m = dst.adom().size();
  const unsigned bits = std::max(1u, static_cast<unsigned>(std::bit_width(ix.m)));
  for (Symbol s : dst.schema().symbols()) {
    const auto& ids = dst.facts_of(s);
    if (ids.empty()) continue;
    Rel& r = ix.rels[s];
    r.arity = symbol_arity(s);
    r.bits = bits;
    r.packed = static_cast<unsigned>(r.arity) * bits <= 64;
    r.count = ids.size();
    r.by_pos.assign(r.arity, std::vector<std::vector<std::uint32_t>>(ix.m));
    r.proj.assign(r.arity, Bits(ix.m));
    r.flat.reserve(ids.size() * r.arity);
    for (std::size_t t = 0; t < ids.size(); ++t) {
      const Fact& f = dst.facts()[ids[t]];
      for (int p = 0; p < r.arity; ++p) {
        const auto v = static_cast<std::uint32_t>(*dst.position(f.args[p]));
        r.flat.push_back(v);
        r.by_pos[p][v].push_back(static_cast<std::uint32_t>(t));
        r.proj[p].set(v);
      }
      r.insert(r.tuple(t));
    }
  }
}

HomTarget::~HomTarget() = default;
HomTarget::HomTarget(HomTarget&&) noexcept = default;
HomTarget& HomTarget::operator=(HomTarget&&) noexcept = default;

namespace {

constexpr int kUnassigned = -1;

struct SrcFact {
  const Rel* rel;
  std::vector<std::uint32_t> vars;
  std::vector<int> first;  // first position holding the same variable
};

class Search {
 public:
  Search(const PointedInstance& src, const HomTarget& target, std::span<const Value> dst_point,
         const Limits& limits)
      : src_(src.instance),
        dst_(target.instance()),
        T_(target.index()),
        n_(src.instance.adom().size()),
        m_(T_.m),
        max_nodes_(limits.max_search_nodes) {
    if (src.point.size() != dst_point.size()) {
      throw UsageError("distinguished tuples have arities " + std::to_string(src.point.size()) + " and " +
                       std::to_string(dst_point.size()));
    }
    assign_.assign(n_, kUnassigned);
    dom_.assign(n_, Bits(m_));
    for (auto& d : dom_) d.set();
    var_facts_.resize(n_);
    for (const Fact& f : src_.facts()) {
      const Rel* r = T_.rel(f.symbol);
      if (!r) {
        feasible_ = false;
        return;
      }
      SrcFact sf{r, {}, {}};
      for (std::size_t p = 0; p < f.args.size(); ++p) {
        const auto v = static_cast<std::uint32_t>(*src_.position(f.args[p]));
        int first = static_cast<int>(p);
        for (std::size_t q = 0; q < p; ++q) {
          if (sf.vars[q] == v) {
            first = static_cast<int>(q);
            break;
          }
        }
        sf.vars.push_back(v);
        sf.first.push_back(first);
        dom_[v] &= r->proj[p];
      }
      for (std::size_t p = 0; p < sf.vars.size(); ++p) {
        if (sf.first[p] == static_cast<int>(p)) var_facts_[sf.vars[p]].push_back(static_cast<std::uint32_t>(facts_.size()));
      }
      facts_.push_back(std::move(sf));
    }
    for (std::size_t i = 0; i < src.point.size(); ++i) {
      const Value a = src.point[i];
      const Value b = dst_point[i];
      auto sp = src_.position(a);
      if (!sp) {
        auto [it, inserted] = fixed_.emplace(a, b);
        if (!inserted && it->second != b) throw UsageError("unsatisfiable point constraint");
        continue;
      }
      auto dp = dst_.position(b);
      if (!dp) {
        feasible_ = false;
        return;
      }
      Bits only(m_);
      only.set(*dp);
      dom_[*sp] &= only;
    }
    for (const auto& d : dom_) {
      if (d.none()) {
        feasible_ = false;
        return;
      }
    }
    feasible_ = arc_consistency();
  }

  bool feasible() const { return feasible_; }

  std::optional<ValueMap> find() {
    if (!feasible_ || !complete()) return std::nullopt;
    ValueMap h = fixed_;
    for (std::size_t v = 0; v < n_; ++v) h[src_.adom()[v]] = dst_.adom()[assign_[v]];
    return h;
  }

  void images(const std::vector<Value>& project, const ImageVisitor& visit) {
    std::vector<int> vars;
    std::vector<Value> out(project.size());
    for (std::size_t i = 0; i < project.size(); ++i) {
      if (auto p = src_.position(project[i])) {
        vars.push_back(static_cast<int>(*p));
      } else if (auto it = fixed_.find(project[i]); it != fixed_.end()) {
        vars.push_back(kUnassigned);
        out[i] = it->second;
      } else {
        throw UsageError("value " + project[i].to_string() + " is not in the source");
      }
    }
    if (!feasible_) return;
    enumerate(vars, 0, out, visit);
  }

 private:
  void tick() {
    if (++nodes_ > max_nodes_) throw ResourceLimit("homomorphism search exceeded its node limit");
  }

  // Restricts the domains of the unassigned variables of f to values with a supporting tuple.
  bool filter(const SrcFact& f) {
    const Rel& r = *f.rel;
    const int a = r.arity;
    bool all = true;
    const std::vector<std::uint32_t>* best = nullptr;
    for (int p = 0; p < a; ++p) {
      const int val = assign_[f.vars[p]];
      if (val == kUnassigned) {
        all = false;
      } else if (!best || r.by_pos[p][val].size() < best->size()) {
        best = &r.by_pos[p][val];
      }
    }
    if (all) {
      scratch_tuple_.resize(a);
      for (int p = 0; p < a; ++p) scratch_tuple_[p] = static_cast<std::uint32_t>(assign_[f.vars[p]]);
      return r.has(scratch_tuple_.data());
    }
    if (support_.size() < static_cast<std::size_t>(a)) support_.resize(a);
    for (int p = 0; p < a; ++p) {
      if (assign_[f.vars[p]] == kUnassigned && f.first[p] == p) {
        support_[p].resize(m_);
        support_[p].reset();
      }
    }
    auto consider = [&](const std::uint32_t* t) {
      for (int p = 0; p < a; ++p) {
        const std::uint32_t v = f.vars[p];
        if (f.first[p] != p) {
          if (t[p] != t[f.first[p]]) return;
          continue;
        }
        const int val = assign_[v];
        if (val != kUnassigned) {
          if (t[p] != static_cast<std::uint32_t>(val)) return;
        } else if (!dom_[v].test(t[p])) {
          return;
        }
      }
      for (int p = 0; p < a; ++p) {
        if (f.first[p] == p && assign_[f.vars[p]] == kUnassigned) support_[p].set(t[p]);
      }
    };
    if (best) {
      for (std::uint32_t t : *best) consider(r.tuple(t));
    } else {
      for (std::size_t t = 0; t < r.count; ++t) consider(r.tuple(t));
    }
    for (int p = 0; p < a; ++p) {
      const std::uint32_t v = f.vars[p];
      if (f.first[p] != p || assign_[v] != kUnassigned) continue;
      dom_[v] &= support_[p];
      if (dom_[v].none()) return false;
    }
    return true;
  }

  bool arc_consistency() {
    bool changed = true;
    while (changed) {
      changed = false;
      for (const SrcFact& f : facts_) {
        std::size_t before = 0;
        for (std::uint32_t v : f.vars) before += dom_[v].count();
        if (!filter(f)) return false;
        std::size_t after = 0;
        for (std::uint32_t v : f.vars) after += dom_[v].count();
        if (after != before) changed = true;
      }
    }
    return true;
  }

  bool set(std::uint32_t v, std::size_t val) {
    assign_[v] = static_cast<int>(val);
    dom_[v].reset();
    dom_[v].set(val);
    for (std::uint32_t f : var_facts_[v]) {
      if (!filter(facts_[f])) return false;
    }
    return true;
  }

  int pick() const {
    int best = kUnassigned;
    std::size_t best_size = std::numeric_limits<std::size_t>::max();
    std::size_t best_degree = 0;
    for (std::size_t v = 0; v < n_; ++v) {
      if (assign_[v] != kUnassigned) continue;
      const std::size_t c = dom_[v].count();
      const std::size_t d = var_facts_[v].size();
      if (c < best_size || (c == best_size && d > best_degree)) {
        best = static_cast<int>(v);
        best_size = c;
        best_degree = d;
      }
    }
    return best;
  }

  bool complete() {
    const int v = pick();
    if (v == kUnassigned) return true;
    const Bits d = dom_[v];
    for (auto val = d.find_first(); val != Bits::npos; val = d.find_next(val)) {
      tick();
      auto saved_dom = dom_;
      auto saved_assign = assign_;
      if (set(static_cast<std::uint32_t>(v), val) && complete()) return true;
      dom_ = std::move(saved_dom);
      assign_ = std::move(saved_assign);
    }
    return false;
  }

  bool enumerate(const std::vector<int>& vars, std::size_t k, std::vector<Value>& out, const ImageVisitor& visit) {
    if (k == vars.size()) {
      auto saved_dom = dom_;
      auto saved_assign = assign_;
      const bool found = complete();
      dom_ = std::move(saved_dom);
      assign_ = std::move(saved_assign);
      return found ? visit(out) : true;
    }
    const int v = vars[k];
    if (v == kUnassigned) return enumerate(vars, k + 1, out, visit);
    if (assign_[v] != kUnassigned) {
      out[k] = dst_.adom()[assign_[v]];
      return enumerate(vars, k + 1, out, visit);
    }
    const Bits d = dom_[v];
    for (auto val = d.find_first(); val != Bits::npos; val = d.find_next(val)) {
      tick();
      auto saved_dom = dom_;
      auto saved_assign = assign_;
      if (set(static_cast<std::uint32_t>(v), val)) {
        out[k] = dst_.adom()[val];
        if (!enumerate(vars, k + 1, out, visit)) return false;
      }
      dom_ = std::move(saved_dom);
      assign_ = std::move(saved_assign);
    }
    return true;
  }

  const Instance& src_;
  const Instance& dst_;
  const TargetIndex& T_;
  std::size_t n_;
  std::size_t m_;
  std::size_t max_nodes_;
  std::size_t nodes_ = 0;
  bool feasible_ = true;
  std::vector<SrcFact> facts_;
  std::vector<std::vector<std::uint32_t>> var_facts_;
  std::vector<int> assign_;
  std::vector<Bits> dom_;
  std::vector<Bits> support_;
  std::vector<std::uint32_t> scratch_tuple_;
  ValueMap fixed_;
};

}  // namespace

std::optional<ValueMap> find_homomorphism(const PointedInstance& src, const HomTarget& dst,
                                          std::span<const Value> dst_point, const Limits& limits) {
  Search s(src, dst, dst_point, limits);
  return s.find();
}

std::optional<ValueMap> find_homomorphism(const PointedInstance& src, const PointedInstance& dst,
                                          const Limits& limits) {
  HomTarget t(dst.instance);
  return find_homomorphism(src, t, dst.point, limits);
}

bool has_homomorphism(const PointedInstance& src, const HomTarget& dst, std::span<const Value> dst_point,
                      const Limits& limits) {
  return find_homomorphism(src, dst, dst_point, limits).has_value();
}

bool has_homomorphism(const PointedInstance& src, const PointedInstance& dst, const Limits& limits) {
  return find_homomorphism(src, dst, limits).has_value();
}

bool has_homomorphism(const Instance& src, const Instance& dst, const Limits& limits) {
  return has_homomorphism(PointedInstance{src, {}}, PointedInstance{dst, {}}, limits);
}

void for_each_image(const PointedInstance& src, const HomTarget& dst, std::span<const Value> dst_point,
                    const std::vector<Value>& project, const ImageVisitor& visit, const Limits& limits) {
  Search s(src, dst, dst_point, limits);
  s.images(project, visit);
}

void for_each_image(const PointedInstance& src, const PointedInstance& dst, const std::vector<Value>& project,
                    const ImageVisitor& visit, const Limits& limits) {
  HomTarget t(dst.instance);
  for_each_image(src, t, dst.point, project, visit, limits);
}

std::vector<ValueMap> all_homomorphisms(const PointedInstance& src, const PointedInstance& dst,
                                        const Limits& limits) {
  std::vector<ValueMap> out;
  const auto& dom = src.instance.adom();
  std::vector<Value> project(dom.begin(), dom.end());
  for (Value a : src.point) {
    if (!src.instance.in_adom(a)) project.push_back(a);
  }
  for_each_image(
      src, dst, project,
      [&](const std::vector<Value>& img) {
        ValueMap h;
        for (std::size_t i = 0; i < project.size(); ++i) h[project[i]] = img[i];
        out.push_back(std::move(h));
        return true;
      },
      limits);
  return out;
}

}  // namespace ontofit
