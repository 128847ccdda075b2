#include "ontofit/simulation.hpp"

#include <deque>

#include "ontofit/errors.hpp"

namespace ontofit {

SimulationTable max_simulation(const Interpretation& I, const Interpretation& J, bool inverse) {
  const auto& sig = I.signature();
  const std::size_t n = I.size();
  const std::size_t m = J.size();
  const int R = static_cast<int>(sig.roles.size());
  const int K = inverse ? 2 * R : R;
  SimulationTable t;
  t.left = n;
  t.right = m;
  t.related.resize(n * m);
  t.related.set();
  t.separators.assign(n * m, Concept::top());
  auto role_of = [&](int k) { return Role{sig.roles[k % R], k >= R}; };
  auto nb = [&](const Interpretation& X, int k, std::uint32_t x) -> const std::vector<std::uint32_t>& {
    return X.neighbours(k % R, k >= R, x);
  };
  auto back = [&](const Interpretation& X, int k, std::uint32_t x) -> const std::vector<std::uint32_t>& {
    return X.neighbours(k % R, k < R, x);
  };

  std::deque<std::pair<std::uint32_t, std::uint32_t>> queue;
  auto remove = [&](std::uint32_t d, std::uint32_t e, int k, std::uint32_t dn) {
    t.related.reset(d * m + e);
    std::vector<Concept> parts;
    for (auto en : nb(J, k, e)) parts.push_back(t.separator(dn, en));
    t.separators[d * m + e] = Concept::exists(role_of(k), Concept::conj(parts));
    queue.emplace_back(d, e);
  };

  for (std::uint32_t d = 0; d < n; ++d) {
    for (std::uint32_t e = 0; e < m; ++e) {
      const Bitset missing = I.label(d) - J.label(e);
      if (missing.none()) continue;
      t.related.reset(d * m + e);
      t.separators[d * m + e] = Concept::name(sig.names[missing.find_first()]);
      queue.emplace_back(d, e);
    }
  }
  // cnt[k][d' * m + e]: number of k-neighbours e' of e with (d', e') still related
  std::vector<std::vector<std::uint32_t>> cnt(K, std::vector<std::uint32_t>(n * m));
  for (int k = 0; k < K; ++k) {
    for (std::uint32_t e = 0; e < m; ++e) {
      const auto c = static_cast<std::uint32_t>(nb(J, k, e).size());
      for (std::uint32_t dn = 0; dn < n; ++dn) cnt[k][dn * m + e] = c;
    }
  }
  for (std::uint32_t d = 0; d < n; ++d) {
    for (std::uint32_t e = 0; e < m; ++e) {
      if (!t.contains(d, e)) continue;
      for (int k = 0; k < K && t.contains(d, e); ++k) {
        if (!nb(I, k, d).empty() && nb(J, k, e).empty()) remove(d, e, k, nb(I, k, d).front());
      }
    }
  }
  while (!queue.empty()) {
    const auto [dn, en] = queue.front();
    queue.pop_front();
    for (int k = 0; k < K; ++k) {
      for (auto e : back(J, k, en)) {
        if (--cnt[k][dn * m + e] != 0) continue;
        for (auto d : back(I, k, dn)) {
          if (t.contains(d, e)) remove(d, e, k, dn);
        }
      }
    }
  }
  return t;
}

const Bitset& ExtensionEvaluator::operator()(Concept root) {
  if (auto it = memo_.find(root.id()); it != memo_.end()) return it->second;
  const auto& sig = I_.signature();
  const std::size_t n = I_.size();
  std::vector<std::pair<Concept, bool>> stack{{root, false}};
  while (!stack.empty()) {
    auto [c, expanded] = stack.back();
    stack.pop_back();
    if (memo_.count(c.id())) continue;
    const auto kind = c.kind();
    if (!expanded) {
      stack.push_back({c, true});
      if (kind == Concept::Kind::And) {
        for (Concept ch : c.children()) {
          if (!memo_.count(ch.id())) stack.push_back({ch, false});
        }
      } else if (kind == Concept::Kind::Exists) {
        if (!memo_.count(c.child().id())) stack.push_back({c.child(), false});
      }
      continue;
    }
    Bitset ext(n);
    switch (kind) {
      case Concept::Kind::Top:
        ext.set();
        break;
      case Concept::Kind::Bottom:
        break;
      case Concept::Kind::Name: {
        const int a = sig.name_index(c.symbol());
        if (a >= 0) {
          for (std::uint32_t d = 0; d < n; ++d) {
            if (I_.label(d).test(a)) ext.set(d);
          }
        }
        break;
      }
      case Concept::Kind::And: {
        ext.set();
        for (Concept ch : c.children()) ext &= memo_.at(ch.id());
        break;
      }
      case Concept::Kind::Exists: {
        const Role role = c.role();
        const int r = sig.role_index(role.name);
        if (r >= 0) {
          const Bitset& sub = memo_.at(c.child().id());
          for (auto x = sub.find_first(); x != Bitset::npos; x = sub.find_next(x)) {
            // d has x as r-successor (r- successor) iff x has d as r-predecessor (r-successor)
            for (auto d : I_.neighbours(r, !role.inverse, static_cast<std::uint32_t>(x))) ext.set(d);
          }
        }
        break;
      }
    }
    memo_.emplace(c.id(), std::move(ext));
  }
  return memo_.at(root.id());
}

Concept characteristic_concept(const Interpretation& I, std::uint32_t d, int depth, bool inverse) {
  const auto& sig = I.signature();
  const auto elems = I.reachable({d}, inverse);
  std::vector<Concept> base(I.size());
  for (auto e : elems) {
    std::vector<Concept> parts{Concept::top()};
    const Bitset& lab = I.label(e);
    for (auto a = lab.find_first(); a != Bitset::npos; a = lab.find_next(a)) {
      parts.push_back(Concept::name(sig.names[a]));
    }
    base[e] = Concept::conj(parts);
  }
  std::vector<Concept> cur = base;
  for (int i = 0; i < depth; ++i) {
    std::vector<Concept> next(I.size());
    for (auto e : elems) {
      std::vector<Concept> parts{base[e]};
      for (std::size_t r = 0; r < sig.roles.size(); ++r) {
        for (int dir = 0; dir < (inverse ? 2 : 1); ++dir) {
          for (auto f : I.neighbours(static_cast<int>(r), dir == 1, e)) {
            parts.push_back(Concept::exists(Role{sig.roles[r], dir == 1}, cur[f]));
          }
        }
      }
      next[e] = Concept::conj(parts);
    }
    cur = std::move(next);
  }
  return cur[d];
}

std::vector<std::uint32_t> simulation_minimal(const std::vector<std::uint32_t>& elements,
                                              const SimulationTable& self) {
  std::vector<std::uint32_t> out;
  for (std::size_t i = 0; i < elements.size(); ++i) {
    const auto e = elements[i];
    bool keep = true;
    for (std::size_t j = 0; j < elements.size() && keep; ++j) {
      const auto f = elements[j];
      if (i == j || f == e || !self.contains(f, e)) continue;
      if (j < i || !self.contains(e, f)) keep = false;
    }
    if (keep && std::find(out.begin(), out.end(), e) == out.end()) out.push_back(e);
  }
  return out;
}

std::optional<Concept> definable_concept(const Interpretation& I, const Bitset& X, Dialect dialect,
                                         const SimulationTable* self, std::size_t cap) {
  const bool inverse = allows_inverse(dialect);
  if (X.none() && allows_bottom(dialect)) return Concept::bottom();
  Interpretation product;
  if (X.none()) {
    product = Interpretation::universal(I.signature_ptr());
  } else {
    std::vector<std::uint32_t> members;
    for (auto x = X.find_first(); x != Bitset::npos; x = X.find_next(x)) members.push_back(static_cast<std::uint32_t>(x));
    SimulationTable own;
    if (!self) {
      own = max_simulation(I, I, inverse);
      self = &own;
    }
    members = simulation_minimal(members, *self);
    std::vector<const Interpretation*> factors(members.size(), &I);
    product = reachable_product(factors, members, inverse, cap).interp;
  }
  const SimulationTable sim = max_simulation(product, I, inverse);
  std::vector<Concept> parts;
  for (std::uint32_t e = 0; e < I.size(); ++e) {
    if (X.test(e)) continue;
    if (sim.contains(0, e)) return std::nullopt;
    parts.push_back(sim.separator(0, e));
  }
  const Concept c = Concept::conj(parts);
  ExtensionEvaluator ext(I);
  if (ext(c) != X) throw InvariantViolation("definable concept " + c.to_string() + " has the wrong extension");
  return c;
}

}  // namespace ontofit
