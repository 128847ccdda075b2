#include "ontofit/interpretation.hpp"

#include <deque>
#include <string>
#include <unordered_map>

#include "ontofit/errors.hpp"

namespace ontofit {

Signature Signature::of(const Schema& schema) {
  Signature sig;
  for (Symbol s : schema.symbols()) {
    const int a = symbol_arity(s);
    if (a == 1) {
      sig.names.push_back(s);
    } else if (a == 2) {
      sig.roles.push_back(s);
    } else {
      throw DialectError("symbol " + symbol_name(s) + " has arity " + std::to_string(a) +
                         "; concepts need unary and binary symbols only");
    }
  }
  return sig;
}

int Signature::name_index(Symbol s) const {
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (names[i] == s) return static_cast<int>(i);
  }
  return -1;
}

int Signature::role_index(Symbol s) const {
  for (std::size_t i = 0; i < roles.size(); ++i) {
    if (roles[i] == s) return static_cast<int>(i);
  }
  return -1;
}

Interpretation::Interpretation(std::shared_ptr<const Signature> sig, std::size_t size) : sig_(std::move(sig)) {
  succ_.resize(sig_->roles.size());
  pred_.resize(sig_->roles.size());
  for (std::size_t i = 0; i < size; ++i) add_element();
}

std::uint32_t Interpretation::add_element() {
  labels_.emplace_back(sig_->names.size());
  for (auto& r : succ_) r.emplace_back();
  for (auto& r : pred_) r.emplace_back();
  return static_cast<std::uint32_t>(size_++);
}

void Interpretation::add_label(std::uint32_t d, int name) { labels_[d].set(name); }

void Interpretation::add_edge(int role, std::uint32_t from, std::uint32_t to) {
  succ_[role][from].push_back(to);
  pred_[role][to].push_back(from);
}

Interpretation Interpretation::from_instance(const Instance& instance, std::shared_ptr<const Signature> sig) {
  Interpretation out(sig, instance.adom().size());
  for (const Fact& f : instance.facts()) {
    const int a = symbol_arity(f.symbol);
    if (a > 2) throw DialectError("symbol " + symbol_name(f.symbol) + " has arity > 2");
    if (a == 1) {
      const int n = sig->name_index(f.symbol);
      if (n >= 0) out.add_label(static_cast<std::uint32_t>(*instance.position(f.args[0])), n);
    } else {
      const int r = sig->role_index(f.symbol);
      if (r >= 0) {
        out.add_edge(r, static_cast<std::uint32_t>(*instance.position(f.args[0])),
                     static_cast<std::uint32_t>(*instance.position(f.args[1])));
      }
    }
  }
  return out;
}

Interpretation Interpretation::universal(std::shared_ptr<const Signature> sig) {
  Interpretation out(sig, 1);
  for (std::size_t n = 0; n < sig->names.size(); ++n) out.add_label(0, static_cast<int>(n));
  for (std::size_t r = 0; r < sig->roles.size(); ++r) out.add_edge(static_cast<int>(r), 0, 0);
  return out;
}

std::vector<std::uint32_t> Interpretation::reachable(const std::vector<std::uint32_t>& start, bool inverse) const {
  std::vector<bool> seen(size_, false);
  std::vector<std::uint32_t> order;
  for (auto s : start) {
    if (!seen[s]) {
      seen[s] = true;
      order.push_back(s);
    }
  }
  for (std::size_t i = 0; i < order.size(); ++i) {
    const auto d = order[i];
    for (std::size_t r = 0; r < succ_.size(); ++r) {
      for (int dir = 0; dir < (inverse ? 2 : 1); ++dir) {
        for (auto e : neighbours(static_cast<int>(r), dir == 1, d)) {
          if (!seen[e]) {
            seen[e] = true;
            order.push_back(e);
          }
        }
      }
    }
  }
  return order;
}

namespace {

std::string key_of(const std::vector<std::uint32_t>& c) {
  return std::string(reinterpret_cast<const char*>(c.data()), c.size() * sizeof(std::uint32_t));
}

// Calls f for every tuple in the Cartesian product of the lists.
template <class F>
void cartesian(const std::vector<const std::vector<std::uint32_t>*>& lists, F f) {
  for (auto* l : lists) {
    if (l->empty()) return;
  }
  const std::size_t k = lists.size();
  std::vector<std::size_t> idx(k, 0);
  std::vector<std::uint32_t> cur(k);
  while (true) {
    for (std::size_t j = 0; j < k; ++j) cur[j] = (*lists[j])[idx[j]];
    f(cur);
    std::size_t j = 0;
    while (j < k && ++idx[j] == lists[j]->size()) idx[j++] = 0;
    if (j == k) return;
  }
}

}  // namespace

PointedProduct reachable_product(const std::vector<const Interpretation*>& factors,
                                 const std::vector<std::uint32_t>& point, bool inverse, std::size_t cap) {
  if (factors.empty()) throw UsageError("product of no interpretations");
  const auto sig = factors[0]->signature_ptr();
  const std::size_t k = factors.size();
  PointedProduct out{Interpretation(sig), {}};
  std::unordered_map<std::string, std::uint32_t> index;
  auto lookup = [&](const std::vector<std::uint32_t>& c) {
    auto [it, inserted] = index.emplace(key_of(c), static_cast<std::uint32_t>(out.components.size()));
    if (inserted) {
      if (out.components.size() >= cap) throw ResourceLimit("product interpretation exceeds the size cap");
      out.interp.add_element();
      out.components.push_back(c);
      Bitset lab = factors[0]->label(c[0]);
      for (std::size_t j = 1; j < k; ++j) lab &= factors[j]->label(c[j]);
      for (auto n = lab.find_first(); n != Bitset::npos; n = lab.find_next(n)) {
        out.interp.add_label(it->second, static_cast<int>(n));
      }
    }
    return it->second;
  };
  lookup(point);
  std::vector<const std::vector<std::uint32_t>*> lists(k);
  for (std::size_t i = 0; i < out.components.size(); ++i) {
    const auto c = out.components[i];
    for (std::size_t r = 0; r < sig->roles.size(); ++r) {
      for (std::size_t j = 0; j < k; ++j) lists[j] = &factors[j]->neighbours(static_cast<int>(r), false, c[j]);
      cartesian(lists, [&](const std::vector<std::uint32_t>& t) {
        const auto e = lookup(t);
        out.interp.add_edge(static_cast<int>(r), static_cast<std::uint32_t>(i), e);
      });
      if (inverse) {
        for (std::size_t j = 0; j < k; ++j) lists[j] = &factors[j]->neighbours(static_cast<int>(r), true, c[j]);
        cartesian(lists, [&](const std::vector<std::uint32_t>& t) { lookup(t); });
      }
    }
  }
  return out;
}

std::vector<std::uint32_t> product_components(const std::vector<const Interpretation*>& factors,
                                              std::uint64_t index) {
  std::vector<std::uint32_t> c;
  for (const auto* f : factors) {
    c.push_back(static_cast<std::uint32_t>(index % f->size()));
    index /= f->size();
  }
  return c;
}

Interpretation full_product(const std::vector<const Interpretation*>& factors, std::size_t cap) {
  if (factors.empty()) throw UsageError("product of no interpretations");
  const auto sig = factors[0]->signature_ptr();
  double total = 1;
  for (const auto* f : factors) total *= static_cast<double>(f->size());
  if (total > static_cast<double>(cap)) throw ResourceLimit("product interpretation exceeds the size cap");
  const auto n = static_cast<std::size_t>(total);
  Interpretation out(sig, n);
  const std::size_t k = factors.size();
  std::vector<const std::vector<std::uint32_t>*> lists(k);
  for (std::size_t i = 0; i < n; ++i) {
    const auto c = product_components(factors, i);
    Bitset lab = factors[0]->label(c[0]);
    for (std::size_t j = 1; j < k; ++j) lab &= factors[j]->label(c[j]);
    for (auto x = lab.find_first(); x != Bitset::npos; x = lab.find_next(x)) {
      out.add_label(static_cast<std::uint32_t>(i), static_cast<int>(x));
    }
    for (std::size_t r = 0; r < sig->roles.size(); ++r) {
      for (std::size_t j = 0; j < k; ++j) lists[j] = &factors[j]->neighbours(static_cast<int>(r), false, c[j]);
      cartesian(lists, [&](const std::vector<std::uint32_t>& t) {
        std::uint64_t idx = 0;
        for (std::size_t j = k; j-- > 0;) idx = idx * factors[j]->size() + t[j];
        out.add_edge(static_cast<int>(r), static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(idx));
      });
    }
  }
  return out;
}

}  // namespace ontofit
