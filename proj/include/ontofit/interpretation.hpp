#pragma once

#include <boost/dynamic_bitset.hpp>
#include <cstdint>
#include <memory>
#include <vector>

#include "ontofit/concept.hpp"
#include "ontofit/instance.hpp"

namespace ontofit {

using Bitset = boost::dynamic_bitset<>;

// Concept and role names; shared by all interpretations compared with each other.
struct Signature {
  std::vector<Symbol> names;
  std::vector<Symbol> roles;

  // Throws DialectError on symbols of arity > 2.
  static Signature of(const Schema& schema);
  int name_index(Symbol s) const;  // -1 if absent
  int role_index(Symbol s) const;
};

// Finite interpretation over elements 0..size-1.
class Interpretation {
 public:
  Interpretation() = default;
  explicit Interpretation(std::shared_ptr<const Signature> sig, std::size_t size = 0);

  // Elements in adom order.
  static Interpretation from_instance(const Instance& instance, std::shared_ptr<const Signature> sig);
  // One element carrying every concept name and a loop for every role.
  static Interpretation universal(std::shared_ptr<const Signature> sig);

  std::size_t size() const { return size_; }
  const Signature& signature() const { return *sig_; }
  const std::shared_ptr<const Signature>& signature_ptr() const { return sig_; }

  std::uint32_t add_element();
  void add_label(std::uint32_t d, int name);
  void add_edge(int role, std::uint32_t from, std::uint32_t to);

  const Bitset& label(std::uint32_t d) const { return labels_[d]; }
  // inverse = false: R-successors; inverse = true: R-predecessors
  const std::vector<std::uint32_t>& neighbours(int role, bool inverse, std::uint32_t d) const {
    return inverse ? pred_[role][d] : succ_[role][d];
  }

  // Elements reachable from `start` along roles (and inverse roles if `inverse`).
  std::vector<std::uint32_t> reachable(const std::vector<std::uint32_t>& start, bool inverse) const;

 private:
  std::shared_ptr<const Signature> sig_;
  std::size_t size_ = 0;
  std::vector<Bitset> labels_;
  std::vector<std::vector<std::vector<std::uint32_t>>> succ_, pred_;
};

// Product interpretation restricted to the part reachable from the point.
// Element 0 of the result is the point.
struct PointedProduct {
  Interpretation interp;
  std::vector<std::vector<std::uint32_t>> components;  // per element
};

PointedProduct reachable_product(const std::vector<const Interpretation*>& factors,
                                 const std::vector<std::uint32_t>& point, bool inverse, std::size_t cap);

// Full Cartesian product; element index is mixed radix with factor 0 fastest.
Interpretation full_product(const std::vector<const Interpretation*>& factors, std::size_t cap);
std::vector<std::uint32_t> product_components(const std::vector<const Interpretation*>& factors, std::uint64_t index);

}  // namespace ontofit
