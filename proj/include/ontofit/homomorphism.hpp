#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

#include "ontofit/instance.hpp"
#include "ontofit/limits.hpp"

namespace ontofit {

using ValueMap = std::unordered_map<Value, Value>;
// Return false to stop the enumeration.
using ImageVisitor = std::function<bool(const std::vector<Value>&)>;

namespace detail {
struct TargetIndex;
}

// Per-symbol fact indexes of a target instance, reusable across searches.
// The instance must outlive the target.
class HomTarget {
 public:
  explicit HomTarget(const Instance& dst);
  ~HomTarget();
  HomTarget(HomTarget&&) noexcept;
  HomTarget& operator=(HomTarget&&) noexcept;

  const Instance& instance() const { return *dst_; }
  const detail::TargetIndex& index() const { return *index_; }

 private:
  const Instance* dst_;
  std::unique_ptr<detail::TargetIndex> index_;
};

// A map on adom(src) (plus any point values outside it) preserving facts and
// sending src.point to dst.point. Throws UsageError on arity mismatch and on
// an out-of-domain point value required to map to two different targets.
std::optional<ValueMap> find_homomorphism(const PointedInstance& src, const PointedInstance& dst,
                                          const Limits& limits = {});
std::optional<ValueMap> find_homomorphism(const PointedInstance& src, const HomTarget& dst,
                                          std::span<const Value> dst_point, const Limits& limits = {});

bool has_homomorphism(const PointedInstance& src, const PointedInstance& dst, const Limits& limits = {});
bool has_homomorphism(const Instance& src, const Instance& dst, const Limits& limits = {});
bool has_homomorphism(const PointedInstance& src, const HomTarget& dst, std::span<const Value> dst_point,
                      const Limits& limits = {});

// Visits each distinct tuple h(project) over homomorphisms h, once.
void for_each_image(const PointedInstance& src, const PointedInstance& dst, const std::vector<Value>& project,
                    const ImageVisitor& visit, const Limits& limits = {});
void for_each_image(const PointedInstance& src, const HomTarget& dst, std::span<const Value> dst_point,
                    const std::vector<Value>& project, const ImageVisitor& visit, const Limits& limits = {});

std::vector<ValueMap> all_homomorphisms(const PointedInstance& src, const PointedInstance& dst,
                                        const Limits& limits = {});

}  // namespace ontofit
