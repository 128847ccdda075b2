#pragma once

#include <cstdint>
#include <functional>
#include <vector>

namespace ontofit::detail {

// Restricted growth strings of length n with at most max_blocks blocks:
// s[0] = 0 and s[i] <= max(s[0..i-1]) + 1. Return false from visit to stop.
inline bool for_each_rgs(std::size_t n, std::size_t max_blocks,
                         const std::function<bool(const std::vector<std::uint32_t>&)>& visit,
                         std::uint32_t first_fresh = 0) {
  std::vector<std::uint32_t> s(n, 0);
  std::function<bool(std::size_t, std::uint32_t)> rec = [&](std::size_t i, std::uint32_t blocks) -> bool {
    if (i == n) return visit(s);
    const std::uint32_t limit = std::min<std::uint32_t>(blocks + 1, static_cast<std::uint32_t>(max_blocks));
    for (std::uint32_t v = 0; v < limit; ++v) {
      s[i] = v;
      if (!rec(i + 1, std::max(blocks, v + 1))) return false;
    }
    return true;
  };
  return rec(0, first_fresh);
}

// Renumbers values in order of first occurrence.
inline std::vector<std::uint32_t> normalize_rgs(const std::vector<std::uint32_t>& s) {
  std::vector<std::int64_t> map;
  std::vector<std::uint32_t> out;
  out.reserve(s.size());
  std::uint32_t next = 0;
  for (auto v : s) {
    if (v >= map.size()) map.resize(v + 1, -1);
    if (map[v] < 0) map[v] = next++;
    out.push_back(static_cast<std::uint32_t>(map[v]));
  }
  return out;
}

}  // namespace ontofit::detail
