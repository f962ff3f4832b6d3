#include "flagiso/mclass.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace flagiso {

std::string ParityVector::to_string() const {
  std::string s;
  for (int i = 0; i < rank_; ++i) s += bit(i) ? '1' : '0';
  return s;
}

ParityVector parity_vector(const RootSystem& sys, RootIndex alpha) {
  std::uint32_t bits = 0;
  for (int i = 0; i < sys.rank(); ++i)
    if (sys.killing_number(sys.simple(i), alpha) & 1) bits |= std::uint32_t{1} << i;
  return ParityVector(sys.rank(), bits);
}

bool m_equivalent(const RootSystem& sys, RootIndex alpha, RootIndex beta) {
  return parity_vector(sys, alpha) == parity_vector(sys, beta);
}

bool m_equivalent_full(const RootSystem& sys, RootIndex alpha, RootIndex beta) {
  for (RootIndex g = 0; g < sys.num_roots(); ++g) {
    int a = sys.killing_number(g, alpha);
    int b = sys.killing_number(g, beta);
    if ((a - b) % 2 != 0) return false;
  }
  return true;
}

MClassPartition m_classes(const RootSystem& sys, const std::vector<RootIndex>& roots) {
  std::map<ParityVector, std::vector<RootIndex>> fibers;
  for (RootIndex r : roots) fibers[parity_vector(sys, r)].push_back(r);
  MClassPartition out;
  for (auto& [pv, block] : fibers) {
    std::sort(block.begin(), block.end());
    out.push_back(std::move(block));
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.front() < b.front(); });
  return out;
}

MClassPartition positive_m_classes(const RootSystem& sys) {
  std::vector<RootIndex> pos(sys.num_positive());
  std::iota(pos.begin(), pos.end(), RootIndex{0});
  return m_classes(sys, pos);
}

bool orthogonality_audit(const RootSystem& sys) {
  for (const auto& block : m_classes(sys, [&] {
         std::vector<RootIndex> all(sys.num_roots());
         std::iota(all.begin(), all.end(), RootIndex{0});
         return all;
       }()))
    for (std::size_t i = 0; i < block.size(); ++i)
      for (std::size_t j = i + 1; j < block.size(); ++j) {
        RootIndex a = block[i], b = block[j];
        if (b == sys.negate(a)) continue;
        if (sys.inner(a, b) != 0) return false;
      }
  return true;
}

} // namespace flagiso
