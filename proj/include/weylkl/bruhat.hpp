#pragma once

#include <cstdint>
#include <vector>

#include "weylkl/bitset.hpp"
#include "weylkl/parallel.hpp"
#include "weylkl/weyl.hpp"

namespace weylkl {

// Whole-group Bruhat order: one closure bitset per element, built layer by
// layer from [e,w] = [e,sw] u s[e,sw] for a left descent s of w. Layers are
// independent, which is what the parallel mode exploits.
class BruhatOrder {
 public:
  explicit BruhatOrder(const WeylGroup& g, ExecMode mode = ExecMode::parallel);

  const WeylGroup& group() const { return *g_; }
  bool leq(Element v, Element w) const;
  bool leq_ids(uint32_t v, uint32_t w) const { return rows_[w].test(v); }
  const DynBitset& closure(Element w) const;
  std::vector<uint32_t> closure_ids(Element w) const;  // ascending == by length
  std::vector<uint32_t> closure_ids(uint32_t w) const;

  bool operator==(const BruhatOrder& o) const { return rows_ == o.rows_; }

 private:
  const WeylGroup* g_;
  std::vector<DynBitset> rows_;
};

}  // namespace weylkl
