#include "weylkl/bruhat.hpp"

#include <stdexcept>

namespace weylkl {

namespace {

// A full matrix needs order^2 bits; keep it to sizes where that is sane.
constexpr uint32_t kMaxMatrixOrder = 1u << 17;

}  // namespace

BruhatOrder::BruhatOrder(const WeylGroup& g, ExecMode mode) : g_(&g) {
  const uint32_t sz = g.size();
  if (sz > kMaxMatrixOrder) {
    throw std::length_error("group too large for a full Bruhat closure matrix (order " +
                            std::to_string(sz) + ")");
  }
  rows_.assign(sz, DynBitset(sz));
  rows_[0].set(0);

  auto compute_row = [&](uint32_t wid) {
    Element w = g.element(wid);
    const int s = g.first_left_descent(w);
    const uint32_t u = g.left_multiply(s, w).id();
    DynBitset row = rows_[u];
    rows_[u].for_each_set([&](size_t x) {
      row.set(g.left_multiply(s, g.element(static_cast<uint32_t>(x))).id());
    });
    rows_[wid] = std::move(row);
  };

  for (int l = 1; l <= g.max_length(); ++l) {
    auto [lo, hi] = g.length_layer(l);
    if (mode == ExecMode::parallel) {
#pragma omp parallel for schedule(dynamic)
      for (long long wid = lo; wid < static_cast<long long>(hi); ++wid)
        compute_row(static_cast<uint32_t>(wid));
    } else {
      for (uint32_t wid = lo; wid < hi; ++wid) compute_row(wid);
    }
  }
}

bool BruhatOrder::leq(Element v, Element w) const {
  if (v.group_ptr() != g_ || w.group_ptr() != g_)
    throw std::invalid_argument("bruhat: element does not belong to this group");
  return rows_[w.id()].test(v.id());
}

const DynBitset& BruhatOrder::closure(Element w) const {
  if (w.group_ptr() != g_)
    throw std::invalid_argument("bruhat: element does not belong to this group");
  return rows_[w.id()];
}

std::vector<uint32_t> BruhatOrder::closure_ids(Element w) const {
  return closure_ids(w.id());
}

std::vector<uint32_t> BruhatOrder::closure_ids(uint32_t w) const {
  std::vector<uint32_t> out;
  out.reserve(rows_[w].count());
  rows_[w].for_each_set([&](size_t x) { out.push_back(static_cast<uint32_t>(x)); });
  return out;
}

}  // namespace weylkl
