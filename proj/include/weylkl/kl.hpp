#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <span>
#include <utility>
#include <vector>

#include "weylkl/bruhat.hpp"
#include "weylkl/parallel.hpp"
#include "weylkl/polynomial.hpp"
#include "weylkl/weyl.hpp"

namespace weylkl {

// Kazhdan-Lusztig polynomials P_{v,w}, mu-coefficients, inverse polynomials
// Q_{v,w}, and the companion R-polynomial family for one group.
//
// The main table is filled by the standard recursion, one row per w, taking
// the lowest-index left descent at every step so results are deterministic.
// kl_via_r() recovers the same polynomials by triangular solve from the
// R-polynomial functional equation and shares no code with the recursion;
// it exists so the two routes can be checked against each other.
//
// Queries fill rows lazily under an internal mutex. fill() computes the
// whole table, layer by layer; in parallel mode the rows of one length
// layer are computed concurrently (they only read shorter rows). fill()
// must not race with concurrent queries on the same context.
class KLContext {
 public:
  explicit KLContext(std::shared_ptr<const WeylGroup> g,
                     ExecMode bruhat_mode = ExecMode::parallel);

  const WeylGroup& group() const { return *g_; }
  std::shared_ptr<const WeylGroup> group_ptr() const { return g_; }
  const BruhatOrder& bruhat() const { return bruhat_; }

  // P_{v,w}; the zero polynomial when v is not <= w.
  Polynomial kl(Element v, Element w);
  // Coefficient of q^{(l(w)-l(v)-1)/2} in P_{v,w}; 0 for even length gaps.
  // Requires v < w strictly, throws std::domain_error otherwise.
  int64_t mu(Element v, Element w);
  Polynomial r_polynomial(Element v, Element w);
  // Q_{v,w}, the inverse family: sum over x<=z<=y of
  // (-1)^{l(z)-l(x)} P_{x,z} Q_{z,y} = delta_{x,y}.
  Polynomial inverse_kl(Element v, Element w);
  // Independent validation route (triangular solve from R-polynomials).
  Polynomial kl_via_r(Element v, Element w);

  void fill(ExecMode mode = ExecMode::parallel);
  bool filled() const { return filled_; }

  std::vector<std::pair<Element, Polynomial>> kl_row(Element w);
  // Recompute row w using the given left descent at the top level only.
  std::vector<std::pair<Element, Polynomial>> kl_row_with_descent(Element w, int s);

  // Zero-copy row access, valid once row w has been computed (after fill()
  // or any query that touched w). Support ids ascend, aligned with polys.
  bool row_ready(Element w) const { return rows_[w.id()].done; }
  std::span<const uint32_t> row_support(Element w) const;
  std::span<const Polynomial> row_polys(Element w) const;

 private:
  struct Row {
    std::vector<uint32_t> xs;   // ids x with x <= w, ascending
    std::vector<Polynomial> ps;
    bool done = false;
  };

  static const Polynomial& lookup(const Row& row, uint32_t x);
  Row compute_row(uint32_t w, int s_choice) const;
  void ensure_rows(uint32_t w);  // caller holds mutex_
  const Polynomial& r_poly_ids(uint32_t v, uint32_t w);
  const Row& r_solve_row(uint32_t w);
  const Row& q_column(uint32_t w);

  std::shared_ptr<const WeylGroup> g_;
  BruhatOrder bruhat_;
  std::vector<Row> rows_;
  bool filled_ = false;
  std::map<std::pair<uint32_t, uint32_t>, Polynomial> rmemo_;
  std::map<uint32_t, Row> rsolve_;  // per-w triangular-solve rows
  std::map<uint32_t, Row> qcols_;   // per-w inverse-KL columns
  std::mutex mutex_;
};

}  // namespace weylkl
