#include "weylkl/kl.hpp"

#include <algorithm>
#include <stdexcept>

namespace weylkl {

namespace {

const Polynomial kZero{};

}  // namespace

KLContext::KLContext(std::shared_ptr<const WeylGroup> g, ExecMode bruhat_mode)
    : g_(std::move(g)), bruhat_(*g_, bruhat_mode) {
  rows_.resize(g_->size());
}

const Polynomial& KLContext::lookup(const Row& row, uint32_t x) {
  auto it = std::lower_bound(row.xs.begin(), row.xs.end(), x);
  if (it == row.xs.end() || *it != x) return kZero;
  return row.ps[static_cast<size_t>(it - row.xs.begin())];
}

// One row of the table: P_{x,w} for every x <= w, by the recursion
//   P_{x,w} = q^{1-c} P_{sx,u} + q^c P_{x,u}
//             - sum_{z: sz<z} mu(z,u) q^{(l(w)-l(z))/2} P_{x,z}
// with u = sw for a left descent s of w and c = 1 iff sx < x. Rows of all
// shorter elements must already be present. s_choice = 0 picks the lowest
// left descent; anything else forces that descent at this level only.
KLContext::Row KLContext::compute_row(uint32_t wid, int s_choice) const {
  const WeylGroup& g = *g_;
  Row out;
  out.xs = bruhat_.closure_ids(wid);
  out.ps.resize(out.xs.size());
  if (wid == 0) {
    out.ps[0] = Polynomial(1);
    out.done = true;
    return out;
  }

  const Element w = g.element(wid);
  const int s = s_choice != 0 ? s_choice : g.first_left_descent(w);
  if (!g.is_left_descent(s, w))
    throw std::invalid_argument("compute_row: s is not a left descent of w");
  const uint32_t uid = g.left_multiply(s, w).id();
  const Row& urow = rows_[uid];
  if (!urow.done) throw std::logic_error("KL row dependency not computed");

  const int lw = g.length(w);
  struct MuTerm {
    uint32_t z;
    int64_t mu;
    int exp;
  };
  std::vector<MuTerm> mus;
  for (size_t k = 0; k < urow.xs.size(); ++k) {
    const uint32_t z = urow.xs[k];
    const int gap = (lw - 1) - g.length(g.element(z));
    if (gap <= 0 || gap % 2 == 0) continue;
    const int64_t m = urow.ps[k].coeff((gap - 1) / 2);
    if (m == 0) continue;
    if (!g.is_left_descent(s, g.element(z))) continue;
    mus.push_back({z, m, (lw - g.length(g.element(z))) / 2});
  }

  for (size_t k = 0; k < out.xs.size(); ++k) {
    const Element x = g.element(out.xs[k]);
    const Element sx = g.left_multiply(s, x);
    const int c = g.length(sx) < g.length(x) ? 1 : 0;
    Polynomial p = lookup(urow, sx.id()).shifted(1 - c) + lookup(urow, x.id()).shifted(c);
    for (const MuTerm& t : mus) {
      if (!bruhat_.leq_ids(x.id(), t.z)) continue;
      const Polynomial& pxz = lookup(rows_[t.z], x.id());
      if (pxz.is_zero()) continue;
      p -= (pxz * Polynomial(t.mu)).shifted(t.exp);
    }
    if (p.coeff(0) != 1) throw std::logic_error("KL recursion: constant term != 1");
    if (out.xs[k] != wid && 2 * p.degree() > lw - g.length(x) - 1)
      throw std::logic_error("KL recursion: degree bound violated");
    if (out.xs[k] == wid && !p.is_one()) throw std::logic_error("KL recursion: P_{w,w} != 1");
    out.ps[k] = std::move(p);
  }
  out.done = true;
  return out;
}

void KLContext::ensure_rows(uint32_t wid) {
  if (rows_[wid].done) return;
  for (uint32_t id : bruhat_.closure_ids(wid)) {
    if (!rows_[id].done) rows_[id] = compute_row(id, 0);
  }
}

Polynomial KLContext::kl(Element v, Element w) {
  if (v.group_ptr() != g_.get() || w.group_ptr() != g_.get())
    throw std::invalid_argument("kl: element does not belong to this group");
  if (!bruhat_.leq(v, w)) return {};
  std::lock_guard<std::mutex> lock(mutex_);
  ensure_rows(w.id());
  return lookup(rows_[w.id()], v.id());
}

int64_t KLContext::mu(Element v, Element w) {
  if (v.group_ptr() != g_.get() || w.group_ptr() != g_.get())
    throw std::invalid_argument("mu: element does not belong to this group");
  if (v == w) throw std::domain_error("mu: v = w");
  if (!bruhat_.leq(v, w)) throw std::domain_error("mu: v is not <= w");
  const int gap = g_->length(w) - g_->length(v);
  if (gap % 2 == 0) return 0;
  return kl(v, w).coeff((gap - 1) / 2);
}

void KLContext::fill(ExecMode mode) {
  std::lock_guard<std::mutex> lock(mutex_);
  if (filled_) return;
  if (!rows_[0].done) rows_[0] = compute_row(0, 0);
  for (int l = 1; l <= g_->max_length(); ++l) {
    auto [lo, hi] = g_->length_layer(l);
    if (mode == ExecMode::parallel) {
#pragma omp parallel for schedule(dynamic)
      for (long long wid = lo; wid < static_cast<long long>(hi); ++wid) {
        if (!rows_[wid].done) rows_[wid] = compute_row(static_cast<uint32_t>(wid), 0);
      }
    } else {
      for (uint32_t wid = lo; wid < hi; ++wid) {
        if (!rows_[wid].done) rows_[wid] = compute_row(wid, 0);
      }
    }
  }
  filled_ = true;
}

std::vector<std::pair<Element, Polynomial>> KLContext::kl_row(Element w) {
  if (w.group_ptr() != g_.get())
    throw std::invalid_argument("kl_row: element does not belong to this group");
  std::lock_guard<std::mutex> lock(mutex_);
  ensure_rows(w.id());
  const Row& row = rows_[w.id()];
  std::vector<std::pair<Element, Polynomial>> out;
  out.reserve(row.xs.size());
  for (size_t k = 0; k < row.xs.size(); ++k)
    out.emplace_back(g_->element(row.xs[k]), row.ps[k]);
  return out;
}

std::vector<std::pair<Element, Polynomial>> KLContext::kl_row_with_descent(Element w, int s) {
  if (w.group_ptr() != g_.get())
    throw std::invalid_argument("kl_row_with_descent: element does not belong to this group");
  if (!g_->is_left_descent(s, w))
    throw std::invalid_argument("kl_row_with_descent: s is not a left descent of w");
  std::lock_guard<std::mutex> lock(mutex_);
  ensure_rows(w.id());  // fills everything below w with the canonical choice
  Row row = compute_row(w.id(), s);
  std::vector<std::pair<Element, Polynomial>> out;
  out.reserve(row.xs.size());
  for (size_t k = 0; k < row.xs.size(); ++k)
    out.emplace_back(g_->element(row.xs[k]), std::move(row.ps[k]));
  return out;
}

std::span<const uint32_t> KLContext::row_support(Element w) const {
  if (w.group_ptr() != g_.get())
    throw std::invalid_argument("row_support: element does not belong to this group");
  const Row& row = rows_[w.id()];
  if (!row.done) throw std::logic_error("row_support: row not computed");
  return row.xs;
}

std::span<const Polynomial> KLContext::row_polys(Element w) const {
  if (w.group_ptr() != g_.get())
    throw std::invalid_argument("row_polys: element does not belong to this group");
  const Row& row = rows_[w.id()];
  if (!row.done) throw std::logic_error("row_polys: row not computed");
  return row.ps;
}

// R_{v,w} by the left-descent recursion: R_{v,w} = R_{sv,sw} when sv < v,
// else (q-1) R_{v,sw} + q R_{sv,sw}.
const Polynomial& KLContext::r_poly_ids(uint32_t v, uint32_t w) {
  if (!bruhat_.leq_ids(v, w)) return kZero;
  static const Polynomial kOne{1};
  if (v == w) return kOne;
  auto key = std::make_pair(v, w);
  auto it = rmemo_.find(key);
  if (it != rmemo_.end()) return it->second;
  const WeylGroup& g = *g_;
  const int s = g.first_left_descent(g.element(w));
  const uint32_t sw = g.left_multiply(s, g.element(w)).id();
  const uint32_t sv = g.left_multiply(s, g.element(v)).id();
  Polynomial r;
  if (g.length(g.element(sv)) < g.length(g.element(v))) {
    r = r_poly_ids(sv, sw);
  } else {
    r = (Polynomial::q() - Polynomial(1)) * r_poly_ids(v, sw) +
        Polynomial::q() * r_poly_ids(sv, sw);
  }
  return rmemo_.emplace(key, std::move(r)).first->second;
}

Polynomial KLContext::r_polynomial(Element v, Element w) {
  if (v.group_ptr() != g_.get() || w.group_ptr() != g_.get())
    throw std::invalid_argument("r_polynomial: element does not belong to this group");
  std::lock_guard<std::mutex> lock(mutex_);
  return r_poly_ids(v.id(), w.id());
}

// Triangular solve of q^{l(w)-l(x)} P_{x,w}(1/q) = sum_{x<=z<=w} R_{x,z} P_{z,w}
// from the top of the interval down. The degree bound
// deg P_{x,w} <= (l(w)-l(x)-1)/2 splits each equation into a known high half
// and the sought low half; the high half is re-checked exactly.
const KLContext::Row& KLContext::r_solve_row(uint32_t wid) {
  auto it = rsolve_.find(wid);
  if (it != rsolve_.end()) return it->second;
  const WeylGroup& g = *g_;
  Row row;
  row.xs = bruhat_.closure_ids(wid);
  row.ps.resize(row.xs.size());
  const int lw = g.length(g.element(wid));
  for (size_t k = row.xs.size(); k-- > 0;) {
    const uint32_t x = row.xs[k];
    if (x == wid) {
      row.ps[k] = Polynomial(1);
      continue;
    }
    Polynomial sum;
    for (size_t m = k + 1; m < row.xs.size(); ++m) {
      const uint32_t z = row.xs[m];
      if (!bruhat_.leq_ids(x, z)) continue;
      sum += r_poly_ids(x, z) * row.ps[m];
    }
    const int d = lw - g.length(g.element(x));
    Polynomial p = (-sum).truncated((d - 1) / 2);
    if (p.reciprocal(d) - p != sum)
      throw std::logic_error("triangular solve: functional equation violated");
    row.ps[k] = std::move(p);
  }
  row.done = true;
  return rsolve_.emplace(wid, std::move(row)).first->second;
}

Polynomial KLContext::kl_via_r(Element v, Element w) {
  if (v.group_ptr() != g_.get() || w.group_ptr() != g_.get())
    throw std::invalid_argument("kl_via_r: element does not belong to this group");
  if (!bruhat_.leq(v, w)) return {};
  std::lock_guard<std::mutex> lock(mutex_);
  return lookup(r_solve_row(w.id()), v.id());
}

// Column of Q_{.,w}: Q_{w,w} = 1 and, descending through the interval,
// Q_{x,w} = -sum_{x<z<=w} (-1)^{l(z)-l(x)} P_{x,z} Q_{z,w}.
const KLContext::Row& KLContext::q_column(uint32_t wid) {
  auto it = qcols_.find(wid);
  if (it != qcols_.end()) return it->second;
  const WeylGroup& g = *g_;
  ensure_rows(wid);
  Row col;
  col.xs = bruhat_.closure_ids(wid);
  col.ps.resize(col.xs.size());
  for (size_t k = col.xs.size(); k-- > 0;) {
    const uint32_t x = col.xs[k];
    if (x == wid) {
      col.ps[k] = Polynomial(1);
      continue;
    }
    const int lx = g.length(g.element(x));
    Polynomial sum;
    for (size_t m = k + 1; m < col.xs.size(); ++m) {
      const uint32_t z = col.xs[m];
      if (!bruhat_.leq_ids(x, z)) continue;
      const Polynomial& pxz = lookup(rows_[z], x);
      if (pxz.is_zero()) continue;
      const int sign = (g.length(g.element(z)) - lx) % 2 == 0 ? 1 : -1;
      sum += pxz * col.ps[m] * Polynomial(sign);
    }
    col.ps[k] = -sum;
  }
  col.done = true;
  return qcols_.emplace(wid, std::move(col)).first->second;
}

Polynomial KLContext::inverse_kl(Element v, Element w) {
  if (v.group_ptr() != g_.get() || w.group_ptr() != g_.get())
    throw std::invalid_argument("inverse_kl: element does not belong to this group");
  if (!bruhat_.leq(v, w)) return {};
  std::lock_guard<std::mutex> lock(mutex_);
  return lookup(q_column(w.id()), v.id());
}

}  // namespace weylkl
