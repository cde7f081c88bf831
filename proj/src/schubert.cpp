#include "weylkl/schubert.hpp"

#include <algorithm>
#include <stdexcept>

namespace weylkl {

namespace {

// Sort by (length, canonical word).
void sort_elements(std::vector<Element>& v) {
  std::sort(v.begin(), v.end(), [](Element a, Element b) {
    if (a.length() != b.length()) return a.length() < b.length();
    return a.word() < b.word();
  });
}

std::vector<Element> maximals_from_row(KLContext& ctx, Element w) {
  const WeylGroup& g = ctx.group();
  auto xs = ctx.row_support(w);
  auto ps = ctx.row_polys(w);
  std::vector<uint32_t> singular;
  for (size_t k = 0; k < xs.size(); ++k)
    if (!ps[k].is_one()) singular.push_back(xs[k]);
  std::vector<Element> out;
  for (uint32_t v : singular) {
    bool maximal = true;
    for (uint32_t u : singular) {
      if (u != v && ctx.bruhat().leq_ids(v, u)) {
        maximal = false;
        break;
      }
    }
    if (maximal) out.push_back(g.element(v));
  }
  sort_elements(out);
  return out;
}

}  // namespace

std::vector<Element> singular_locus_maximals(KLContext& ctx, Element w) {
  ctx.kl_row(w);  // make sure the row exists
  return maximals_from_row(ctx, w);
}

bool rationally_smooth(KLContext& ctx, Element w) {
  for (const auto& [v, p] : ctx.kl_row(w))
    if (!p.is_one()) return false;
  return true;
}

SchubertDatum schubert_datum(KLContext& ctx, Element w) {
  const WeylGroup& g = ctx.group();
  SchubertDatum d;
  d.w = w;
  d.dim = g.length(w);
  d.codim = g.max_length() - d.dim;
  d.singular_locus_maximals = singular_locus_maximals(ctx, w);
  d.rationally_smooth = d.singular_locus_maximals.empty();
  return d;
}

std::vector<int> one_line_permutation(Element w) {
  const WeylGroup& g = w.group();
  if (g.type().family != Family::A)
    throw std::domain_error("one_line_permutation: type A only");
  const int n = g.rank() + 1;
  std::vector<int> perm(n);
  for (int k = 0; k < n; ++k) perm[k] = k + 1;
  for (int s : g.word(w)) std::swap(perm[s - 1], perm[s]);
  return perm;
}

namespace {

bool contains_pattern(const std::vector<int>& p, const int (&pat)[4]) {
  const int n = static_cast<int>(p.size());
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = j + 1; k < n; ++k)
        for (int l = k + 1; l < n; ++l) {
          const int v[4] = {p[i], p[j], p[k], p[l]};
          bool iso = true;
          for (int a = 0; a < 4 && iso; ++a)
            for (int b = a + 1; b < 4 && iso; ++b)
              if ((v[a] < v[b]) != (pat[a] < pat[b])) iso = false;
          if (iso) return true;
        }
  return false;
}

}  // namespace

bool pattern_avoidance_smooth_typeA(Element w) {
  auto perm = one_line_permutation(w);
  static constexpr int k3412[4] = {3, 4, 1, 2};
  static constexpr int k4231[4] = {4, 2, 3, 1};
  return !contains_pattern(perm, k3412) && !contains_pattern(perm, k4231);
}

std::vector<SchubertDatum> classify_all(KLContext& ctx, ExecMode mode) {
  const WeylGroup& g = ctx.group();
  ctx.fill(mode);
  std::vector<SchubertDatum> out(g.size());
  auto one = [&](uint32_t id) {
    Element w = g.element(id);
    SchubertDatum d;
    d.w = w;
    d.dim = g.length(w);
    d.codim = g.max_length() - d.dim;
    d.singular_locus_maximals = maximals_from_row(ctx, w);
    d.rationally_smooth = d.singular_locus_maximals.empty();
    out[id] = std::move(d);
  };
  if (mode == ExecMode::parallel) {
#pragma omp parallel for schedule(dynamic)
    for (long long id = 0; id < static_cast<long long>(g.size()); ++id)
      one(static_cast<uint32_t>(id));
  } else {
    for (uint32_t id = 0; id < g.size(); ++id) one(id);
  }
  return out;
}

}  // namespace weylkl
