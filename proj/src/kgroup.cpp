#include "weylkl/kgroup.hpp"

#include <algorithm>
#include <stdexcept>

namespace weylkl {

namespace {

int64_t checked_add(int64_t a, int64_t b) {
  int64_t r;
  if (__builtin_add_overflow(a, b, &r))
    throw std::overflow_error("integer overflow in Grothendieck-group coefficient");
  return r;
}

int64_t checked_mul(int64_t a, int64_t b) {
  int64_t r;
  if (__builtin_mul_overflow(a, b, &r))
    throw std::overflow_error("integer overflow in Grothendieck-group coefficient");
  return r;
}

int sign_pow(int exp) { return exp % 2 == 0 ? 1 : -1; }

}  // namespace

int64_t KGClass::coeff(Element w) const {
  if (w.group_ptr() != g_) throw std::invalid_argument("KGClass: element from another group");
  auto it = terms_.find(w.id());
  return it == terms_.end() ? 0 : it->second;
}

void KGClass::add(Element w, int64_t c) {
  if (w.group_ptr() != g_) throw std::invalid_argument("KGClass: element from another group");
  if (c == 0) return;
  auto [it, fresh] = terms_.emplace(w.id(), c);
  if (!fresh) {
    it->second = checked_add(it->second, c);
    if (it->second == 0) terms_.erase(it);
  }
}

std::vector<std::pair<Element, int64_t>> KGClass::terms() const {
  std::vector<std::pair<Element, int64_t>> out;
  out.reserve(terms_.size());
  for (auto [id, c] : terms_) out.emplace_back(g_->element(id), c);
  std::vector<std::vector<int>> words(out.size());
  for (size_t k = 0; k < out.size(); ++k) words[k] = out[k].first.word();
  std::vector<size_t> idx(out.size());
  for (size_t k = 0; k < idx.size(); ++k) idx[k] = k;
  std::sort(idx.begin(), idx.end(), [&](size_t a, size_t b) {
    int la = out[a].first.length(), lb = out[b].first.length();
    if (la != lb) return la > lb;  // leading term first
    return words[a] < words[b];
  });
  std::vector<std::pair<Element, int64_t>> sorted;
  sorted.reserve(out.size());
  for (size_t k : idx) sorted.push_back(out[k]);
  return sorted;
}

std::string KGClass::str() const {
  auto ts = terms();
  if (ts.empty()) return "0";
  const char basis = static_cast<char>(basis_);
  std::string out;
  bool first = true;
  for (const auto& [w, c] : ts) {
    uint64_t mag = c < 0 ? -static_cast<uint64_t>(c) : static_cast<uint64_t>(c);
    if (first) {
      if (c < 0) out += "-";
      first = false;
    } else {
      out += c < 0 ? " - " : " + ";
    }
    if (mag != 1) out += std::to_string(mag);
    out += "[" + std::string(1, basis) + "(" + g_->word_str(w) + ")]";
  }
  return out;
}

KGClass simple_in_dualverma_charp(KLContext& ctx, Element w) {
  const WeylGroup& g = ctx.group();
  KGClass out(Basis::M, Regime::char_p, &g);
  const int lw = g.length(w);
  for (uint32_t y : ctx.bruhat().closure_ids(w))
    out.add(g.element(y), sign_pow(lw - g.length(g.element(y))));
  return out;
}

KGClass dualverma_in_simple_charp(KLContext& ctx, Element w) {
  const WeylGroup& g = ctx.group();
  KGClass out(Basis::L, Regime::char_p, &g);
  for (uint32_t y : ctx.bruhat().closure_ids(w)) out.add(g.element(y), 1);
  return out;
}

KGClass simple_in_dualverma_char0(KLContext& ctx, Element w) {
  const WeylGroup& g = ctx.group();
  KGClass out(Basis::M, Regime::char_0, &g);
  const int lw = g.length(w);
  for (uint32_t vid : ctx.bruhat().closure_ids(w)) {
    Element v = g.element(vid);
    out.add(v, checked_mul(sign_pow(lw - g.length(v)), ctx.kl(v, w).at_one()));
  }
  return out;
}

KGClass dualverma_in_simple_char0(KLContext& ctx, Element w) {
  const WeylGroup& g = ctx.group();
  KGClass out(Basis::L, Regime::char_0, &g);
  for (uint32_t yid : ctx.bruhat().closure_ids(w)) {
    Element y = g.element(yid);
    out.add(y, ctx.inverse_kl(y, w).at_one());
  }
  return out;
}

KGClass convert_to_simple(KLContext& ctx, const KGClass& c) {
  if (&c.group() != &ctx.group())
    throw std::invalid_argument("convert_to_simple: class from another group");
  if (c.basis() == Basis::L) return c;
  KGClass out(Basis::L, c.regime(), &c.group());
  for (const auto& [v, coeff] : c.terms()) {
    KGClass part = c.regime() == Regime::char_p ? dualverma_in_simple_charp(ctx, v)
                                                : dualverma_in_simple_char0(ctx, v);
    for (const auto& [y, cy] : part.terms()) out.add(y, checked_mul(coeff, cy));
  }
  return out;
}

KGClass convert_to_dualverma(KLContext& ctx, const KGClass& c) {
  if (&c.group() != &ctx.group())
    throw std::invalid_argument("convert_to_dualverma: class from another group");
  if (c.basis() == Basis::M) return c;
  KGClass out(Basis::M, c.regime(), &c.group());
  for (const auto& [w, coeff] : c.terms()) {
    KGClass part = c.regime() == Regime::char_p ? simple_in_dualverma_charp(ctx, w)
                                                : simple_in_dualverma_char0(ctx, w);
    for (const auto& [y, cy] : part.terms()) out.add(y, checked_mul(coeff, cy));
  }
  return out;
}

KGClass localcoh_divisor_class_char0(KLContext& ctx, Element w) {
  const WeylGroup& g = ctx.group();
  const int codim = g.max_length() - g.length(w);
  if (codim != 1)
    throw std::domain_error("localcoh_divisor_class_char0: X(w) must have codimension 1, got " +
                            std::to_string(codim));
  KGClass alt(Basis::M, Regime::char_0, &g);
  const int lw = g.length(w);
  for (uint32_t vid : ctx.bruhat().closure_ids(w)) {
    Element v = g.element(vid);
    alt.add(v, sign_pow(lw - g.length(v)));
  }
  return convert_to_simple(ctx, alt);
}

std::vector<std::vector<Element>> gc_complex_terms(KLContext& ctx, Element w) {
  const WeylGroup& g = ctx.group();
  const int lw = g.length(w);
  std::vector<std::vector<Element>> out(static_cast<size_t>(lw) + 1);
  for (uint32_t yid : ctx.bruhat().closure_ids(w)) {
    Element y = g.element(yid);
    out[lw - g.length(y)].push_back(y);
  }
  for (auto& bucket : out) {
    std::sort(bucket.begin(), bucket.end(),
              [](Element a, Element b) { return a.word() < b.word(); });
  }
  return out;
}

bool verma_identity_check(KLContext& ctx, Element x, Element y) {
  const WeylGroup& g = ctx.group();
  if (!ctx.bruhat().leq(x, y))
    throw std::domain_error("verma_identity_check: x is not <= y in Bruhat order");
  int64_t sum = 0;
  const int sx = sign_pow(g.length(x));
  for (uint32_t zid : ctx.bruhat().closure_ids(y)) {
    if (!ctx.bruhat().leq_ids(x.id(), zid)) continue;
    sum += sx * sign_pow(g.length(g.element(zid)));
  }
  return sum == (x == y ? 1 : 0);
}

}  // namespace weylkl
