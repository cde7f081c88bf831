#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "weylkl/kl.hpp"
#include "weylkl/weyl.hpp"

namespace weylkl {

enum class Basis : char { M = 'M', L = 'L' };

// Only the zero-vs-positive distinction matters; no prime is ever used.
enum class Regime { char_p, char_0 };

// Finite formal Z-linear combination over basis symbols {[M(w)]} or
// {[L(w)]}, tagged by basis and characteristic regime. Immutable in spirit:
// the decomposition operations below build these, callers only read them.
class KGClass {
 public:
  KGClass(Basis basis, Regime regime, const WeylGroup* g)
      : basis_(basis), regime_(regime), g_(g) {}

  Basis basis() const { return basis_; }
  Regime regime() const { return regime_; }
  const WeylGroup& group() const { return *g_; }

  int64_t coeff(Element w) const;
  void add(Element w, int64_t c);  // drops entries that cancel to zero
  size_t term_count() const { return terms_.size(); }
  // (element, coefficient) sorted by (length descending, canonical word),
  // the order used for printing: leading term first.
  std::vector<std::pair<Element, int64_t>> terms() const;

  bool operator==(const KGClass&) const = default;

  // "[L(1 2 3 2 1)] + [L(1 3)]", "2[M(1)] - [M(e)]", empty class is "0".
  std::string str() const;

 private:
  Basis basis_;
  Regime regime_;
  const WeylGroup* g_;
  std::map<uint32_t, int64_t> terms_;
};

// [L(w)] = sum_{y<=w} (-1)^{l(w)-l(y)} [M(y)]  (positive characteristic).
KGClass simple_in_dualverma_charp(KLContext& ctx, Element w);
// [M(w)] = sum_{y<=w} [L(y)]; multiplicity free.
KGClass dualverma_in_simple_charp(KLContext& ctx, Element w);
// [L(w)] = sum_{v<=w} (-1)^{l(w)-l(v)} P_{v,w}(1) [M(v)]  (characteristic 0).
KGClass simple_in_dualverma_char0(KLContext& ctx, Element w);
// [M(w)] = sum_{y<=w} Q_{y,w}(1) [L(y)]  (characteristic 0).
KGClass dualverma_in_simple_char0(KLContext& ctx, Element w);

// Basis conversions, linear over the rules above for the class's regime.
KGClass convert_to_simple(KLContext& ctx, const KGClass& c);     // M -> L
KGClass convert_to_dualverma(KLContext& ctx, const KGClass& c);  // L -> M

// Class of H^1 with support the codimension-one Schubert divisor X(w), in
// characteristic 0: the alternating dual-Verma sum over [e,w] converted to
// the simple basis. Throws std::domain_error unless codim(w) == 1.
KGClass localcoh_divisor_class_char0(KLContext& ctx, Element w);

// Grothendieck-Cousin complex terms: degree i holds {y <= w : l(y) = l(w)-i}
// for i = 0..l(w), each bucket sorted by canonical word.
std::vector<std::vector<Element>> gc_complex_terms(KLContext& ctx, Element w);

// sum_{x<=z<=y} (-1)^{l(x)} (-1)^{l(z)} == delta_{x,y}.
// Throws std::domain_error unless x <= y.
bool verma_identity_check(KLContext& ctx, Element x, Element y);

}  // namespace weylkl
