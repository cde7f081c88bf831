#pragma once

#include <vector>

#include "weylkl/kl.hpp"
#include "weylkl/parallel.hpp"
#include "weylkl/weyl.hpp"

namespace weylkl {

// Per-element bookkeeping for the Schubert variety X(w) in the full flag
// variety: dim X(w) = l(w), codim = l(w0) - l(w). Smoothness is detected
// rationally, via the KL criterion P_{v,w} = 1 for all v <= w; in type A
// this coincides with genuine smoothness.
struct SchubertDatum {
  Element w;
  int dim = 0;
  int codim = 0;
  bool rationally_smooth = true;
  std::vector<Element> singular_locus_maximals;  // sorted by (length, word)
};

SchubertDatum schubert_datum(KLContext& ctx, Element w);
bool rationally_smooth(KLContext& ctx, Element w);
// Bruhat-maximal v <= w with P_{v,w} != 1; empty iff rationally smooth.
std::vector<Element> singular_locus_maximals(KLContext& ctx, Element w);

// One-line permutation of w in type A: s_i acts as the adjacent
// transposition (i, i+1), composed left-to-right along a reduced word.
std::vector<int> one_line_permutation(Element w);
// Lakshmibai-Sandhya: smooth iff the one-line permutation avoids both
// 3412 and 4231. Throws std::domain_error outside type A.
bool pattern_avoidance_smooth_typeA(Element w);

// Datum for every element of the group; parallel mode scans the elements
// concurrently once the KL table is filled.
std::vector<SchubertDatum> classify_all(KLContext& ctx, ExecMode mode = ExecMode::parallel);

}  // namespace weylkl
