#pragma once

#include <cstdint>
#include <initializer_list>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "weylkl/cartan.hpp"

namespace weylkl {

class WeylGroup;

// Value handle to a group element. Canonical: two Elements compare equal
// iff they are the same element of the same group, no matter which words
// produced them. Valid while the owning WeylGroup is alive.
class Element {
 public:
  Element() = default;
  const WeylGroup& group() const { return *g_; }
  const WeylGroup* group_ptr() const { return g_; }
  uint32_t id() const { return id_; }
  int length() const;
  std::vector<int> word() const;  // ShortLex-least reduced word, 1-based
  bool operator==(const Element&) const = default;

 private:
  friend class WeylGroup;
  Element(const WeylGroup* g, uint32_t id) : g_(g), id_(id) {}
  const WeylGroup* g_ = nullptr;
  uint32_t id_ = 0;
};

// Subset J of the generator indices, 1-based.
struct ParabolicSubset {
  std::vector<int> generators;  // sorted, unique
  static ParabolicSubset of(std::initializer_list<int> gens);
  static ParabolicSubset of(std::vector<int> gens);
};

struct BuildOptions {
  // Groups larger than this are refused up front. Raise explicitly (or via
  // the WEYLKL_MAX_ORDER environment variable in the CLI) to go bigger.
  uint64_t max_order = 10'000'000;
};

// A finite Weyl group, fully enumerated at construction. Elements act on
// the root lattice expressed in the simple-root basis; the enumeration runs
// breadth-first over right multiplication by generators, so element ids are
// sorted by length. Immutable after build and safe to share across threads.
class WeylGroup {
 public:
  static std::shared_ptr<const WeylGroup> build(CartanType type, BuildOptions opt = {});

  const CartanType& type() const { return type_; }
  int rank() const { return rank_; }
  uint32_t size() const { return size_; }
  int max_length() const { return max_length_; }
  // Element ids with length l form the contiguous range [first, last).
  std::pair<uint32_t, uint32_t> length_layer(int l) const;
  // Coordinate vectors in the simple-root basis.
  std::span<const std::vector<int>> positive_roots() const;

  Element identity() const { return Element(this, 0); }
  Element generator(int i) const;  // 1-based
  Element longest_element() const { return Element(this, size_ - 1); }
  Element element(uint32_t id) const;
  Element from_word(std::span<const int> word) const;
  Element from_word(std::initializer_list<int> word) const;

  int length(Element w) const;
  Element multiply(Element a, Element b) const;
  Element inverse(Element a) const;
  Element left_multiply(int s, Element w) const;   // s * w
  Element right_multiply(Element w, int s) const;  // w * s
  bool is_left_descent(int s, Element w) const;    // l(s w) < l(w)
  bool is_right_descent(Element w, int s) const;   // l(w s) < l(w)
  std::vector<int> left_descents(Element w) const;
  std::vector<int> right_descents(Element w) const;
  int first_left_descent(Element w) const;   // smallest index, 0 for identity
  int first_right_descent(Element w) const;  // smallest index, 0 for identity

  // ShortLex-least reduced word, computed by greedy left-descent stripping.
  std::vector<int> word(Element w) const;

  // Bruhat order via the lifting-property chain; O(l(w)) per query.
  bool bruhat_leq(Element v, Element w) const;
  // All z with v <= z <= w, sorted by (length, canonical word).
  // Throws std::domain_error unless v <= w.
  std::vector<Element> interval(Element v, Element w) const;

  // Minimal length representative of the coset w W_J.
  Element min_coset_rep(Element w, const ParabolicSubset& j) const;

  // Whitespace- or comma-separated 1-based generator indices; "" is the
  // identity. Throws std::invalid_argument on bad tokens.
  Element parse_element(std::string_view text) const;
  std::string word_str(Element w) const;  // "1 2 1", identity prints as "e"

 private:
  WeylGroup() = default;
  void check_member(Element w, const char* who) const;

  CartanType type_;
  int rank_ = 0;
  uint32_t size_ = 0;
  int max_length_ = 0;
  uint32_t n_pos_ = 0;
  std::vector<std::vector<int>> pos_roots_;
  std::vector<int> length_;
  std::vector<uint32_t> right_;    // right_[w*rank + i] = id of w*s_{i+1}
  std::vector<uint32_t> left_;     // left_[w*rank + i]  = id of s_{i+1}*w
  std::vector<uint32_t> inverse_;  // id of w^{-1}
  std::vector<uint32_t> layer_;    // layer_[l] = first id of length l
};

}  // namespace weylkl
