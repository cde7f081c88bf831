#include "weylkl/weyl.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace weylkl {

namespace {

using RootIdx = uint16_t;

// Roots as coordinate vectors in the simple-root basis, positive roots at
// [0, n_pos), the negative of root k at k + n_pos. Simple roots sit at
// indices 0..rank-1. sperm[i] is the action of s_{i+1} on root indices.
struct RootSystem {
  int rank;
  uint32_t n_pos;
  std::vector<std::vector<int>> roots;
  std::vector<std::vector<RootIdx>> sperm;
};

std::vector<int> reflect(const std::vector<std::vector<int>>& cartan, int i,
                         const std::vector<int>& v) {
  long long pairing = 0;
  for (size_t j = 0; j < v.size(); ++j) pairing += static_cast<long long>(cartan[i][j]) * v[j];
  auto r = v;
  r[i] -= static_cast<int>(pairing);
  return r;
}

RootSystem build_root_system(const CartanType& type) {
  const int n = type.rank;
  const auto cartan = type.cartan_matrix();

  std::map<std::vector<int>, int> seen;
  std::vector<std::vector<int>> all;
  for (int i = 0; i < n; ++i) {
    std::vector<int> alpha(n, 0);
    alpha[i] = 1;
    seen.emplace(alpha, static_cast<int>(all.size()));
    all.push_back(alpha);
  }
  for (size_t head = 0; head < all.size(); ++head) {
    for (int i = 0; i < n; ++i) {
      auto r = reflect(cartan, i, all[head]);
      if (seen.emplace(r, static_cast<int>(all.size())).second) all.push_back(r);
    }
  }

  std::vector<std::vector<int>> pos;
  for (const auto& r : all) {
    bool nonneg = std::all_of(r.begin(), r.end(), [](int x) { return x >= 0; });
    bool nonpos = std::all_of(r.begin(), r.end(), [](int x) { return x <= 0; });
    if (!nonneg && !nonpos) throw std::logic_error("mixed-sign root");
    if (nonneg) pos.push_back(r);
  }
  if (2 * pos.size() != all.size()) throw std::logic_error("root count mismatch");

  // The simple roots sit at indices 0..n-1 in generator order (the descent
  // sign test relies on this); the rest follow by (height, lex).
  auto height = [](const std::vector<int>& r) {
    int h = 0;
    for (int x : r) h += x;
    return h;
  };
  std::vector<std::vector<int>> rest;
  for (auto& r : pos)
    if (height(r) > 1) rest.push_back(std::move(r));
  std::sort(rest.begin(), rest.end(),
            [&](const std::vector<int>& a, const std::vector<int>& b) {
              if (height(a) != height(b)) return height(a) < height(b);
              return a < b;
            });

  RootSystem rs;
  rs.rank = n;
  rs.n_pos = static_cast<uint32_t>(rest.size() + n);
  for (int i = 0; i < n; ++i) {
    std::vector<int> alpha(n, 0);
    alpha[i] = 1;
    rs.roots.push_back(std::move(alpha));
  }
  for (auto& r : rest) rs.roots.push_back(std::move(r));

  if (2 * rs.n_pos > UINT16_MAX)
    throw std::length_error("root system too large for 16-bit root indices");

  std::map<std::vector<int>, RootIdx> index;
  for (uint32_t k = 0; k < rs.n_pos; ++k) index.emplace(rs.roots[k], static_cast<RootIdx>(k));
  auto idx_of = [&](const std::vector<int>& v) -> RootIdx {
    auto it = index.find(v);
    if (it != index.end()) return it->second;
    auto neg = v;
    for (int& x : neg) x = -x;
    auto jt = index.find(neg);
    if (jt == index.end()) throw std::logic_error("unknown root");
    return static_cast<RootIdx>(jt->second + rs.n_pos);
  };

  const uint32_t two_n = 2 * rs.n_pos;
  rs.sperm.assign(n, std::vector<RootIdx>(two_n));
  for (int i = 0; i < n; ++i) {
    for (uint32_t k = 0; k < rs.n_pos; ++k) {
      RootIdx img = idx_of(reflect(cartan, i, rs.roots[k]));
      rs.sperm[i][k] = img;
      // s_i(-r) = -s_i(r)
      rs.sperm[i][k + rs.n_pos] =
          static_cast<RootIdx>(img >= rs.n_pos ? img - rs.n_pos : img + rs.n_pos);
    }
  }
  return rs;
}

struct KeyHash {
  size_t operator()(const std::vector<RootIdx>& v) const {
    size_t h = 1469598103934665603ull;
    for (RootIdx x : v) {
      h ^= x;
      h *= 1099511628211ull;
    }
    return h;
  }
};

}  // namespace

ParabolicSubset ParabolicSubset::of(std::initializer_list<int> gens) {
  return of(std::vector<int>(gens));
}

ParabolicSubset ParabolicSubset::of(std::vector<int> gens) {
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  return ParabolicSubset{std::move(gens)};
}

int Element::length() const { return g_->length(*this); }
std::vector<int> Element::word() const { return g_->word(*this); }

std::shared_ptr<const WeylGroup> WeylGroup::build(CartanType type, BuildOptions opt) {
  validate(type);
  uint64_t predicted = type.order();
  if (predicted > opt.max_order) {
    throw std::invalid_argument("group " + type.str() + " has order " +
                                std::to_string(predicted) +
                                ", above the enumeration cap of " +
                                std::to_string(opt.max_order) +
                                "; raise max_order to build it anyway");
  }

  RootSystem rs = build_root_system(type);
  const int n = type.rank;
  const uint32_t two_n = 2 * rs.n_pos;
  constexpr uint32_t kNone = UINT32_MAX;

  auto w = std::shared_ptr<WeylGroup>(new WeylGroup());
  w->type_ = type;
  w->rank_ = n;
  w->n_pos_ = rs.n_pos;
  w->pos_roots_ = rs.roots;

  // Breadth-first over right multiplication. Each frontier element carries
  // its full permutation of the root indices; the images of the simple
  // roots identify the element. l(w s_i) = l(w) + 1 exactly when w(alpha_i)
  // is positive, so ascents are a sign test. Edges between consecutive
  // layers are recorded from the shorter side, which covers descents too.
  std::vector<int>& length = w->length_;
  std::vector<uint32_t>& right = w->right_;
  length.push_back(0);
  right.assign(n, kNone);

  std::vector<std::vector<RootIdx>> frontier;
  std::vector<uint32_t> frontier_ids{0};
  {
    std::vector<RootIdx> id_perm(two_n);
    for (uint32_t r = 0; r < two_n; ++r) id_perm[r] = static_cast<RootIdx>(r);
    frontier.push_back(std::move(id_perm));
  }

  int layer_len = 0;
  std::unordered_map<std::vector<RootIdx>, uint32_t, KeyHash> next_ids;
  while (!frontier.empty()) {
    std::vector<std::vector<RootIdx>> next;
    std::vector<uint32_t> next_frontier_ids;
    next_ids.clear();
    for (size_t f = 0; f < frontier.size(); ++f) {
      const uint32_t wid = frontier_ids[f];
      const auto& perm = frontier[f];
      for (int i = 0; i < n; ++i) {
        if (perm[i] >= rs.n_pos) continue;  // descent; edge already recorded
        std::vector<RootIdx> child(two_n);
        for (uint32_t r = 0; r < two_n; ++r) child[r] = perm[rs.sperm[i][r]];
        std::vector<RootIdx> key(child.begin(), child.begin() + n);
        auto [it, fresh] = next_ids.try_emplace(std::move(key), 0);
        if (fresh) {
          const uint32_t cid = static_cast<uint32_t>(length.size());
          if (cid == UINT32_MAX) throw std::length_error("group too large");
          it->second = cid;
          length.push_back(layer_len + 1);
          right.insert(right.end(), n, kNone);
          next_frontier_ids.push_back(cid);
          next.push_back(std::move(child));
        }
        const uint32_t cid = it->second;
        right[static_cast<size_t>(wid) * n + i] = cid;
        right[static_cast<size_t>(cid) * n + i] = wid;
      }
    }
    frontier = std::move(next);
    frontier_ids = std::move(next_frontier_ids);
    ++layer_len;
  }

  w->size_ = static_cast<uint32_t>(length.size());
  w->max_length_ = length.back();
  if (w->size_ != predicted) throw std::logic_error("enumeration does not match group order");
  if (w->max_length_ != static_cast<int>(rs.n_pos))
    throw std::logic_error("longest length does not match positive root count");
  if (w->size_ >= 2 && length[w->size_ - 2] == w->max_length_)
    throw std::logic_error("longest element not unique");

  w->layer_.assign(static_cast<size_t>(w->max_length_) + 2, 0);
  for (uint32_t id = 0; id < w->size_; ++id) w->layer_[length[id] + 1] = id + 1;

  // Left table and inverses in one ascending pass: with t a right descent
  // of x and c = x t, s x = (s c) t and x^{-1} = t c^{-1}.
  w->left_.assign(static_cast<size_t>(w->size_) * n, kNone);
  w->inverse_.assign(w->size_, kNone);
  w->inverse_[0] = 0;
  for (int i = 0; i < n; ++i) w->left_[i] = right[i];
  for (uint32_t x = 1; x < w->size_; ++x) {
    int t = -1;
    for (int i = 0; i < n; ++i) {
      if (length[right[static_cast<size_t>(x) * n + i]] < length[x]) {
        t = i;
        break;
      }
    }
    const uint32_t c = right[static_cast<size_t>(x) * n + t];
    for (int i = 0; i < n; ++i) {
      const uint32_t sc = w->left_[static_cast<size_t>(c) * n + i];
      w->left_[static_cast<size_t>(x) * n + i] = right[static_cast<size_t>(sc) * n + t];
    }
    w->inverse_[x] = w->left_[static_cast<size_t>(w->inverse_[c]) * n + t];
  }

  return w;
}

std::pair<uint32_t, uint32_t> WeylGroup::length_layer(int l) const {
  if (l < 0 || l > max_length_) return {0, 0};
  return {layer_[l], layer_[l + 1]};
}

std::span<const std::vector<int>> WeylGroup::positive_roots() const { return pos_roots_; }

Element WeylGroup::generator(int i) const {
  if (i < 1 || i > rank_) {
    throw std::invalid_argument("generator index " + std::to_string(i) + " out of range 1.." +
                                std::to_string(rank_));
  }
  return Element(this, right_[i - 1]);
}

Element WeylGroup::element(uint32_t id) const {
  if (id >= size_) throw std::invalid_argument("element id out of range");
  return Element(this, id);
}

void WeylGroup::check_member(Element w, const char* who) const {
  if (w.group_ptr() != this) {
    throw std::invalid_argument(std::string(who) + ": element does not belong to this group");
  }
}

int WeylGroup::length(Element w) const {
  check_member(w, "length");
  return length_[w.id()];
}

Element WeylGroup::right_multiply(Element w, int s) const {
  check_member(w, "right_multiply");
  if (s < 1 || s > rank_) throw std::invalid_argument("generator index out of range");
  return Element(this, right_[static_cast<size_t>(w.id()) * rank_ + (s - 1)]);
}

Element WeylGroup::left_multiply(int s, Element w) const {
  check_member(w, "left_multiply");
  if (s < 1 || s > rank_) throw std::invalid_argument("generator index out of range");
  return Element(this, left_[static_cast<size_t>(w.id()) * rank_ + (s - 1)]);
}

Element WeylGroup::multiply(Element a, Element b) const {
  check_member(a, "multiply");
  check_member(b, "multiply");
  Element x = a;
  for (int s : word(b)) x = right_multiply(x, s);
  return x;
}

Element WeylGroup::inverse(Element a) const {
  check_member(a, "inverse");
  return Element(this, inverse_[a.id()]);
}

bool WeylGroup::is_left_descent(int s, Element w) const {
  return length_[left_multiply(s, w).id()] < length_[w.id()];
}

bool WeylGroup::is_right_descent(Element w, int s) const {
  return length_[right_multiply(w, s).id()] < length_[w.id()];
}

std::vector<int> WeylGroup::left_descents(Element w) const {
  check_member(w, "left_descents");
  std::vector<int> out;
  for (int s = 1; s <= rank_; ++s)
    if (is_left_descent(s, w)) out.push_back(s);
  return out;
}

std::vector<int> WeylGroup::right_descents(Element w) const {
  check_member(w, "right_descents");
  std::vector<int> out;
  for (int s = 1; s <= rank_; ++s)
    if (is_right_descent(w, s)) out.push_back(s);
  return out;
}

int WeylGroup::first_left_descent(Element w) const {
  check_member(w, "first_left_descent");
  for (int s = 1; s <= rank_; ++s)
    if (is_left_descent(s, w)) return s;
  return 0;
}

int WeylGroup::first_right_descent(Element w) const {
  check_member(w, "first_right_descent");
  for (int s = 1; s <= rank_; ++s)
    if (is_right_descent(w, s)) return s;
  return 0;
}

std::vector<int> WeylGroup::word(Element w) const {
  check_member(w, "word");
  std::vector<int> out;
  out.reserve(length_[w.id()]);
  Element x = w;
  while (x.id() != 0) {
    int s = first_left_descent(x);
    out.push_back(s);
    x = left_multiply(s, x);
  }
  return out;
}

Element WeylGroup::from_word(std::span<const int> word) const {
  Element x = identity();
  for (int s : word) x = right_multiply(x, s);
  return x;
}

Element WeylGroup::from_word(std::initializer_list<int> word) const {
  return from_word(std::span<const int>(word.begin(), word.size()));
}

bool WeylGroup::bruhat_leq(Element v, Element w) const {
  check_member(v, "bruhat_leq");
  check_member(w, "bruhat_leq");
  uint32_t vi = v.id(), wi = w.id();
  // Lifting chain: with s a left descent of w, v <= w iff sv <= sw when
  // sv < v, and iff v <= sw otherwise.
  while (true) {
    if (vi == wi) return true;
    if (length_[vi] >= length_[wi]) return false;
    if (vi == 0) return true;
    int s = first_left_descent(Element(this, wi));
    wi = left_[static_cast<size_t>(wi) * rank_ + (s - 1)];
    uint32_t sv = left_[static_cast<size_t>(vi) * rank_ + (s - 1)];
    if (length_[sv] < length_[vi]) vi = sv;
  }
}

std::vector<Element> WeylGroup::interval(Element v, Element w) const {
  if (!bruhat_leq(v, w)) throw std::domain_error("interval: v is not <= w in Bruhat order");
  std::vector<Element> out;
  for (uint32_t id = v.id(); id <= w.id(); ++id) {
    Element z(this, id);
    if (bruhat_leq(v, z) && bruhat_leq(z, w)) out.push_back(z);
  }
  std::vector<std::vector<int>> words(out.size());
  for (size_t k = 0; k < out.size(); ++k) words[k] = word(out[k]);
  std::vector<size_t> idx(out.size());
  for (size_t k = 0; k < idx.size(); ++k) idx[k] = k;
  std::sort(idx.begin(), idx.end(), [&](size_t a, size_t b) {
    if (length_[out[a].id()] != length_[out[b].id()])
      return length_[out[a].id()] < length_[out[b].id()];
    return words[a] < words[b];
  });
  std::vector<Element> sorted;
  sorted.reserve(out.size());
  for (size_t k : idx) sorted.push_back(out[k]);
  return sorted;
}

Element WeylGroup::min_coset_rep(Element w, const ParabolicSubset& j) const {
  check_member(w, "min_coset_rep");
  for (int s : j.generators) {
    if (s < 1 || s > rank_)
      throw std::invalid_argument("parabolic subset contains generator out of range");
  }
  Element x = w;
  bool stripped = true;
  while (stripped) {
    stripped = false;
    for (int s : j.generators) {
      if (is_right_descent(x, s)) {
        x = right_multiply(x, s);
        stripped = true;
        break;
      }
    }
  }
  return x;
}

Element WeylGroup::parse_element(std::string_view text) const {
  std::string buf(text);
  for (char& ch : buf)
    if (ch == ',') ch = ' ';
  std::istringstream in(buf);
  std::vector<int> word;
  std::string tok;
  while (in >> tok) {
    size_t pos = 0;
    int s = 0;
    try {
      s = std::stoi(tok, &pos);
    } catch (const std::exception&) {
      pos = 0;
    }
    if (pos != tok.size())
      throw std::invalid_argument("bad generator token '" + tok + "' in element word");
    if (s < 1 || s > rank_)
      throw std::invalid_argument("generator index " + std::to_string(s) +
                                  " out of range 1.." + std::to_string(rank_));
    word.push_back(s);
  }
  return from_word(word);
}

std::string WeylGroup::word_str(Element w) const {
  auto ww = word(w);
  if (ww.empty()) return "e";
  std::string out;
  for (size_t k = 0; k < ww.size(); ++k) {
    if (k) out += ' ';
    out += std::to_string(ww[k]);
  }
  return out;
}

}  // namespace weylkl
