#include "cantorlab/clopen.hpp"

#include <algorithm>
#include <set>
#include <unordered_set>

#include "cantorlab/errors.hpp"

namespace cantorlab {

namespace {

bool shorter_lex(const std::string& a, const std::string& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

bool is_prefix(const std::string& p, const std::string& w) {
  return p.size() <= w.size() && w.compare(0, p.size(), p) == 0;
}

}  // namespace

Clopen Clopen::from_words(std::vector<std::string> words) {
  for (const auto& w : words)
    for (char ch : w)
      if (ch != '0' && ch != '1')
        throw MalformedQueryError("clopen word must be over {0,1}: " + w);

  std::set<std::string> s(words.begin(), words.end());

  // Absorb words that extend another word in the family.
  for (auto it = s.begin(); it != s.end();) {
    bool covered = false;
    for (std::size_t len = 0; len < it->size() && !covered; ++len)
      covered = s.count(it->substr(0, len)) > 0;
    it = covered ? s.erase(it) : std::next(it);
  }

  // Merge sibling pairs to fixpoint.
  bool changed = true;
  while (changed) {
    changed = false;
    for (auto it = s.begin(); it != s.end(); ++it) {
      if (it->empty() || it->back() != '0') continue;
      std::string sib = *it;
      sib.back() = '1';
      if (s.count(sib)) {
        std::string parent = it->substr(0, it->size() - 1);
        s.erase(sib);
        s.erase(it);
        s.insert(parent);
        changed = true;
        break;
      }
    }
  }

  Clopen c;
  c.words_.assign(s.begin(), s.end());
  std::sort(c.words_.begin(), c.words_.end(), shorter_lex);
  return c;
}

int Clopen::depth() const {
  std::size_t d = 0;
  for (const auto& w : words_) d = std::max(d, w.size());
  return static_cast<int>(d);
}

std::strong_ordering operator<=>(const Clopen& a, const Clopen& b) {
  const auto& wa = a.words();
  const auto& wb = b.words();
  for (std::size_t i = 0; i < std::min(wa.size(), wb.size()); ++i) {
    if (wa[i].size() != wb[i].size())
      return wa[i].size() <=> wb[i].size();
    if (auto c = wa[i] <=> wb[i]; c != 0) return c;
  }
  return wa.size() <=> wb.size();
}

std::string to_string(const Clopen& c) {
  std::string out = "{";
  for (std::size_t i = 0; i < c.words().size(); ++i) {
    if (i) out += ",";
    out += c.words()[i].empty() ? "ε" : c.words()[i];
  }
  return out + "}";
}

Clopen clopen_union(const Clopen& a, const Clopen& b) {
  std::vector<std::string> ws = a.words();
  ws.insert(ws.end(), b.words().begin(), b.words().end());
  return Clopen::from_words(std::move(ws));
}

Clopen clopen_intersect(const Clopen& a, const Clopen& b) {
  // Cylinders meet iff one word prefixes the other; the meet is the longer.
  std::vector<std::string> ws;
  for (const auto& u : a.words())
    for (const auto& v : b.words()) {
      if (is_prefix(u, v))
        ws.push_back(v);
      else if (is_prefix(v, u))
        ws.push_back(u);
    }
  return Clopen::from_words(std::move(ws));
}

namespace {

void complement_rec(const std::vector<std::string>& ws, std::string& prefix,
                    std::vector<std::string>& out) {
  if (ws.empty()) {
    out.push_back(prefix);
    return;
  }
  for (const auto& w : ws)
    if (w.empty()) return;  // whole subtree covered
  std::vector<std::string> w0, w1;
  for (const auto& w : ws)
    (w[0] == '0' ? w0 : w1).push_back(w.substr(1));
  prefix.push_back('0');
  complement_rec(w0, prefix, out);
  prefix.back() = '1';
  complement_rec(w1, prefix, out);
  prefix.pop_back();
}

}  // namespace

Clopen clopen_complement(const Clopen& a) {
  std::vector<std::string> out;
  std::string prefix;
  complement_rec(a.words(), prefix, out);
  return Clopen::from_words(std::move(out));
}

Clopen clopen_minus(const Clopen& a, const Clopen& b) {
  return clopen_intersect(a, clopen_complement(b));
}

bool clopen_subset(const Clopen& a, const Clopen& b) {
  const int d = std::max(a.depth(), b.depth());
  if (d <= 6) return (clopen_to_mask(a, d) & ~clopen_to_mask(b, d)) == 0;
  return clopen_minus(a, b).empty();
}

std::uint64_t clopen_to_mask(const Clopen& c, int d) {
  if (d < 0 || d > 6)
    throw ResourceLimitError("mask depth limited to 6");
  std::uint64_t mask = 0;
  for (const auto& w : c.words()) {
    if (static_cast<int>(w.size()) > d)
      throw MalformedQueryError("clopen " + to_string(c) +
                                " is outside B_" + std::to_string(d));
    std::uint64_t base = 0;
    for (char ch : w) base = base << 1 | (ch == '1');
    int free_bits = d - static_cast<int>(w.size());
    base <<= free_bits;
    for (std::uint64_t i = 0; i < (1ull << free_bits); ++i)
      mask |= 1ull << (base + i);
  }
  return mask;
}

Clopen mask_to_clopen(std::uint64_t mask, int d) {
  if (d < 0 || d > 6)
    throw ResourceLimitError("mask depth limited to 6");
  std::vector<std::string> ws;
  for (std::uint64_t i = 0; i < (1ull << d); ++i) {
    if (!(mask >> i & 1)) continue;
    std::string w(d, '0');
    for (int b = 0; b < d; ++b)
      if (i >> (d - 1 - b) & 1) w[b] = '1';
    ws.push_back(std::move(w));
  }
  return Clopen::from_words(std::move(ws));
}

std::vector<Clopen> enumerate_base(int d) {
  if (d < 0 || d > 4)
    throw ResourceLimitError("enumerate_base limited to depth 4");
  std::vector<Clopen> out;
  const std::uint64_t n = 1ull << (1 << d);
  out.reserve(n);
  for (std::uint64_t mask = 0; mask < n; ++mask)
    out.push_back(mask_to_clopen(mask, d));
  return out;
}

std::vector<Clopen> tilde_truncated(const Clopen& v, int d) {
  std::vector<Clopen> out;
  const int dd = std::max(d, v.depth());
  if (dd <= 6) {
    const std::uint64_t vm = clopen_to_mask(v, dd);
    for (auto& u : enumerate_base(d))
      if ((clopen_to_mask(u, dd) & ~vm) == 0) out.push_back(std::move(u));
    return out;
  }
  for (auto& u : enumerate_base(d))
    if (clopen_subset(u, v)) out.push_back(std::move(u));
  return out;
}

bool is_hereditary_sublattice(const std::vector<Clopen>& fam, int d) {
  std::unordered_set<std::uint64_t> masks;
  for (const auto& c : fam) masks.insert(clopen_to_mask(c, d));
  if (masks.empty() || !masks.count(0)) return false;
  for (std::uint64_t m : masks) {
    // Down-closure within B_d: removing one cylinder at a time reaches
    // every submask.
    for (int b = 0; b < (1 << d); ++b)
      if ((m >> b & 1) && !masks.count(m & ~(1ull << b))) return false;
    for (std::uint64_t n : masks)
      if (!masks.count(m | n) || !masks.count(m & n)) return false;
  }
  return true;
}

bool is_c_family(const std::vector<Clopen>& fam, int d) {
  std::unordered_set<std::uint64_t> masks;
  for (const auto& c : fam) masks.insert(clopen_to_mask(c, d));
  if (!masks.count(0)) return false;
  for (std::uint64_t m : masks)
    for (std::uint64_t n : masks)
      if (!masks.count(m | n) || !masks.count(m & n)) return false;
  return true;
}

bool carac_c_check(const std::vector<Clopen>& fam, int d) {
  std::unordered_set<std::uint64_t> masks;
  for (const auto& c : fam) masks.insert(clopen_to_mask(c, d));
  if (!masks.count(0)) return false;  // union of the empty family
  // Pairwise union closure implies closure for all finite families.
  for (std::uint64_t m : masks)
    for (std::uint64_t n : masks)
      if (!masks.count(m | n)) return false;
  return true;
}

bool fell_membership(const Clopen& k, FellKind kind, const Clopen& v) {
  if (kind == FellKind::v_minus) return !clopen_intersect(k, v).empty();
  return clopen_subset(k, v);
}

}  // namespace cantorlab
