#include "cantorlab/homeo.hpp"

#include <algorithm>
#include <map>

#include "cantorlab/errors.hpp"

namespace cantorlab {

namespace {

bool is_prefix(const std::string& p, const std::string& w) {
  return p.size() <= w.size() && w.compare(0, p.size(), p) == 0;
}

void require_prefix_free(const std::vector<std::string>& ws,
                         const char* side) {
  for (std::size_t i = 0; i < ws.size(); ++i)
    for (std::size_t j = 0; j < ws.size(); ++j)
      if (i != j && is_prefix(ws[i], ws[j]))
        throw MalformedQueryError(std::string(side) +
                                  " words are not prefix-free: " + ws[i] +
                                  " vs " + ws[j]);
}

}  // namespace

PrefixMap PrefixMap::from_rules(std::vector<Rule> rules) {
  for (const auto& [dw, iw] : rules)
    for (char ch : dw + iw)
      if (ch != '0' && ch != '1')
        throw MalformedQueryError("rule words must be over {0,1}");

  // Sibling reduction: w0->v0 plus w1->v1 collapse to w->v, to fixpoint.
  std::map<std::string, std::string> m;
  for (auto& [dw, iw] : rules)
    if (!m.emplace(dw, iw).second)
      throw MalformedQueryError("duplicate domain word " + dw);
  bool changed = true;
  while (changed) {
    changed = false;
    for (auto it = m.begin(); it != m.end(); ++it) {
      const auto& [dw, iw] = *it;
      if (dw.empty() || dw.back() != '0' || iw.empty() || iw.back() != '0')
        continue;
      std::string dsib = dw, isib = iw;
      dsib.back() = '1';
      isib.back() = '1';
      auto sib = m.find(dsib);
      if (sib != m.end() && sib->second == isib) {
        std::string dparent = dw.substr(0, dw.size() - 1);
        std::string iparent = iw.substr(0, iw.size() - 1);
        m.erase(sib);
        m.erase(it);
        m.emplace(std::move(dparent), std::move(iparent));
        changed = true;
        break;
      }
    }
  }

  PrefixMap h;
  std::vector<std::string> dws, iws;
  for (auto& [dw, iw] : m) {
    dws.push_back(dw);
    iws.push_back(iw);
    h.rules_.emplace_back(dw, iw);
  }
  require_prefix_free(dws, "domain");
  require_prefix_free(iws, "image");
  return h;  // std::map iteration already sorts by domain word
}

PrefixMap PrefixMap::identity_on(const Clopen& u) {
  std::vector<Rule> rules;
  for (const auto& w : u.words()) rules.emplace_back(w, w);
  return from_rules(std::move(rules));
}

Clopen PrefixMap::domain_clopen() const {
  std::vector<std::string> ws;
  for (const auto& [dw, iw] : rules_) ws.push_back(dw);
  return Clopen::from_words(std::move(ws));
}

Clopen PrefixMap::image_clopen() const {
  std::vector<std::string> ws;
  for (const auto& [dw, iw] : rules_) ws.push_back(iw);
  return Clopen::from_words(std::move(ws));
}

int PrefixMap::rule_depth() const {
  std::size_t d = 0;
  for (const auto& [dw, iw] : rules_)
    d = std::max({d, dw.size(), iw.size()});
  return static_cast<int>(d);
}

std::string to_string(const PrefixMap& h) {
  std::string out = "{";
  for (std::size_t i = 0; i < h.rules().size(); ++i) {
    if (i) out += ",";
    const auto& [dw, iw] = h.rules()[i];
    out += (dw.empty() ? "ε" : dw) + "->" + (iw.empty() ? "ε" : iw);
  }
  return out + "}";
}

PrefixMap pm_compose(const PrefixMap& f, const PrefixMap& g) {
  std::vector<PrefixMap::Rule> rules;
  for (const auto& [a, b] : g.rules())
    for (const auto& [c, e] : f.rules()) {
      if (is_prefix(c, b))  // g sends [a] inside [c]
        rules.emplace_back(a, e + b.substr(c.size()));
      else if (is_prefix(b, c) && b.size() < c.size())
        // only the part of [a] refined by c's extra suffix lands in dom(f)
        rules.emplace_back(a + c.substr(b.size()), e);
    }
  return PrefixMap::from_rules(std::move(rules));
}

PrefixMap pm_invert(const PrefixMap& f) {
  std::vector<PrefixMap::Rule> rules;
  rules.reserve(f.rules().size());
  for (const auto& [dw, iw] : f.rules()) rules.emplace_back(iw, dw);
  return PrefixMap::from_rules(std::move(rules));
}

Clopen image_clopen(const PrefixMap& h, const Clopen& u) {
  std::vector<std::string> out;
  for (const auto& [dw, iw] : h.rules()) {
    // every word of u ∩ [dw] extends dw; swap the prefix
    const Clopen part = clopen_intersect(u, Clopen::cylinder(dw));
    for (const auto& w : part.words())
      out.push_back(iw + w.substr(dw.size()));
  }
  return Clopen::from_words(std::move(out));
}

ApplyResult apply_point(const PrefixMap& h, const std::string& x_prefix) {
  bool partial = false;
  for (const auto& [dw, iw] : h.rules()) {
    if (is_prefix(dw, x_prefix))
      return {ApplyResult::determined, iw + x_prefix.substr(dw.size())};
    if (is_prefix(x_prefix, dw)) partial = true;
  }
  return {partial ? ApplyResult::needs_more_input
                  : ApplyResult::outside_domain,
          ""};
}

bool hco_membership(const PrefixMap& h, const HcoQuery& query) {
  return std::visit(
      [&h](const auto& q) -> bool {
        using T = std::decay_t<decltype(q)>;
        if constexpr (std::is_same_v<T, HcoKV>) {
          return clopen_subset(q.k, h.domain_clopen()) &&
                 clopen_subset(image_clopen(h, q.k), q.v);
        } else if constexpr (std::is_same_v<T, HcoKVInv>) {
          return clopen_subset(q.k, image_clopen(h, q.v));
        } else if constexpr (std::is_same_v<T, HcoDMinus>) {
          return !clopen_intersect(clopen_complement(h.domain_clopen()), q.v)
                      .empty();
        } else if constexpr (std::is_same_v<T, HcoIMinus>) {
          return !clopen_intersect(clopen_complement(h.image_clopen()), q.v)
                      .empty();
        } else {
          static_assert(std::is_same_v<T, HcoE>);
          return clopen_subset(q.v, h.domain_clopen()) &&
                 clopen_subset(q.w, h.image_clopen()) &&
                 image_clopen(h, q.v) == q.w;
        }
      },
      query);
}

bool is_gamma_base_member(const PrefixMap& h, int d) {
  if (d < 0 || d > 3)
    throw ResourceLimitError("is_gamma_base_member limited to depth 3");
  const PrefixMap hinv = pm_invert(h);
  for (const auto& u : tilde_truncated(h.domain_clopen(), d))
    if (!hco_membership(h, HcoE{u, image_clopen(h, u)})) return false;
  for (const auto& u : tilde_truncated(h.image_clopen(), d))
    if (!hco_membership(hinv, HcoE{u, image_clopen(hinv, u)})) return false;
  return true;
}

}  // namespace cantorlab
