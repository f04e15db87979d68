#include "gtq/skew.hpp"

#include <chrono>
#include <stdexcept>
#include <tuple>

#include <json.hpp>

#include "gtq/relations.hpp"

namespace gtq {

namespace {

void require_same(const SkewElement &a, const SkewElement &b) {
  if (a.n != b.n) throw std::invalid_argument("skew elements for different n");
  if (a.mode != b.mode) throw std::invalid_argument("mixing quantum and classical skew elements");
}

GroupElement identity(int n) { return GroupElement(static_cast<std::size_t>(shift_dim(n)), 0); }

GroupElement negated(const GroupElement &mu) {
  GroupElement r(mu.size());
  for (std::size_t k = 0; k < mu.size(); ++k) r[k] = -mu[k];
  return r;
}

}  // namespace

SkewElement SkewElement::zero(int n, Mode mode) {
  SkewElement s;
  s.n = n;
  s.mode = mode;
  return s;
}

SkewElement SkewElement::scalar(int n, Mode mode, const MultiRat &f) {
  SkewElement s = zero(n, mode);
  s.add(identity(n), f);
  return s;
}

SkewElement SkewElement::shift(int n, Mode mode, const GroupElement &mu) {
  if (mu.size() != static_cast<std::size_t>(shift_dim(n))) throw std::invalid_argument("group element has the wrong length");
  SkewElement s = zero(n, mode);
  s.add(mu, MultiRat::constant(1));
  return s;
}

void SkewElement::add(const GroupElement &mu, const MultiRat &f) {
  if (f.is_zero()) return;
  auto it = terms.find(mu);
  if (it == terms.end()) {
    terms.emplace(mu, f);
    return;
  }
  it->second = it->second + f;
  if (it->second.is_zero()) terms.erase(it);
}

bool SkewElement::equals(const SkewElement &o) const { return (*this - o).is_zero(); }

SkewElement SkewElement::operator+(const SkewElement &o) const {
  require_same(*this, o);
  SkewElement r = *this;
  for (const auto &[mu, f] : o.terms) r.add(mu, f);
  return r;
}

SkewElement SkewElement::operator-(const SkewElement &o) const {
  require_same(*this, o);
  SkewElement r = *this;
  for (const auto &[mu, f] : o.terms) r.add(mu, -f);
  return r;
}

SkewElement SkewElement::scaled(const MultiRat &c) const {
  SkewElement r = zero(n, mode);
  for (const auto &[mu, f] : terms) r.add(mu, c * f);
  return r;
}

MultiRat twist(int n, const GroupElement &mu, const MultiRat &f, Mode mode) {
  if (mu.size() != static_cast<std::size_t>(shift_dim(n))) throw std::invalid_argument("group element has the wrong length");
  Substitution s;
  auto entries = shift_entries(n);
  bool any = false;
  for (std::size_t k = 0; k < entries.size(); ++k) {
    int e = mu[k];
    if (e == 0) continue;
    any = true;
    int var = var_index(entries[k].first, entries[k].second);
    if (mode == Mode::quantum)
      s.set(var, Poly::monomial(var_monomial(var) + var_monomial(kTVar, -2 * e)));
    else
      s.set(var, Poly::variable(var) - Poly::constant(e));
  }
  if (!any) return f;
  return f.substitute(s, mode);
}

SkewElement skew_multiply(const SkewElement &a, const SkewElement &b) {
  require_same(a, b);
  SkewElement r = SkewElement::zero(a.n, a.mode);
  std::map<GroupElement, std::vector<MultiRat>> parts;
  for (const auto &[mu, f] : a.terms)
    for (const auto &[nu, g] : b.terms) parts[mu + nu].push_back(f * twist(a.n, mu, g, a.mode));
  for (const auto &[mu, ps] : parts) r.add(mu, MultiRat::sum(ps));
  return r;
}

SkewElement phi_generator(int n, int i, Mode mode) {
  SkewElement s = SkewElement::zero(n, mode);
  // delta * a (resp. delta^-1 * a-hat) in normal form is twist(delta, a) (x) delta.
  for (const auto &t : action_terms(PointView::symbolic(n), i, mode)) {
    if (t.direction == 0) {
      s.add(identity(n), t.coeff);
      continue;
    }
    GroupElement mu = unit_shift(n, t.row, t.col, t.direction);
    s.add(mu, twist(n, mu, t.coeff, mode));
  }
  return s;
}

FormalVector skew_apply(const SkewElement &s, const FormalVector &v) {
  if (s.n != v.n) throw std::invalid_argument("skew element and vector for different n");
  FormalVector out;
  out.n = v.n;
  for (const auto &[a, c] : v.terms)
    for (const auto &[mu, f] : s.terms) {
      GroupElement to = a + mu;
      // f is read at the target point alpha0 + to
      out.add(to, c * twist(s.n, negated(to), f, s.mode));
    }
  return out;
}

namespace {

// Twists of the generator images, keyed by generator, group point of the term and prefix.
class TwistCache {
public:
  TwistCache(int n, Mode mode) : n_(n), mode_(mode) {
    for (int i = 2; i <= n; ++i) gens_.emplace(i, phi_generator(n, i, mode));
  }
  const SkewElement &gen(int i) const { return gens_.at(i); }
  const MultiRat &twisted(int i, const GroupElement &term, const GroupElement &prefix) {
    auto key = std::make_tuple(i, term, prefix);
    auto it = cache_.find(key);
    if (it != cache_.end()) return it->second;
    return cache_.emplace(key, twist(n_, prefix, gens_.at(i).terms.at(term), mode_)).first->second;
  }

private:
  int n_;
  Mode mode_;
  std::map<int, SkewElement> gens_;
  std::map<std::tuple<int, GroupElement, GroupElement>, MultiRat> cache_;
};

using LazySkew = std::vector<std::pair<GroupElement, MultiRat>>;

// Word product expanded left to right; nothing is summed.
LazySkew word_product(int n, const std::vector<int> &word, TwistCache &cache) {
  LazySkew cur{{identity(n), MultiRat::constant(1)}};
  for (int g : word) {
    LazySkew next;
    for (const auto &[mu, f] : cur)
      for (const auto &[nu, h] : cache.gen(g).terms) next.emplace_back(mu + nu, f * cache.twisted(g, nu, mu));
    cur = std::move(next);
  }
  return cur;
}

}  // namespace

SymbolicReport verify_embedding(int n, Mode mode) {
  if (n < 2 || n > kMaxN) throw std::invalid_argument("n out of range");
  SymbolicReport rep;
  rep.n = n;
  rep.mode = mode;
  TwistCache cache(n, mode);
  const MultiRat two = qnum_two(mode);
  for (const auto &rel : defining_relations(n)) {
    RelationCheck res;
    res.id = rel.id;
    auto started = std::chrono::steady_clock::now();
    std::map<GroupElement, std::vector<MultiRat>> collected;
    for (const auto &term : rel.terms) {
      for (auto &[mu, f] : word_product(n, term.word, cache)) {
        MultiRat v = term.times_qtwo ? f * two : f;
        if (term.sign < 0) v = -v;
        collected[mu].push_back(std::move(v));
        ++res.n_terms;
      }
    }
    for (const auto &[mu, parts] : collected) {
      MultiRat s = MultiRat::sum(parts, &rep.stats);
      if (!s.is_zero()) {
        res.zero = false;
        res.witness = "group point " + to_string(mu) + ": " + s.to_string(mode);
        break;
      }
    }
    res.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
    rep.results.push_back(std::move(res));
  }
  return rep;
}

std::string skew_to_json(const SkewElement &s) {
  nlohmann::json arr = nlohmann::json::array();
  auto entries = shift_entries(s.n);
  for (const auto &[mu, f] : s.terms) {
    nlohmann::json delta = nlohmann::json::object();
    for (std::size_t k = 0; k < entries.size(); ++k)
      if (mu[k] != 0) delta[std::to_string(entries[k].first) + "," + std::to_string(entries[k].second)] = mu[k];
    arr.push_back({{"delta", delta}, {"coeff", f.to_string(s.mode)}});
  }
  return arr.dump();
}

}  // namespace gtq
