#include "gtq/factored.hpp"

#include <algorithm>
#include <sstream>

namespace gtq {

FactorKey::FactorKey(Poly primitive)
    : poly_(std::make_shared<const Poly>(std::move(primitive))), hash_(poly_->hash()) {}

namespace {

using FactorList = Factored::FactorList;

FactorList merge_lists(const FactorList &a, const FactorList &b, int sign_b) {
  FactorList r;
  r.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
      r.push_back(a[i++]);
    } else if (i == a.size() || b[j].first < a[i].first) {
      r.emplace_back(b[j].first, sign_b * b[j].second);
      ++j;
    } else {
      int e = a[i].second + sign_b * b[j].second;
      if (e != 0) r.emplace_back(a[i].first, e);
      ++i;
      ++j;
    }
  }
  return r;
}

// Inserts factor^e into a sorted list.
void add_factor(FactorList &fs, const FactorKey &k, int e) {
  if (e == 0) return;
  auto it = std::lower_bound(fs.begin(), fs.end(), k,
                             [](const auto &entry, const FactorKey &key) { return entry.first < key; });
  if (it != fs.end() && it->first == k) {
    it->second += e;
    if (it->second == 0) fs.erase(it);
  } else {
    fs.insert(it, {k, e});
  }
}

int exponent_of(const FactorList &fs, const FactorKey &k) {
  auto it = std::lower_bound(fs.begin(), fs.end(), k,
                             [](const auto &entry, const FactorKey &key) { return entry.first < key; });
  if (it != fs.end() && it->first == k) return it->second;
  return 0;
}

mpq_class mpq_pow(const mpq_class &x, int k) {
  mpq_class base = k < 0 ? mpq_class(1 / x) : x;
  unsigned long e = static_cast<unsigned long>(k < 0 ? -k : k);
  mpq_class r;
  mpz_pow_ui(r.get_num_mpz_t(), base.get_num_mpz_t(), e);
  mpz_pow_ui(r.get_den_mpz_t(), base.get_den_mpz_t(), e);
  r.canonicalize();
  return r;
}

}  // namespace

Factored Factored::constant(const mpq_class &c) {
  Factored f;
  f.c_ = c;
  return f;
}

Factored Factored::from_monomial(const Monomial &m, const mpq_class &c) {
  Factored f;
  f.c_ = c;
  if (c != 0) f.unit_ = m;
  return f;
}

Factored Factored::from_parts(mpq_class c, Monomial unit, FactorList factors) {
  Factored f;
  f.c_ = std::move(c);
  if (f.c_ == 0) return f;
  f.unit_ = unit;
  std::sort(factors.begin(), factors.end(), [](const auto &a, const auto &b) { return a.first < b.first; });
  for (auto &kv : factors) add_factor(f.fs_, kv.first, kv.second);
  return f;
}

Factored Factored::from_poly(const Poly &p) {
  if (p.is_zero()) return Factored{};
  NormalizedPoly n = normalize(p);
  Factored f;
  f.c_ = n.scale;
  f.unit_ = n.shift;
  if (!n.primitive.is_constant()) f.fs_.emplace_back(FactorKey(std::move(n.primitive)), 1);
  return f;
}

Factored Factored::operator*(const Factored &o) const {
  if (is_zero() || o.is_zero()) return Factored{};
  Factored r;
  r.c_ = c_ * o.c_;
  r.unit_ = unit_ + o.unit_;
  r.fs_ = fs_.empty() ? o.fs_ : (o.fs_.empty() ? fs_ : merge_lists(fs_, o.fs_, 1));
  return r;
}

Factored Factored::operator-() const {
  Factored r = *this;
  r.c_ = -r.c_;
  return r;
}

Factored Factored::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero");
  Factored r;
  r.c_ = 1 / c_;
  r.unit_ = -unit_;
  r.fs_ = fs_;
  for (auto &kv : r.fs_) kv.second = -kv.second;
  return r;
}

Factored Factored::pow(int k) const {
  if (k == 0) return constant(1);
  if (is_zero()) {
    if (k < 0) throw std::domain_error("negative power of zero");
    return Factored{};
  }
  Factored r;
  r.c_ = mpq_pow(c_, k);
  r.unit_ = unit_.scaled(k);
  r.fs_ = fs_;
  for (auto &kv : r.fs_) kv.second *= k;
  return r;
}

Factored Factored::operator+(const Factored &o) const {
  const Factored pair[2] = {*this, o};
  return sum(pair);
}

Factored Factored::sum(std::span<const Factored> terms, SumStats *stats) {
  std::vector<const Factored *> ts;
  ts.reserve(terms.size());
  for (const auto &t : terms)
    if (!t.is_zero()) ts.push_back(&t);
  if (ts.empty()) return Factored{};
  if (ts.size() == 1) return *ts[0];

  // Common part: componentwise minimum of unit and factor exponents.
  Monomial umin = ts[0]->unit_;
  std::vector<FactorKey> keys;
  for (const auto *t : ts) {
    umin = elementwise_min(umin, t->unit_);
    for (const auto &kv : t->fs_) keys.push_back(kv.first);
  }
  std::sort(keys.begin(), keys.end());
  keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
  std::vector<int> minexp(keys.size(), 0);
  for (std::size_t k = 0; k < keys.size(); ++k) {
    int m = 0;
    for (const auto *t : ts) m = std::min(m, exponent_of(t->fs_, keys[k]));
    minexp[k] = m;
  }
  // Exponents present in every term with a positive minimum are common too.
  for (std::size_t k = 0; k < keys.size(); ++k) {
    int m = exponent_of(ts[0]->fs_, keys[k]);
    for (const auto *t : ts) m = std::min(m, exponent_of(t->fs_, keys[k]));
    if (m > 0) minexp[k] = m;
  }

  mpz_class L = 1;
  for (const auto *t : ts) mpz_lcm(L.get_mpz_t(), L.get_mpz_t(), t->c_.get_den_mpz_t());

  std::vector<Term> all;
  std::size_t max_terms = 0;
  for (const auto *t : ts) {
    mpz_class a = t->c_.get_num() * (L / t->c_.get_den());
    Poly r = Poly::monomial(t->unit_ - umin, a);
    std::vector<std::pair<const Poly *, int>> rem;
    for (std::size_t k = 0; k < keys.size(); ++k) {
      int e = exponent_of(t->fs_, keys[k]) - minexp[k];
      if (e > 0) rem.emplace_back(&keys[k].poly(), e);
    }
    std::sort(rem.begin(), rem.end(), [](const auto &x, const auto &y) {
      return x.first->size() < y.first->size();
    });
    for (const auto &[p, e] : rem) r = r * (e == 1 ? *p : p->pow(static_cast<unsigned>(e)));
    max_terms = std::max(max_terms, r.size());
    for (const auto &term : r.terms()) all.push_back(term);
  }
  Poly S = Poly::from_terms(std::move(all));
  max_terms = std::max(max_terms, S.size());
  if (stats) {
    stats->reductions += 1;
    stats->max_terms = std::max(stats->max_terms, max_terms);
  }
  if (S.is_zero()) return Factored{};

  NormalizedPoly n = normalize(S);
  Factored out;
  out.c_ = mpq_class(n.scale, L);
  out.c_.canonicalize();
  out.unit_ = umin + n.shift;
  for (std::size_t k = 0; k < keys.size(); ++k)
    if (minexp[k] != 0) out.fs_.emplace_back(keys[k], minexp[k]);
  Poly prim = std::move(n.primitive);
  for (auto &kv : out.fs_) {
    while (kv.second < 0 && !prim.is_constant()) {
      auto q = prim.divide_exact(kv.first.poly());
      if (!q) break;
      prim = std::move(*q);
      kv.second += 1;
    }
  }
  std::erase_if(out.fs_, [](const auto &kv) { return kv.second == 0; });
  if (!prim.is_constant()) add_factor(out.fs_, FactorKey(std::move(prim)), 1);
  return out;
}

Factored Factored::substitute(const Substitution &s, Mode mode) const {
  if (is_zero() || s.empty()) return *this;
  Factored r;
  r.c_ = c_;
  // Unit variables hit by the substitution are handled like factors.
  std::vector<std::pair<Poly, int>> touched;
  for (int i = 0; i < kSlots; ++i) {
    if (unit_.e[i] == 0) continue;
    if (s.active(i)) {
      touched.emplace_back(Poly::variable(i), unit_.e[i]);
    } else {
      r.unit_.e[i] = unit_.e[i];
    }
  }
  for (const auto &kv : fs_) {
    if (s.touches(kv.first.poly())) {
      touched.emplace_back(kv.first.poly(), kv.second);
    } else {
      r.fs_.push_back(kv);
    }
  }
  for (const auto &[base, e] : touched) {
    auto [img, D] = s.apply(base);
    if (img.is_zero()) {
      if (e < 0)
        throw DenominatorVanishes("denominator factor " + base.to_string(mode) + " vanishes");
      return Factored{};
    }
    NormalizedPoly n = normalize(img);
    mpq_class ratio(n.scale, D);
    ratio.canonicalize();
    r.c_ *= mpq_pow(ratio, e);
    r.unit_ = r.unit_ + n.shift.scaled(e);
    if (!n.primitive.is_constant()) add_factor(r.fs_, FactorKey(std::move(n.primitive)), e);
  }
  return r;
}

std::array<bool, kSlots> Factored::support() const {
  std::array<bool, kSlots> s{};
  if (is_zero()) return s;
  for (int i = 0; i < kSlots; ++i) s[i] = unit_.e[i] != 0;
  for (const auto &kv : fs_) {
    auto fsup = kv.first.poly().support();
    for (int i = 0; i < kSlots; ++i) s[i] = s[i] || fsup[i];
  }
  return s;
}

std::pair<Poly, Poly> Factored::expand() const {
  if (is_zero()) return {Poly{}, Poly::constant(1)};
  Monomial up, down;
  for (int i = 0; i < kSlots; ++i) {
    if (unit_.e[i] > 0) up.e[i] = unit_.e[i];
    if (unit_.e[i] < 0) down.e[i] = static_cast<std::int16_t>(-unit_.e[i]);
  }
  Poly num = Poly::monomial(up, c_.get_num());
  Poly den = Poly::monomial(down, c_.get_den());
  for (const auto &kv : fs_) {
    if (kv.second > 0) {
      num = num * kv.first.poly().pow(static_cast<unsigned>(kv.second));
    } else {
      den = den * kv.first.poly().pow(static_cast<unsigned>(-kv.second));
    }
  }
  return {num, den};
}

std::string Factored::to_string(Mode mode) const {
  if (is_zero()) return "0";
  std::ostringstream body;
  std::string u = unit_.to_string(mode);
  if (!u.empty()) body << "*" << u;
  for (const auto &kv : fs_) {
    body << "*(" << kv.first.poly().to_string(mode) << ")";
    if (kv.second != 1) body << "^" << kv.second;
  }
  std::string rest = body.str();
  if (rest.empty()) return c_.get_str();
  // a unit coefficient is written as a sign only
  if (c_ == 1) return rest.substr(1);
  if (c_ == -1) return "-" + rest.substr(1);
  return c_.get_str() + rest;
}

}  // namespace gtq
