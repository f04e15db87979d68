#include "gtq/poly.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>
#include <stdexcept>

namespace gtq {

namespace {

bool term_desc(const Term &a, const Term &b) { return a.m > b.m; }

}  // namespace

Poly Poly::constant(const mpz_class &c) { return monomial(Monomial{}, c); }

Poly Poly::monomial(const Monomial &m, const mpz_class &c) {
  Poly p;
  if (c != 0) p.terms_.push_back(Term{m, c});
  return p;
}

Poly Poly::from_terms(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(), term_desc);
  Poly p;
  p.terms_.reserve(terms.size());
  for (auto &t : terms) {
    if (!p.terms_.empty() && p.terms_.back().m == t.m) {
      p.terms_.back().c += t.c;
    } else {
      if (!p.terms_.empty() && p.terms_.back().c == 0) p.terms_.pop_back();
      p.terms_.push_back(std::move(t));
    }
  }
  if (!p.terms_.empty() && p.terms_.back().c == 0) p.terms_.pop_back();
  return p;
}

Poly Poly::operator+(const Poly &o) const {
  Poly r;
  r.terms_.reserve(terms_.size() + o.terms_.size());
  std::size_t i = 0, j = 0;
  while (i < terms_.size() && j < o.terms_.size()) {
    const Term &a = terms_[i];
    const Term &b = o.terms_[j];
    if (a.m > b.m) {
      r.terms_.push_back(a);
      ++i;
    } else if (b.m > a.m) {
      r.terms_.push_back(b);
      ++j;
    } else {
      mpz_class c = a.c + b.c;
      if (c != 0) r.terms_.push_back(Term{a.m, std::move(c)});
      ++i;
      ++j;
    }
  }
  for (; i < terms_.size(); ++i) r.terms_.push_back(terms_[i]);
  for (; j < o.terms_.size(); ++j) r.terms_.push_back(o.terms_[j]);
  return r;
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto &t : r.terms_) t.c = -t.c;
  return r;
}

Poly Poly::operator-(const Poly &o) const { return *this + (-o); }

Poly Poly::operator*(const mpz_class &k) const {
  if (k == 0) return Poly{};
  Poly r = *this;
  for (auto &t : r.terms_) t.c *= k;
  return r;
}

Poly Poly::times_monomial(const Monomial &m) const {
  Poly r = *this;
  for (auto &t : r.terms_) t.m = t.m + m;
  return r;
}

Poly Poly::operator*(const Poly &o) const {
  if (is_zero() || o.is_zero()) return Poly{};
  if (o.terms_.size() == 1) return times_monomial(o.terms_[0].m) * o.terms_[0].c;
  if (terms_.size() == 1) return o.times_monomial(terms_[0].m) * terms_[0].c;
  std::vector<Term> prod;
  prod.reserve(terms_.size() * o.terms_.size());
  for (const auto &a : terms_)
    for (const auto &b : o.terms_) prod.push_back(Term{a.m + b.m, a.c * b.c});
  return from_terms(std::move(prod));
}

Poly Poly::pow(unsigned k) const {
  Poly result = constant(1);
  Poly base = *this;
  while (k) {
    if (k & 1u) result = result * base;
    k >>= 1u;
    if (k) base = base * base;
  }
  return result;
}

Monomial Poly::min_exponents() const {
  if (terms_.empty()) return Monomial{};
  Monomial r = terms_[0].m;
  for (const auto &t : terms_) r = elementwise_min(r, t.m);
  return r;
}

Monomial Poly::max_exponents() const {
  if (terms_.empty()) return Monomial{};
  Monomial r = terms_[0].m;
  for (const auto &t : terms_)
    for (int i = 0; i < kSlots; ++i) r.e[i] = std::max(r.e[i], t.m.e[i]);
  return r;
}

mpz_class Poly::content() const {
  mpz_class g = 0;
  for (const auto &t : terms_) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

bool Poly::uses_var(int idx) const {
  for (const auto &t : terms_)
    if (t.m.e[idx] != 0) return true;
  return false;
}

std::array<bool, kSlots> Poly::support() const {
  std::array<bool, kSlots> s{};
  for (const auto &t : terms_)
    for (int i = 0; i < kSlots; ++i)
      if (t.m.e[i] != 0) s[i] = true;
  return s;
}

std::optional<Poly> Poly::divide_exact(const Poly &d) const {
  if (d.is_zero()) throw std::domain_error("division by the zero polynomial");
  if (is_zero()) return Poly{};
  const Term &dl = d.lead();
  const Term &dt = d.trail();
  // Cheap necessary conditions on both ends of the lex order.
  if (!dl.m.divides(lead().m) || !mpz_divisible_p(lead().c.get_mpz_t(), dl.c.get_mpz_t()))
    return std::nullopt;
  if (!dt.m.divides(trail().m) || !mpz_divisible_p(trail().c.get_mpz_t(), dt.c.get_mpz_t()))
    return std::nullopt;
  {
    Monomial dmax = d.max_exponents(), amax = max_exponents();
    Monomial dmin = d.min_exponents(), amin = min_exponents();
    for (int i = 0; i < kSlots; ++i)
      if (dmax.e[i] - dmin.e[i] > amax.e[i] - amin.e[i]) return std::nullopt;
  }
  if (d.size() == 1) {
    Poly q;
    q.terms_.reserve(terms_.size());
    for (const auto &t : terms_) {
      if (!dl.m.divides(t.m) || !mpz_divisible_p(t.c.get_mpz_t(), dl.c.get_mpz_t()))
        return std::nullopt;
      q.terms_.push_back(Term{t.m - dl.m, t.c / dl.c});
    }
    return q;
  }
  std::map<Monomial, mpz_class, std::greater<>> rem;
  for (const auto &t : terms_) rem.emplace(t.m, t.c);
  std::vector<Term> quot;
  while (!rem.empty()) {
    auto it = rem.begin();
    if (!dl.m.divides(it->first) || !mpz_divisible_p(it->second.get_mpz_t(), dl.c.get_mpz_t()))
      return std::nullopt;
    Term qt{it->first - dl.m, it->second / dl.c};
    rem.erase(it);
    for (std::size_t k = 1; k < d.terms_.size(); ++k) {
      Monomial m = d.terms_[k].m + qt.m;
      mpz_class c = d.terms_[k].c * qt.c;
      auto [pos, inserted] = rem.try_emplace(m, 0);
      pos->second -= c;
      if (pos->second == 0) rem.erase(pos);
    }
    quot.push_back(std::move(qt));
  }
  Poly q;
  q.terms_ = std::move(quot);  // produced in decreasing order
  return q;
}

std::size_t Poly::hash() const {
  std::size_t h = 0x9e3779b97f4a7c15ull ^ terms_.size();
  for (const auto &t : terms_) {
    h ^= t.m.hash() + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    std::size_t ch = mpz_fdiv_ui(t.c.get_mpz_t(), 1000000007ul) + (mpz_sgn(t.c.get_mpz_t()) < 0 ? 17 : 0);
    h ^= ch + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  }
  return h;
}

bool Poly::operator==(const Poly &o) const {
  if (terms_.size() != o.terms_.size()) return false;
  for (std::size_t i = 0; i < terms_.size(); ++i)
    if (terms_[i].m != o.terms_[i].m || terms_[i].c != o.terms_[i].c) return false;
  return true;
}

bool Poly::less(const Poly &o) const {
  if (terms_.size() != o.terms_.size()) return terms_.size() < o.terms_.size();
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    if (terms_[i].m != o.terms_[i].m) return terms_[i].m < o.terms_[i].m;
    int c = cmp(terms_[i].c, o.terms_[i].c);
    if (c != 0) return c < 0;
  }
  return false;
}

std::string Poly::to_string(Mode mode) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto &t : terms_) {
    mpz_class c = t.c;
    bool neg = c < 0;
    if (neg) c = -c;
    if (first) {
      if (neg) os << "-";
    } else {
      os << (neg ? " - " : " + ");
    }
    first = false;
    std::string mono = t.m.to_string(mode);
    if (mono.empty()) {
      os << c.get_str();
    } else {
      if (c != 1) os << c.get_str() << "*";
      os << mono;
    }
  }
  return os.str();
}

NormalizedPoly normalize(const Poly &p) {
  if (p.is_zero()) throw std::domain_error("cannot normalize the zero polynomial");
  NormalizedPoly r;
  r.shift = p.min_exponents();
  Poly shifted = r.shift.is_one() ? p : p.times_monomial(-r.shift);
  mpz_class g = shifted.content();
  if (shifted.lead().c < 0) g = -g;
  r.scale = g;
  if (g == 1) {
    r.primitive = std::move(shifted);
  } else {
    std::vector<Term> ts;
    ts.reserve(shifted.size());
    for (const auto &t : shifted.terms()) ts.push_back(Term{t.m, t.c / g});
    r.primitive = Poly::from_terms(std::move(ts));
  }
  return r;
}

void Substitution::set(int idx, Poly image, mpz_class den) {
  if (den <= 0) throw std::invalid_argument("substitution denominator must be positive");
  active_[idx] = true;
  image_[idx] = std::move(image);
  den_[idx] = std::move(den);
}

bool Substitution::empty() const {
  for (bool a : active_)
    if (a) return false;
  return true;
}

bool Substitution::touches(const Poly &p) const {
  for (const auto &t : p.terms())
    for (int i = 0; i < kSlots; ++i)
      if (active_[i] && t.m.e[i] != 0) return true;
  return false;
}

std::pair<Poly, mpz_class> Substitution::apply(const Poly &p) const {
  if (!touches(p)) return {p, mpz_class(1)};
  // Per-variable degree bookkeeping for the common denominator.
  std::array<int, kSlots> maxdeg{};
  for (const auto &t : p.terms())
    for (int i = 0; i < kSlots; ++i)
      if (active_[i] && t.m.e[i] > maxdeg[i]) maxdeg[i] = t.m.e[i];
  mpz_class D = 1;
  for (int i = 0; i < kSlots; ++i)
    if (active_[i] && den_[i] != 1) {
      mpz_class pw;
      mpz_pow_ui(pw.get_mpz_t(), den_[i].get_mpz_t(), static_cast<unsigned long>(maxdeg[i]));
      D *= pw;
    }

  std::array<std::vector<Poly>, kSlots> powers;  // powers[i][k] = image^k
  auto power_of = [&](int i, int k) -> const Poly & {
    auto &v = powers[i];
    if (v.empty()) v.push_back(Poly::constant(1));
    while (static_cast<int>(v.size()) <= k) v.push_back(v.back() * image_[i]);
    return v[k];
  };

  std::vector<Term> out;
  for (const auto &t : p.terms()) {
    // clear every substituted slot first: images may land in slots of other substituted variables
    Monomial rest = t.m;
    for (int i = 0; i < kSlots; ++i)
      if (active_[i]) rest.e[i] = 0;
    mpz_class coef = t.c;
    Poly acc;
    bool acc_set = false;
    for (int i = 0; i < kSlots; ++i) {
      if (!active_[i]) continue;
      int e = t.m.e[i];
      if (e == 0) {
        if (den_[i] != 1 && maxdeg[i] > 0) {
          mpz_class dp;
          mpz_pow_ui(dp.get_mpz_t(), den_[i].get_mpz_t(), static_cast<unsigned long>(maxdeg[i]));
          coef *= dp;
        }
        continue;
      }
      const Poly &img = image_[i];
      if (e < 0 || img.is_monomial()) {
        if (!img.is_monomial())
          throw std::domain_error("negative power of a non-monomial substitution image");
        const Term &it = img.lead();
        if (e < 0 && (den_[i] != 1 || (it.c != 1 && it.c != -1)))
          throw std::domain_error("negative power of a non-unit substitution image");
        rest = rest + it.m.scaled(e);
        if (it.c == -1) {
          if (e % 2 != 0) coef = -coef;
        } else if (it.c != 1) {
          mpz_class pw;
          mpz_pow_ui(pw.get_mpz_t(), it.c.get_mpz_t(), static_cast<unsigned long>(e));
          coef *= pw;
        }
        if (den_[i] != 1) {
          mpz_class pw;
          mpz_pow_ui(pw.get_mpz_t(), den_[i].get_mpz_t(), static_cast<unsigned long>(maxdeg[i] - e));
          coef *= pw;
        }
      } else {
        const Poly &pw = power_of(i, e);
        acc = acc_set ? acc * pw : pw;
        acc_set = true;
        if (den_[i] != 1) {
          mpz_class dp;
          mpz_pow_ui(dp.get_mpz_t(), den_[i].get_mpz_t(), static_cast<unsigned long>(maxdeg[i] - e));
          coef *= dp;
        }
      }
    }
    if (!acc_set) {
      out.push_back(Term{rest, coef});
    } else {
      for (const auto &at : acc.terms()) out.push_back(Term{at.m + rest, at.c * coef});
    }
  }
  return {Poly::from_terms(std::move(out)), D};
}

}  // namespace gtq
