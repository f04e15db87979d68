#include "gtq/casimir.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace gtq {

namespace {

int rank_of(int n) { return n / 2; }

void require_rank(int n, int d) {
  if (n < 2 || n > kMaxN) throw std::invalid_argument("n out of range");
  if (d < 1 || d > rank_of(n)) throw std::out_of_range("d must satisfy 1 <= d <= floor(n/2)");
}

mpq_class eps_of(int n) {
  mpq_class e(n % 2, 2);
  e.canonicalize();
  return e;
}

// z'_j = t^{tshift} z_j with t = q^(1/2)
int tshift(int n, int j) {
  mpq_class two_off = 2 * top_offset(n, j);
  return static_cast<int>(two_off.get_num().get_si());
}

MultiRat times_i_power(MultiRat v, int k) {
  for (int r = 0; r < k % 4; ++r) v = v.times_i();
  return v;
}

Poly t_poly(int e, long c = 1) { return Poly::monomial(var_monomial(kTVar, e), mpz_class(c)); }

// z'^p in raw variables, p may be negative
Poly primed_power(int n, int j, int p) {
  return Poly::monomial(var_monomial(var_index(n, j), p) + var_monomial(kTVar, p * tshift(n, j)));
}

// (q - q^-1)^2 = (t^2 - t^-2)^2
MultiRat q_gap_squared() { return MultiRat::from_poly((t_poly(2) - t_poly(-2)).pow(2)); }

// x'_j = x_j + offset as a MultiRat
MultiRat primed_linear(int n, int j) {
  Poly twice = Poly::variable(var_index(n, j)) * mpz_class(2) + Poly::constant(mpz_class(tshift(n, j)));
  return MultiRat::from_poly(twice) * MultiRat::constant(mpq_class(1, 2));
}

std::vector<MultiRat> shift_sequence_symbolic(int n, Mode mode) {
  std::vector<MultiRat> a;
  for (int i = 1; i <= rank_of(n); ++i) {
    RatScalar v = qnum(eps_of(n) + (i - 1), mode);
    a.push_back(MultiRat::from_rat_scalar(v * v));
  }
  return a;
}

}  // namespace

mpq_class top_offset(int n, int j) { return mpq_class(rank_of(n) - j) + eps_of(n); }

RatScalar casimir_eigenvalue(int n, int d, const std::vector<mpq_class> &top, Mode mode) {
  require_rank(n, d);
  int k = rank_of(n);
  if (static_cast<int>(top.size()) != k) throw std::invalid_argument("top row needs floor(n/2) entries");
  std::vector<RatScalar> y, a;
  for (int j = 1; j <= k; ++j) {
    RatScalar s = qnum(top[static_cast<std::size_t>(j - 1)] + top_offset(n, j), mode);
    y.push_back(s * s);
    RatScalar e = qnum(eps_of(n) + (j - 1), mode);
    a.push_back(e * e);
  }
  RatScalar v = gen_fact_esym(d, y, a, RatScalar::constant(mode, 0));
  return d % 2 ? -v : v;
}

RatScalar casimir_plus_eigenvalue(int n, const std::vector<mpq_class> &top, Mode mode) {
  if (n % 2) throw std::invalid_argument("the extra Casimir exists for even n only");
  int k = rank_of(n);
  if (static_cast<int>(top.size()) != k) throw std::invalid_argument("top row needs floor(n/2) entries");
  RatScalar v = RatScalar::constant(mode, 1);
  for (int j = 1; j <= k; ++j) v = v * qnum(top[static_cast<std::size_t>(j - 1)] + top_offset(n, j), mode);
  for (int r = 0; r < k % 4; ++r) v = v * RatScalar::imaginary_unit(mode);
  return v;
}

MultiRat casimir_eigenvalue_symbolic(int n, int d, Mode mode) {
  require_rank(n, d);
  std::vector<MultiRat> y;
  for (int j = 1; j <= rank_of(n); ++j) {
    LinearArg s;
    s.coeff[var_index(n, j)] = 1;
    s.constant = top_offset(n, j);
    MultiRat v = qnum_linear(s, mode);
    y.push_back(v * v);
  }
  MultiRat v = gen_fact_esym(d, y, shift_sequence_symbolic(n, mode), MultiRat{});
  return d % 2 ? -v : v;
}

MultiRat casimir_plus_eigenvalue_symbolic(int n, Mode mode) {
  if (n % 2) throw std::invalid_argument("the extra Casimir exists for even n only");
  MultiRat v = MultiRat::constant(1);
  for (int j = 1; j <= rank_of(n); ++j) {
    LinearArg s;
    s.coeff[var_index(n, j)] = 1;
    s.constant = top_offset(n, j);
    v = v * qnum_linear(s, mode);
  }
  return times_i_power(v, rank_of(n));
}

MultiRat phi_casimir(int n, int d, Mode mode) {
  require_rank(n, d);
  std::vector<MultiRat> y;
  MultiRat gap_inv = q_gap_squared().inverse();
  for (int j = 1; j <= rank_of(n); ++j) {
    if (mode == Mode::quantum) {
      Poly b = primed_power(n, j, 2) + primed_power(n, j, -2);
      y.push_back((MultiRat::from_poly(b) - MultiRat::constant(2)) * gap_inv);
    } else {
      MultiRat x = primed_linear(n, j);
      y.push_back(x * x);
    }
  }
  MultiRat v = gen_fact_esym(d, y, shift_sequence_symbolic(n, mode), MultiRat{});
  return d % 2 ? -v : v;
}

MultiRat phi_casimir_plus(int n, Mode mode) {
  if (n % 2) throw std::invalid_argument("the extra Casimir exists for even n only");
  MultiRat v = MultiRat::constant(1);
  for (int j = 1; j <= rank_of(n); ++j) {
    if (mode == Mode::quantum) {
      MultiRat diff = MultiRat::from_poly(primed_power(n, j, 1) - primed_power(n, j, -1));
      v = v * diff / MultiRat::from_poly(t_poly(2) - t_poly(-2));
    } else {
      v = v * primed_linear(n, j);
    }
  }
  return times_i_power(v, rank_of(n));
}

WeylGroupElement WeylGroupElement::identity(int n) {
  WeylGroupElement w;
  w.n = n;
  int k = rank_of(n);
  w.signs.assign(static_cast<std::size_t>(k), {0, 0});
  w.perm.resize(static_cast<std::size_t>(k));
  std::iota(w.perm.begin(), w.perm.end(), 0);
  return w;
}

WeylGroupElement WeylGroupElement::sigma(int n, int j) {
  WeylGroupElement w = identity(n);
  w.signs.at(static_cast<std::size_t>(j - 1))[0] = 1;
  return w;
}

WeylGroupElement WeylGroupElement::tau(int n, int j) {
  WeylGroupElement w = identity(n);
  w.signs.at(static_cast<std::size_t>(j - 1))[1] = 1;
  return w;
}

WeylGroupElement WeylGroupElement::swap(int n, int j) {
  WeylGroupElement w = identity(n);
  if (j < 1 || j >= rank_of(n)) throw std::out_of_range("swap index out of range");
  std::swap(w.perm[static_cast<std::size_t>(j - 1)], w.perm[static_cast<std::size_t>(j)]);
  return w;
}

WeylGroupElement WeylGroupElement::operator*(const WeylGroupElement &o) const {
  if (n != o.n) throw std::invalid_argument("group elements for different n");
  // s1 w1 s2 w2 = s1 (s2 o w1^-1) w1 w2
  WeylGroupElement r = identity(n);
  std::size_t k = perm.size();
  std::vector<std::size_t> inv(k);
  for (std::size_t j = 0; j < k; ++j) inv[static_cast<std::size_t>(perm[j])] = j;
  for (std::size_t j = 0; j < k; ++j) {
    r.perm[j] = perm[static_cast<std::size_t>(o.perm[j])];
    for (int c = 0; c < 2; ++c) r.signs[j][static_cast<std::size_t>(c)] = (signs[j][static_cast<std::size_t>(c)] + o.signs[inv[j]][static_cast<std::size_t>(c)]) % 2;
  }
  return r;
}

bool WeylGroupElement::in_group(Mode mode) const {
  int parity = 0;
  for (const auto &s : signs) {
    if (mode == Mode::classical && s[1]) return false;
    parity += s[0] + s[1];
  }
  return n % 2 == 1 || parity % 2 == 0;
}

std::string WeylGroupElement::to_string() const {
  std::ostringstream os;
  bool any = false;
  for (std::size_t j = 0; j < signs.size(); ++j) {
    if (signs[j][0]) os << (any ? " " : "") << "sigma_" << j + 1, any = true;
    if (signs[j][1]) os << (any ? " " : "") << "tau_" << j + 1, any = true;
  }
  bool moved = false;
  for (std::size_t j = 0; j < perm.size(); ++j) moved = moved || perm[j] != static_cast<int>(j);
  if (moved) {
    os << (any ? " " : "") << "perm[";
    for (std::size_t j = 0; j < perm.size(); ++j) os << (j ? "," : "") << perm[j] + 1;
    os << "]";
    any = true;
  }
  return any ? os.str() : "id";
}

MultiRat weyl_act(const WeylGroupElement &w, const MultiRat &f, Mode mode) {
  int n = w.n, k = rank_of(n);
  Substitution perm, sign;
  bool any_perm = false, any_sign = false;
  for (int j = 1; j <= k; ++j) {
    int to = w.perm[static_cast<std::size_t>(j - 1)] + 1;
    if (to != j) {
      any_perm = true;
      if (mode == Mode::quantum)
        perm.set(var_index(n, j), Poly::monomial(var_monomial(var_index(n, to)) + var_monomial(kTVar, tshift(n, to) - tshift(n, j))));
      else
        perm.set(var_index(n, j), Poly::variable(var_index(n, to)) * mpz_class(2) + Poly::constant(tshift(n, to) - tshift(n, j)), 2);
    }
    const auto &s = w.signs[static_cast<std::size_t>(j - 1)];
    int v = var_index(n, j);
    if (mode == Mode::quantum) {
      if (!s[0] && !s[1]) continue;
      any_sign = true;
      long c = s[1] ? -1 : 1;
      Monomial img = s[0] ? var_monomial(v, -1) + var_monomial(kTVar, -2 * tshift(n, j)) : var_monomial(v);
      sign.set(v, Poly::monomial(img, c));
    } else {
      if (s[1]) throw std::invalid_argument("tau has no classical counterpart");
      if (!s[0]) continue;
      any_sign = true;
      sign.set(v, Poly::variable(v) * mpz_class(-1) - Poly::constant(tshift(n, j)));
    }
  }
  MultiRat r = any_perm ? f.substitute(perm, mode) : f;
  return any_sign ? r.substitute(sign, mode) : r;
}

std::vector<WeylGroupElement> weyl_group(int n, Mode mode) {
  int k = rank_of(n);
  int bits = mode == Mode::quantum ? 2 * k : k;
  std::vector<WeylGroupElement> out;
  std::vector<int> p(static_cast<std::size_t>(k));
  std::iota(p.begin(), p.end(), 0);
  do {
    for (int mask = 0; mask < (1 << bits); ++mask) {
      WeylGroupElement w = WeylGroupElement::identity(n);
      w.perm = p;
      for (int j = 0; j < k; ++j) {
        w.signs[static_cast<std::size_t>(j)][0] = (mask >> j) & 1;
        if (mode == Mode::quantum) w.signs[static_cast<std::size_t>(j)][1] = (mask >> (k + j)) & 1;
      }
      if (w.in_group(mode)) out.push_back(w);
    }
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

std::vector<WeylGroupElement> weyl_generators(int n, Mode mode) {
  int k = rank_of(n);
  std::vector<WeylGroupElement> flips;
  for (int j = 1; j <= k; ++j) {
    flips.push_back(WeylGroupElement::sigma(n, j));
    if (mode == Mode::quantum) flips.push_back(WeylGroupElement::tau(n, j));
  }
  std::vector<WeylGroupElement> out;
  if (n % 2) {
    out = flips;
  } else {
    for (std::size_t a = 0; a < flips.size(); ++a)
      for (std::size_t b = a + 1; b < flips.size(); ++b) out.push_back(flips[a] * flips[b]);
  }
  for (int j = 1; j < k; ++j) out.push_back(WeylGroupElement::swap(n, j));
  return out;
}

MultiRat symmetrize(int n, const MultiRat &f, Mode mode) {
  std::vector<MultiRat> parts;
  for (const auto &w : weyl_group(n, mode)) parts.push_back(weyl_act(w, f, mode));
  return MultiRat::sum(parts);
}

namespace {

// raw -> primed (forward = true) or primed -> raw
Substitution primed_change(int n, Mode mode, bool forward) {
  Substitution s;
  int sgn = forward ? -1 : 1;
  for (int j = 1; j <= rank_of(n); ++j) {
    int v = var_index(n, j);
    if (mode == Mode::quantum)
      s.set(v, Poly::monomial(var_monomial(v) + var_monomial(kTVar, sgn * tshift(n, j))));
    else
      s.set(v, Poly::variable(v) * mpz_class(2) + Poly::constant(sgn * tshift(n, j)), 2);
  }
  return s;
}

// b_j in primed variables
Poly b_poly(int n, int j, Mode mode) {
  int v = var_index(n, j);
  if (mode == Mode::classical) return Poly::monomial(var_monomial(v, 2));
  return Poly::monomial(var_monomial(v, 2)) + Poly::monomial(var_monomial(v, -2));
}

std::vector<Poly> esym_b(int n, Mode mode) {
  int k = rank_of(n);
  // e[d] built by the recurrence over the variables
  std::vector<Poly> e(static_cast<std::size_t>(k) + 1);
  e[0] = Poly::constant(1);
  for (int j = 1; j <= k; ++j) {
    Poly b = b_poly(n, j, mode);
    for (int d = j; d >= 1; --d) e[static_cast<std::size_t>(d)] += e[static_cast<std::size_t>(d - 1)] * b;
  }
  return e;
}

Poly e_monomial(const std::vector<Poly> &e, const std::vector<int> &m) {
  Poly r = Poly::constant(1);
  for (std::size_t d = 0; d < m.size(); ++d)
    if (m[d]) r = r * e[d + 1].pow(static_cast<unsigned>(m[d]));
  return r;
}

Poly g_poly(int n, Mode mode) {
  Poly g = Poly::constant(1);
  for (int j = 1; j <= rank_of(n); ++j) {
    int v = var_index(n, j);
    if (mode == Mode::classical)
      g = g * Poly::variable(v);
    else
      g = g * (Poly::monomial(var_monomial(v)) - Poly::monomial(var_monomial(v, -1)));
  }
  return g;
}

struct Split {
  Poly num;  // Laurent in the row-n variables and t
  Poly den;  // t only
};

Split laurent_form(int n, const Factored &f) {
  auto [num, den] = f.expand();
  Monomial zpart = den.min_exponents();
  zpart.e[kTVar] = 0;
  Poly d = den.times_monomial(-zpart);
  Poly u = num.times_monomial(-zpart);
  auto dsup = d.support();
  for (int i = 0; i < kTVar; ++i)
    if (dsup[i]) throw std::domain_error("not a Laurent polynomial in the row-" + std::to_string(n) + " variables");
  auto usup = u.support();
  for (int i = 0; i < kTVar; ++i)
    if (usup[i] && var_row(i) != n) throw std::domain_error("depends on " + var_name(i, Mode::quantum) + " outside row " + std::to_string(n));
  return {u, d};
}

// Leading-term elimination by products of e_d(b); coefficients are polynomials in t.
std::map<std::vector<int>, Poly> reduce_symmetric(int n, Poly h, const std::vector<Poly> &e) {
  int k = rank_of(n);
  std::map<std::vector<int>, Poly> out;
  for (int guard = 0; !h.is_zero(); ++guard) {
    if (guard > 100000) throw std::domain_error("decomposition does not terminate");
    Monomial lead = h.lead().m;
    lead.e[kTVar] = 0;
    std::vector<Term> coef;
    for (const auto &t : h.terms()) {
      Monomial z = t.m;
      z.e[kTVar] = 0;
      if (!(z == lead)) break;
      coef.push_back(Term{var_monomial(kTVar, t.m.e[kTVar]), t.c});
    }
    std::vector<int> lam(static_cast<std::size_t>(k) + 1, 0);
    for (int j = 1; j <= k; ++j) {
      int c = lead.e[var_index(n, j)];
      if (c < 0 || c % 2) throw NotInvariant("leading exponent " + std::to_string(c) + " is not a nonnegative even number");
      lam[static_cast<std::size_t>(j - 1)] = c / 2;
    }
    std::vector<int> m(static_cast<std::size_t>(k));
    for (int d = 0; d < k; ++d) {
      m[static_cast<std::size_t>(d)] = lam[static_cast<std::size_t>(d)] - lam[static_cast<std::size_t>(d) + 1];
      if (m[static_cast<std::size_t>(d)] < 0) throw NotInvariant("leading exponents are not ordered");
    }
    Poly C = Poly::from_terms(std::move(coef));
    h = h - C * e_monomial(e, m);
    auto it = out.find(m);
    if (it == out.end()) out.emplace(m, C);
    else it->second += C;
  }
  return out;
}

void merge_part(EPolynomial &dst, const std::map<std::vector<int>, Poly> &src, const Poly &den, bool imaginary) {
  Factored inv = Factored::from_poly(den).inverse();
  for (const auto &[m, C] : src) {
    if (C.is_zero()) continue;
    Factored c = Factored::from_poly(C) * inv;
    MultiRat v = imaginary ? MultiRat(Factored{}, c) : MultiRat(c);
    auto it = dst.find(m);
    if (it == dst.end()) dst.emplace(m, v);
    else it->second = it->second + v;
  }
  for (auto it = dst.begin(); it != dst.end();) it = it->second.is_zero() ? dst.erase(it) : std::next(it);
}

void decompose_part(int n, Mode mode, const Factored &f, bool imaginary, InvariantWitness &w) {
  if (f.is_zero()) return;
  Split s = laurent_form(n, f);
  auto e = esym_b(n, mode);
  if (n % 2) {
    merge_part(w.even_part, reduce_symmetric(n, s.num, e), s.den, imaginary);
    return;
  }
  int v1 = var_index(n, 1);
  std::vector<Term> even, odd;
  for (const auto &t : s.num.terms()) (t.m.e[v1] % 2 ? odd : even).push_back(t);
  merge_part(w.even_part, reduce_symmetric(n, Poly::from_terms(std::move(even)), e), s.den, imaginary);
  Poly fo = Poly::from_terms(std::move(odd));
  if (fo.is_zero()) return;
  // f_odd = g * g_even; divide by prod (z'^2 - 1) (classical prod x') after clearing negative powers
  Poly divisor = Poly::constant(1);
  Monomial zs;
  for (int j = 1; j <= rank_of(n); ++j) {
    int v = var_index(n, j);
    if (mode == Mode::classical) {
      divisor = divisor * Poly::variable(v);
    } else {
      divisor = divisor * (Poly::monomial(var_monomial(v, 2)) - Poly::constant(1));
      zs = zs + var_monomial(v);
    }
  }
  // classical terms carry no negative powers, and prod x' is itself a monomial
  Monomial low = mode == Mode::quantum ? fo.min_exponents() : Monomial{};
  auto q = fo.times_monomial(-low).divide_exact(divisor);
  if (!q) throw NotInvariant("odd part is not divisible by g");
  Poly ge = q->times_monomial(low + zs);
  merge_part(w.odd_part, reduce_symmetric(n, ge, e), s.den, imaginary);
}

MultiRat expand_e(const EPolynomial &p, const std::vector<Poly> &e) {
  std::vector<MultiRat> parts;
  for (const auto &[m, c] : p) parts.push_back(c * MultiRat::from_poly(e_monomial(e, m)));
  return MultiRat::sum(parts);
}

}  // namespace

MultiRat InvariantWitness::expand() const {
  auto e = esym_b(n, mode);
  MultiRat v = expand_e(even_part, e);
  if (!odd_part.empty()) v = v + MultiRat::from_poly(g_poly(n, mode)) * expand_e(odd_part, e);
  return v.substitute(primed_change(n, mode, false), mode);
}

std::string InvariantWitness::to_string() const {
  auto render = [&](const EPolynomial &p) {
    std::string s;
    for (const auto &[m, c] : p) {
      if (!s.empty()) s += " + ";
      s += "(" + c.to_string(mode) + ")";
      for (std::size_t d = 0; d < m.size(); ++d)
        if (m[d]) s += "*e" + std::to_string(d + 1) + (m[d] > 1 ? "^" + std::to_string(m[d]) : "");
    }
    return s.empty() ? std::string("0") : s;
  };
  std::string out = render(even_part);
  if (!odd_part.empty()) out += " + g*(" + render(odd_part) + ")";
  return out;
}

InvariantWitness invariant_decompose(int n, const MultiRat &f, Mode mode) {
  if (n < 2 || n > kMaxN) throw std::invalid_argument("n out of range");
  for (const auto &g : weyl_generators(n, mode))
    if (!weyl_act(g, f, mode).equals(f)) throw NotInvariant("not fixed by " + g.to_string());
  InvariantWitness w;
  w.n = n;
  w.mode = mode;
  MultiRat p = f.substitute(primed_change(n, mode, true), mode);
  decompose_part(n, mode, p.re(), false, w);
  decompose_part(n, mode, p.im(), true, w);
  return w;
}

MultiRat random_invariant(int n, Mode mode, std::mt19937_64 &rng) {
  int k = rank_of(n);
  auto pick = [&](int lo, int hi) { return lo + static_cast<int>(rng() % static_cast<std::uint64_t>(hi - lo + 1)); };
  for (int attempt = 0; attempt < 100; ++attempt) {
    int parity = pick(0, 1);
    Poly mono = Poly::constant(pick(1, 5));
    for (int j = 1; j <= k; ++j) {
      int c = mode == Mode::quantum ? pick(-3, 3) : pick(0, 4);
      if (n % 2 == 0 && ((c % 2 + 2) % 2) != parity) c += c < 3 ? 1 : -1;
      if (mode == Mode::quantum)
        mono = mono * primed_power(n, j, c);
      else
        mono = mono * (Poly::variable(var_index(n, j)) * mpz_class(2) + Poly::constant(tshift(n, j))).pow(static_cast<unsigned>(c));
    }
    MultiRat f = symmetrize(n, MultiRat::from_poly(mono), mode);
    if (!f.is_zero()) return f;
  }
  throw std::runtime_error("could not draw a nonzero invariant");
}

SymbolicReport verify_invariance(int n, Mode mode, std::uint64_t seed, int random_count) {
  if (n < 2 || n > kMaxN) throw std::invalid_argument("n out of range");
  SymbolicReport rep;
  rep.n = n;
  rep.mode = mode;
  auto record = [&](std::string id, const MultiRat &residual) {
    RelationCheck c;
    c.id = std::move(id);
    c.n_terms = 1;
    if (!residual.is_zero()) {
      c.zero = false;
      c.witness = residual.to_string(mode);
    }
    rep.results.push_back(std::move(c));
  };
  auto round_trip = [&](const std::string &id, const MultiRat &f, int level) {
    try {
      record(id, invariant_decompose(level, f, mode).expand() - f);
    } catch (const std::domain_error &e) {
      RelationCheck c;
      c.id = id;
      c.zero = false;
      c.witness = e.what();
      rep.results.push_back(std::move(c));
    }
  };
  for (int level = 2; level <= n; ++level) {
    std::string L = "level " + std::to_string(level) + ": ";
    std::vector<std::pair<std::string, MultiRat>> images;
    for (int d = 1; d <= rank_of(level); ++d) images.emplace_back("C(" + std::to_string(2 * d) + ")", phi_casimir(level, d, mode));
    if (level % 2 == 0) images.emplace_back("C+", phi_casimir_plus(level, mode));
    auto gens = weyl_generators(level, mode);
    for (const auto &[name, f] : images) {
      for (const auto &g : gens) record(L + name + " fixed by " + g.to_string(), weyl_act(g, f, mode) - f);
      round_trip(L + name + " decomposes", f, level);
    }
    if (level % 2 == 0) {
      // a single sign flip lies outside the group and must negate the extra image
      WeylGroupElement flip = mode == Mode::quantum ? WeylGroupElement::tau(level, 1) : WeylGroupElement::sigma(level, 1);
      const MultiRat &plus = images.back().second;
      record(L + "C+ negated by " + flip.to_string() + " (outside the group)", weyl_act(flip, plus, mode) + plus);
    }
  }
  std::mt19937_64 rng(seed);
  for (int r = 0; r < random_count; ++r) {
    MultiRat f = random_invariant(n, mode, rng);
    round_trip("random invariant " + std::to_string(r) + " decomposes", f, n);
  }
  return rep;
}

}  // namespace gtq
