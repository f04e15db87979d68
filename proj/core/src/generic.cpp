#include "gtq/generic.hpp"

#include <chrono>
#include <stdexcept>

#include <json.hpp>

#include "gtq/pattern.hpp"
#include "gtq/relations.hpp"

namespace gtq {

int shift_dim(int n) {
  int N = 0;
  for (int i = 2; i <= n - 1; ++i) N += i / 2;
  return N;
}

std::vector<std::pair<int, int>> shift_entries(int n) {
  std::vector<std::pair<int, int>> out;
  for (int r = n - 1; r >= 2; --r)
    for (int c = 1; c <= r / 2; ++c) out.emplace_back(r, c);
  return out;
}

int shift_position(int n, int row, int col) {
  if (row < 2 || row > n - 1 || col < 1 || col > row / 2)
    throw std::out_of_range("entry (" + std::to_string(row) + "," + std::to_string(col) + ") has no shift");
  int pos = 0;
  for (int r = n - 1; r > row; --r) pos += r / 2;
  return pos + col - 1;
}

ShiftVec unit_shift(int n, int row, int col, int direction) {
  ShiftVec a(static_cast<std::size_t>(shift_dim(n)), 0);
  a[static_cast<std::size_t>(shift_position(n, row, col))] = direction;
  return a;
}

ShiftVec operator+(const ShiftVec &a, const ShiftVec &b) {
  if (a.size() != b.size()) throw std::invalid_argument("shift vectors of different length");
  ShiftVec r(a.size());
  for (std::size_t k = 0; k < a.size(); ++k) r[k] = a[k] + b[k];
  return r;
}

std::string to_string(const ShiftVec &a) {
  std::string s = "(";
  for (std::size_t k = 0; k < a.size(); ++k) {
    if (k) s += ",";
    s += std::to_string(a[k]);
  }
  return s + ")";
}

FormalVector FormalVector::base(int n) {
  FormalVector v;
  v.n = n;
  v.terms.emplace(ShiftVec(static_cast<std::size_t>(shift_dim(n)), 0), MultiRat::constant(1));
  return v;
}

void FormalVector::add(const ShiftVec &a, const MultiRat &c) {
  if (c.is_zero()) return;
  auto it = terms.find(a);
  if (it == terms.end()) {
    terms.emplace(a, c);
    return;
  }
  it->second = it->second + c;
  if (it->second.is_zero()) terms.erase(it);
}

bool FormalVector::equals(const FormalVector &o) const {
  if (n != o.n) return false;
  for (const auto &[a, c] : terms) {
    auto it = o.terms.find(a);
    if (it == o.terms.end() || !it->second.equals(c)) return false;
  }
  for (const auto &[a, c] : o.terms)
    if (!terms.count(a)) return false;
  return true;
}

std::vector<ActionTerm> action_terms(const PointView &v, int i, Mode mode) {
  if (i < 2 || i > v.n()) throw std::out_of_range("generator index out of range");
  std::vector<ActionTerm> out;
  bool odd = i % 2 == 1;
  int row = i - 1;
  for (int j = 1; j <= GTPattern::row_length(row); ++j) {
    MultiRat up = eval_symbolic(odd ? coeff::odd_up(v, i, j) : coeff::even_up(v, i, j), mode);
    MultiRat down = eval_symbolic(odd ? coeff::odd_down(v, i, j) : coeff::even_down(v, i, j), mode);
    if (!up.is_zero()) out.push_back({row, j, +1, up});
    if (!down.is_zero()) out.push_back({row, j, -1, -down});
  }
  if (!odd) {
    MultiRat c = eval_symbolic(coeff::even_diag(v, i), mode);
    if (!c.is_zero()) out.push_back({row, 0, 0, c.times_i()});
  }
  return out;
}

namespace {

PointView symbolic_point(int n, const ShiftVec &a) {
  PointView v = PointView::symbolic(n);
  auto entries = shift_entries(n);
  for (std::size_t k = 0; k < entries.size(); ++k)
    if (a[k] != 0) v = v.shifted(entries[k].first, entries[k].second, a[k]);
  return v;
}

ShiftVec target(int n, const ShiftVec &a, const ActionTerm &t) {
  if (t.direction == 0) return a;
  ShiftVec r = a;
  r[static_cast<std::size_t>(shift_position(n, t.row, t.col))] += t.direction;
  return r;
}

// Coefficient lists of each generator at each visited point.
class ActionCache {
public:
  ActionCache(int n, Mode mode) : n_(n), mode_(mode) {}
  const std::vector<ActionTerm> &at(int i, const ShiftVec &a) {
    auto key = std::make_pair(i, a);
    auto it = cache_.find(key);
    if (it != cache_.end()) return it->second;
    return cache_.emplace(key, action_terms(symbolic_point(n_, a), i, mode_)).first->second;
  }

private:
  int n_;
  Mode mode_;
  std::map<std::pair<int, ShiftVec>, std::vector<ActionTerm>> cache_;
};

using LazyVector = std::vector<std::pair<ShiftVec, MultiRat>>;

LazyVector apply_word(int n, const std::vector<int> &word, ActionCache &cache) {
  LazyVector cur{{ShiftVec(static_cast<std::size_t>(shift_dim(n)), 0), MultiRat::constant(1)}};
  for (auto g = word.rbegin(); g != word.rend(); ++g) {
    LazyVector next;
    for (const auto &[a, c] : cur)
      for (const auto &t : cache.at(*g, a)) next.emplace_back(target(n, a, t), c * t.coeff);
    cur = std::move(next);
  }
  return cur;
}

}  // namespace

FormalVector generic_action(int n, int i, const FormalVector &v, Mode mode) {
  if (v.n != n) throw std::invalid_argument("formal vector has a different n");
  FormalVector out;
  out.n = n;
  for (const auto &[a, c] : v.terms)
    for (const auto &t : action_terms(symbolic_point(n, a), i, mode)) out.add(target(n, a, t), c * t.coeff);
  return out;
}

bool SymbolicReport::passed() const {
  for (const auto &r : results)
    if (!r.zero) return false;
  return true;
}

SymbolicReport verify_generic_relations(int n, Mode mode) {
  if (n < 2 || n > kMaxN) throw std::invalid_argument("n out of range");
  SymbolicReport rep;
  rep.n = n;
  rep.mode = mode;
  ActionCache cache(n, mode);
  const MultiRat two = qnum_two(mode);
  for (const auto &rel : defining_relations(n)) {
    RelationCheck res;
    res.id = rel.id;
    auto started = std::chrono::steady_clock::now();
    std::map<ShiftVec, std::vector<MultiRat>> collected;
    for (const auto &term : rel.terms) {
      for (auto &[a, c] : apply_word(n, term.word, cache)) {
        MultiRat v = term.times_qtwo ? c * two : c;
        if (term.sign < 0) v = -v;
        collected[a].push_back(std::move(v));
        ++res.n_terms;
      }
    }
    for (const auto &[a, parts] : collected) {
      MultiRat s = MultiRat::sum(parts, &rep.stats);
      if (!s.is_zero()) {
        res.zero = false;
        res.witness = "shift " + to_string(a) + ": " + s.to_string(mode);
        break;
      }
    }
    res.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
    rep.results.push_back(std::move(res));
  }
  return rep;
}

mpq_class AdmissibleBase::at(int row, int col) const {
  if (row == n) return top.at(static_cast<std::size_t>(col - 1));
  auto it = base.find({row, col});
  if (it == base.end())
    throw std::invalid_argument("base entry (" + std::to_string(row) + "," + std::to_string(col) + ") is missing");
  return it->second;
}

AdmissibleBase prime_reciprocal_base(int n, const std::vector<mpq_class> &top) {
  AdmissibleBase b;
  b.n = n;
  b.top = top;
  long p = 3;
  auto is_prime = [](long x) {
    for (long d = 2; d * d <= x; ++d)
      if (x % d == 0) return false;
    return true;
  };
  for (const auto &[r, c] : shift_entries(n)) {
    mpq_class v(1, p);
    v.canonicalize();
    b.base[{r, c}] = v;
    do p += 2;
    while (!is_prime(p));
  }
  return b;
}

AdmissibleBase integer_base(int n, const std::vector<mpq_class> &top) {
  AdmissibleBase b;
  b.n = n;
  b.top = top;
  int k = 0;
  for (const auto &[r, c] : shift_entries(n)) b.base[{r, c}] = mpq_class(k++ % 3);
  return b;
}

namespace {

bool is_integer(const mpq_class &x) { return x.get_den() == 1; }

std::string entry(int r, int c) { return "m_{" + std::to_string(r) + "," + std::to_string(c) + "}"; }

}  // namespace

Admissibility check_admissible(const AdmissibleBase &b) {
  if (b.n < 2) throw std::invalid_argument("n must be at least 2");
  if (b.top.size() != static_cast<std::size_t>(b.n / 2)) throw std::invalid_argument("top row has the wrong length");
  Admissibility out;
  auto fail = [&](std::string msg) {
    out.admissible = false;
    out.violations.push_back(std::move(msg));
  };
  // With q not a root of unity, q^y = 1 for rational y iff y = 0, and q^y = -1 never.
  for (int r = b.n - 1; r >= 2; --r) {
    int len = r / 2;
    for (int c1 = 1; c1 <= len; ++c1)
      for (int c2 = c1 + 1; c2 <= len; ++c2) {
        mpq_class s = b.at(r, c1) + b.at(r, c2), d = b.at(r, c1) - b.at(r, c2);
        if (is_integer(s))
          fail(entry(r, c1) + " + " + entry(r, c2) + " = " + s.get_str() + " is an integer: q^(2m+2m'+2k) = 1 at k = " +
               mpq_class(-s).get_str());
        if (is_integer(d))
          fail(entry(r, c1) + " - " + entry(r, c2) + " = " + d.get_str() + " is an integer: q^(2m-2m'+2k) = 1 at k = " +
               mpq_class(-d).get_str());
      }
    if (r % 2 == 1)
      for (int c = 1; c <= len; ++c) {
        mpq_class m = b.at(r, c);
        if (is_integer(m))
          fail(entry(r, c) + " = " + m.get_str() + " is an integer: q^(2m+2k) = 1 at k = " + mpq_class(-m).get_str());
        mpq_class m2 = 2 * m;
        if (is_integer(m2))
          fail(entry(r, c) + " = " + m.get_str() + " has 2m integral: q^(4m+2k) = 1 at k = " + mpq_class(-m2).get_str());
      }
  }
  return out;
}

namespace {

std::vector<ShiftVec> window_points(int N, int radius) {
  std::vector<ShiftVec> out;
  ShiftVec a(static_cast<std::size_t>(N), -radius);
  while (true) {
    out.push_back(a);
    int k = N - 1;
    while (k >= 0 && a[static_cast<std::size_t>(k)] == radius) a[static_cast<std::size_t>(k--)] = -radius;
    if (k < 0) break;
    ++a[static_cast<std::size_t>(k)];
  }
  return out;
}

bool inside(const ShiftVec &a, int radius) {
  for (int x : a)
    if (x < -radius || x > radius) return false;
  return true;
}

}  // namespace

WindowTable instantiate_window(const AdmissibleBase &b, int radius, Mode mode) {
  if (radius < 0) throw std::invalid_argument("radius must be nonnegative");
  Admissibility adm = check_admissible(b);
  if (!adm.admissible) throw std::invalid_argument("inadmissible base: " + adm.violations.front());
  mpz_class L = 1;
  for (int r = 2; r <= b.n; ++r)
    for (int c = 1; c <= r / 2; ++c) mpz_lcm(L.get_mpz_t(), L.get_mpz_t(), b.at(r, c).get_den_mpz_t());
  if (!L.fits_sint_p() || L > 4096) throw std::invalid_argument("base denominators are too large");
  WindowTable w;
  w.n = b.n;
  w.mode = mode;
  w.root = 2 * static_cast<int>(L.get_si());
  w.radius = radius;
  w.points = window_points(b.N(), radius);
  auto entries = shift_entries(b.n);
  const RatScalar I = RatScalar::imaginary_unit(mode, w.root);
  for (const auto &a : w.points) {
    std::vector<std::vector<mpq_class>> rows;
    rows.push_back(b.top);
    for (int r = b.n - 1; r >= 2; --r) {
      std::vector<mpq_class> row;
      for (int c = 1; c <= r / 2; ++c) row.push_back(b.at(r, c) + a[static_cast<std::size_t>(shift_position(b.n, r, c))]);
      rows.push_back(std::move(row));
    }
    PointView v = PointView::values(b.n, rows);
    for (int i = 2; i <= b.n; ++i) {
      bool odd = i % 2 == 1;
      int row = i - 1;
      auto push = [&](int col, int dir, RatScalar value) {
        if (value.is_zero()) return;
        ShiftVec to = dir == 0 ? a : a + unit_shift(b.n, row, col, dir);
        w.entries.push_back({a, i, to, std::move(value), !inside(to, radius)});
      };
      for (int j = 1; j <= GTPattern::row_length(row); ++j) {
        push(j, +1, eval_exact(odd ? coeff::odd_up(v, i, j) : coeff::even_up(v, i, j), mode, ZeroPolicy::strict, w.root).value);
        push(j, -1,
             -eval_exact(odd ? coeff::odd_down(v, i, j) : coeff::even_down(v, i, j), mode, ZeroPolicy::strict, w.root).value);
      }
      if (!odd) push(0, 0, I * eval_exact(coeff::even_diag(v, i), mode, ZeroPolicy::strict, w.root).value);
    }
  }
  return w;
}

std::string window_to_json(const WindowTable &w) {
  nlohmann::json j;
  j["n"] = w.n;
  j["mode"] = to_string(w.mode);
  j["t"] = "q^(1/" + std::to_string(w.root) + ")";
  j["radius"] = w.radius;
  j["points"] = w.points.size();
  nlohmann::json es = nlohmann::json::array();
  for (const auto &e : w.entries)
    es.push_back({{"from", e.from}, {"generator", e.generator}, {"to", e.to}, {"coeff", e.value.to_string()},
                  {"leaves_window", e.leaves_window}});
  j["entries"] = std::move(es);
  return j.dump(2);
}

}  // namespace gtq
