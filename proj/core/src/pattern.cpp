#include "gtq/pattern.hpp"

#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace gtq {

GTPattern::GTPattern(int n, std::vector<std::vector<HalfInt>> rows) : n_(n), rows_(std::move(rows)) {
  if (n < 2 || n > 64) throw std::invalid_argument("pattern size n must be at least 2");
  if (static_cast<int>(rows_.size()) != n - 1)
    throw std::invalid_argument("pattern for n=" + std::to_string(n) + " needs " + std::to_string(n - 1) + " rows");
  for (int r = n; r >= 2; --r)
    if (static_cast<int>(row(r).size()) != row_length(r))
      throw std::invalid_argument("row " + std::to_string(r) + " must have " + std::to_string(row_length(r)) + " entries");
}

GTPattern GTPattern::zeros(int n) {
  std::vector<std::vector<HalfInt>> rows;
  for (int r = n; r >= 2; --r) rows.emplace_back(static_cast<std::size_t>(row_length(r)));
  return GTPattern(n, std::move(rows));
}

std::vector<HalfInt> GTPattern::flattened() const {
  std::vector<HalfInt> v;
  for (const auto &r : rows_) v.insert(v.end(), r.begin(), r.end());
  return v;
}

std::string GTPattern::to_string() const {
  std::ostringstream os;
  os << "(";
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    if (r) os << ",";
    os << "(";
    for (std::size_t c = 0; c < rows_[r].size(); ++c) {
      if (c) os << ",";
      os << rows_[r][c].to_string();
    }
    os << ")";
  }
  os << ")";
  return os.str();
}

namespace {

std::string entry(int row, int col) { return "m_" + std::to_string(row) + std::to_string(col); }

void require_ge(Validation &v, HalfInt a, HalfInt b, const std::string &lhs, const std::string &rhs) {
  if (a < b) {
    v.valid = false;
    v.violations.push_back(lhs + " >= " + rhs);
  }
}

void check_top(Validation &v, int n, const std::vector<HalfInt> &top) {
  int k = n / 2;
  for (int j = 1; j < k; ++j) {
    if (n % 2 == 0 && j == k - 1) break;
    require_ge(v, top[static_cast<std::size_t>(j - 1)], top[static_cast<std::size_t>(j)], entry(n, j), entry(n, j + 1));
  }
  if (n % 2 == 1) {
    require_ge(v, top[static_cast<std::size_t>(k - 1)], HalfInt(0), entry(n, k), "0");
  } else if (k >= 2) {
    require_ge(v, top[static_cast<std::size_t>(k - 2)], top[static_cast<std::size_t>(k - 1)].abs(), entry(n, k - 1),
               "|" + entry(n, k) + "|");
  }
}

void check_homogeneous(Validation &v, const std::vector<HalfInt> &flat) {
  if (flat.empty()) return;
  bool integral = flat.front().is_integer();
  for (auto x : flat)
    if (x.is_integer() != integral) {
      v.valid = false;
      v.violations.push_back("entries must be all integers or all half-integers");
      return;
    }
}

}  // namespace

Validation validate_top_row(int n, const std::vector<HalfInt> &top) {
  if (n < 2) throw std::invalid_argument("n must be at least 2");
  if (static_cast<int>(top.size()) != n / 2)
    throw std::invalid_argument("top row for n=" + std::to_string(n) + " must have " + std::to_string(n / 2) + " entries");
  Validation v;
  check_homogeneous(v, top);
  check_top(v, n, top);
  return v;
}

Validation validate(const GTPattern &p) {
  Validation v;
  int n = p.n();
  check_homogeneous(v, p.flattened());
  check_top(v, n, p.row(n));
  for (int i = n; i >= 3; --i) {
    int low = i - 1;
    if (i % 2 == 1) {
      // m_{2p+1,1} >= m_{2p,1} >= m_{2p+1,2} >= ... >= m_{2p+1,p} >= m_{2p,p} >= -m_{2p+1,p}
      int pp = i / 2;
      for (int j = 1; j <= pp; ++j) {
        require_ge(v, p.m(i, j), p.m(low, j), entry(i, j), entry(low, j));
        if (j < pp) require_ge(v, p.m(low, j), p.m(i, j + 1), entry(low, j), entry(i, j + 1));
      }
      require_ge(v, p.m(low, pp), -p.m(i, pp), entry(low, pp), "-" + entry(i, pp));
    } else {
      // m_{2p,1} >= m_{2p-1,1} >= m_{2p,2} >= ... >= m_{2p-1,p-1} >= |m_{2p,p}|
      int pp = i / 2;
      for (int j = 1; j <= pp - 1; ++j) {
        require_ge(v, p.m(i, j), p.m(low, j), entry(i, j), entry(low, j));
        if (j < pp - 1) require_ge(v, p.m(low, j), p.m(i, j + 1), entry(low, j), entry(i, j + 1));
      }
      require_ge(v, p.m(low, pp - 1), p.m(i, pp).abs(), entry(low, pp - 1), "|" + entry(i, pp) + "|");
    }
  }
  return v;
}

bool is_valid(const GTPattern &p) { return validate(p).valid; }

namespace {

// Bounds of row `low` entries given the row above.
void bounds(int upper_row, const std::vector<HalfInt> &up, std::vector<std::pair<HalfInt, HalfInt>> &out) {
  out.clear();
  int pp = upper_row / 2;
  if (upper_row % 2 == 1) {
    for (int j = 1; j <= pp; ++j) {
      HalfInt hi = up[static_cast<std::size_t>(j - 1)];
      HalfInt lo = j < pp ? up[static_cast<std::size_t>(j)] : -up[static_cast<std::size_t>(pp - 1)];
      out.emplace_back(lo, hi);
    }
  } else {
    for (int j = 1; j <= pp - 1; ++j) {
      HalfInt hi = up[static_cast<std::size_t>(j - 1)];
      HalfInt lo = up[static_cast<std::size_t>(j)];
      if (j == pp - 1) lo = lo.abs();
      out.emplace_back(lo, hi);
    }
  }
}

void fill_row(int n, int row, std::size_t col, std::vector<std::vector<HalfInt>> &rows,
              std::vector<GTPattern> &out);

void descend(int n, int row, std::vector<std::vector<HalfInt>> &rows, std::vector<GTPattern> &out) {
  if (row < 2) {
    out.emplace_back(n, rows);
    return;
  }
  fill_row(n, row, 0, rows, out);
}

void fill_row(int n, int row, std::size_t col, std::vector<std::vector<HalfInt>> &rows,
              std::vector<GTPattern> &out) {
  std::size_t idx = static_cast<std::size_t>(n - row);
  if (col == rows[idx].size()) {
    descend(n, row - 1, rows, out);
    return;
  }
  std::vector<std::pair<HalfInt, HalfInt>> b;
  bounds(row + 1, rows[idx - 1], b);
  for (HalfInt v = b[col].first; v <= b[col].second; v += HalfInt(1)) {
    rows[idx][col] = v;
    fill_row(n, row, col + 1, rows, out);
  }
}

}  // namespace

std::vector<GTPattern> enumerate_basis(int n, const std::vector<HalfInt> &top) {
  Validation v = validate_top_row(n, top);
  if (!v.valid) throw std::invalid_argument("invalid top row: " + v.violations.front());
  std::vector<std::vector<HalfInt>> rows;
  rows.push_back(top);
  for (int r = n - 1; r >= 2; --r) rows.emplace_back(static_cast<std::size_t>(GTPattern::row_length(r)));
  std::vector<GTPattern> out;
  descend(n, n - 1, rows, out);
  return out;
}

std::vector<std::vector<HalfInt>> l_coords(const GTPattern &p) {
  std::vector<std::vector<HalfInt>> out;
  for (int r = p.n(); r >= 2; --r) {
    std::vector<HalfInt> row;
    for (int c = 1; c <= GTPattern::row_length(r); ++c) row.push_back(p.l(r, c));
    out.push_back(std::move(row));
  }
  return out;
}

GTPattern shift(const GTPattern &p, int row, int col, int direction) {
  if (row < 2 || row > p.n() - 1) throw std::invalid_argument("only rows 2..n-1 can be shifted");
  if (col < 1 || col > GTPattern::row_length(row)) throw std::invalid_argument("column out of range");
  if (direction != 1 && direction != -1) throw std::invalid_argument("direction must be +1 or -1");
  GTPattern r = p;
  r.set(row, col, p.m(row, col) + HalfInt(direction));
  return r;
}

std::string to_json(const GTPattern &p) {
  nlohmann::json j = nlohmann::json::array();
  for (const auto &row : p.rows()) {
    nlohmann::json jr = nlohmann::json::array();
    for (auto x : row) {
      if (x.is_integer()) jr.push_back(x.twice() / 2);
      else jr.push_back(x.to_string());
    }
    j.push_back(jr);
  }
  return j.dump();
}

namespace {

HalfInt entry_from_json(const nlohmann::json &e) {
  if (e.is_string()) return HalfInt::parse(e.get<std::string>());
  if (e.is_number_integer()) return HalfInt(static_cast<int>(e.get<long>()));
  if (e.is_number_float()) {
    double d = e.get<double>() * 2.0;
    auto tw = static_cast<std::int64_t>(d);
    if (static_cast<double>(tw) != d) throw std::invalid_argument("pattern entry is not a half-integer");
    return HalfInt::from_twice(tw);
  }
  throw std::invalid_argument("pattern entry must be a number or a string");
}

}  // namespace

GTPattern pattern_from_json(const std::string &text) {
  nlohmann::json j = nlohmann::json::parse(text);
  if (!j.is_array() || j.empty()) throw std::invalid_argument("pattern must be a non-empty array of rows");
  std::vector<std::vector<HalfInt>> rows;
  for (const auto &jr : j) {
    if (!jr.is_array()) throw std::invalid_argument("pattern rows must be arrays");
    std::vector<HalfInt> row;
    for (const auto &e : jr) row.push_back(entry_from_json(e));
    rows.push_back(std::move(row));
  }
  int n = static_cast<int>(rows.size()) + 1;
  return GTPattern(n, std::move(rows));
}

std::vector<HalfInt> parse_row(const std::string &text) {
  std::vector<HalfInt> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    auto b = item.find_first_not_of(" \t");
    auto e = item.find_last_not_of(" \t");
    if (b == std::string::npos) throw std::invalid_argument("empty entry in row '" + text + "'");
    out.push_back(HalfInt::parse(item.substr(b, e - b + 1)));
  }
  return out;
}

}  // namespace gtq
